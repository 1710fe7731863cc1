// Copyright 2026 The z2z4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generic Z2Z4-additive codes: exact enumeration, standard form and type,
// cyclic structure, punctured codes, and brute-force linearity oracles for
// the Gray image.

#ifndef Z2Z4_ADDITIVE_HPP
#define Z2Z4_ADDITIVE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "z2z4/vectors.hpp"

namespace z2z4 {

inline constexpr std::uint64_t kDefaultCapacity = std::uint64_t{1} << 24;

struct GeneratorMatrix {
  int alpha = 0;
  int beta = 0;
  std::vector<MixedVector> rows;

  // Throws DomainError when a row does not have shape (alpha | beta).
  void check_shape() const;
};

// Type (alpha, beta; gamma, delta; kappa); |C| = 2^(gamma + 2 delta).
struct CodeType {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;
  int kappa = 0;
  std::optional<int> kappa1, kappa2, delta1, delta2;

  int log2_size() const { return gamma + 2 * delta; }
  bool same_main(const CodeType& o) const {
    return alpha == o.alpha && beta == o.beta && gamma == o.gamma && delta == o.delta && kappa == o.kappa;
  }
};

// Packs (u | u') into 64 bits so that integer order equals codeword order:
// binary coordinate 0 is the most significant bit, then 2-bit quaternary
// digits with coordinate 0 most significant.
class CodeLayout {
 public:
  CodeLayout(int alpha, int beta);

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }

  std::uint64_t encode(const MixedVector& v) const;
  MixedVector decode(std::uint64_t key) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t bin = (a ^ b) & bin_mask_;
    const std::uint64_t q = (((a & lo_) + (b & lo_)) ^ ((a ^ b) & hi_)) & (lo_ | hi_);
    return bin | q;
  }
  std::uint64_t twice(std::uint64_t a) const { return (a & lo_) << 1; }
  std::uint64_t quat_reduction(std::uint64_t a) const;  // bit j set iff u'_j odd

 private:
  int alpha_, beta_;
  std::uint64_t bin_mask_ = 0, lo_ = 0, hi_ = 0;
};

// An exactly enumerated additive code: its codewords as sorted packed keys.
class AdditiveCode {
 public:
  AdditiveCode(int alpha, int beta, std::vector<std::uint64_t> keys);  // keys sorted and deduplicated here
  static AdditiveCode from_words(int alpha, int beta, const std::vector<MixedVector>& words);

  int alpha() const { return layout_.alpha(); }
  int beta() const { return layout_.beta(); }
  const CodeLayout& layout() const { return layout_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<std::uint64_t>& keys() const { return keys_; }

  bool contains(const MixedVector& v) const;
  bool contains_key(std::uint64_t key) const;
  MixedVector word(std::size_t i) const { return layout_.decode(keys_[i]); }
  std::vector<MixedVector> words() const;

  friend bool operator==(const AdditiveCode& a, const AdditiveCode& b) {
    return a.alpha() == b.alpha() && a.beta() == b.beta() && a.keys_ == b.keys_;
  }

 private:
  CodeLayout layout_;
  std::vector<std::uint64_t> keys_;
};

// All Z-combinations of the rows, built by subgroup closure (each new row
// either lies in the current code or extends it by index 2 or 4).
AdditiveCode enumerate(const GeneratorMatrix& m, std::uint64_t capacity = kDefaultCapacity);

// Standard generator matrix, in permuted coordinates:
//
//   ( I_k  T_b | 2T_2  0        0   )
//   ( 0    0   | 2T_1  2I_{g-k} 0   )
//   ( 0    S_b | S_q   R        I_d )
//
// New binary column j is old binary column bin_perm[j]; likewise quat_perm.
struct StandardForm {
  GeneratorMatrix matrix;
  CodeType type;
  std::vector<int> bin_perm;
  std::vector<int> quat_perm;
};
StandardForm standard_form(const GeneratorMatrix& m);

// Applies the column permutations of a StandardForm to a vector.
MixedVector permute_columns(const MixedVector& v, const std::vector<int>& bin_perm, const std::vector<int>& quat_perm);

struct CyclicityCheck {
  bool cyclic = true;
  std::optional<MixedVector> witness;  // first codeword whose shift leaves the code
};
CyclicityCheck check_cyclic(const AdditiveCode& c);
inline bool is_cyclic(const AdditiveCode& c) { return check_cyclic(c).cyclic; }

AdditiveCode shift(const AdditiveCode& c);
GeneratorMatrix shift(const GeneratorMatrix& m);

AdditiveCode puncture_x(const AdditiveCode& c);  // shape (alpha | 0)
AdditiveCode puncture_y(const AdditiveCode& c);  // shape (0 | beta)
bool is_separable(const AdditiveCode& c);
AdditiveCode order_two_subcode(const AdditiveCode& c);

// For separable codes: cyclic iff both punctured codes are cyclic.
struct SeparableCyclicity {
  bool separable = false;
  bool cyclic = false;
  bool x_cyclic = false;
  bool y_cyclic = false;
};
SeparableCyclicity separable_cyclicity(const AdditiveCode& c);

// Verdict of "2 u * v in C for all u, v in C", with a violating pair.
struct OracleResult {
  bool linear = true;
  std::optional<std::pair<MixedVector, MixedVector>> witness;
  std::optional<MixedVector> product;  // 2 u * v for the witness
};

// Exhaustive over all codeword pairs. 2 u * v only depends on the reductions
// mod 2 of the quaternary blocks, so each reduction class is visited once
// (represented by its smallest codeword). Throws CapacityError when the
// number of class pairs exceeds capacity.
OracleResult gray_is_linear_oracle(const AdditiveCode& c, std::uint64_t capacity = kDefaultCapacity);
// Pairs of generator rows only (the map is bilinear); membership is checked
// against the enumerated code.
OracleResult gray_is_linear_oracle(const AdditiveCode& c, const GeneratorMatrix& gens);

// Binary words of length n packed with coordinate 0 as the most significant
// bit; sorted, deduplicated.
class BinaryCode {
 public:
  BinaryCode(int length, std::vector<std::uint64_t> words);
  static BinaryCode from_vectors(int length, const std::vector<BitVec>& words);
  // Z2-span of the given vectors.
  static BinaryCode span(int length, const std::vector<BitVec>& gens, std::uint64_t capacity = kDefaultCapacity);

  int length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }
  bool contains(std::uint64_t w) const;
  BitVec vector(std::size_t i) const;
  std::uint64_t pack(const BitVec& v) const;
  // Closed under addition (contains 0 and has 2^rank elements).
  bool is_linear() const;
  int rank() const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  int length_;
  std::vector<std::uint64_t> words_;
};

BinaryCode gray_image(const AdditiveCode& c);
BinaryCode nechaev_gray_image(const AdditiveCode& c);

// Direct check of the image: Phi(C) closed under bitwise addition.
inline bool gray_image_is_linear(const AdditiveCode& c) { return gray_image(c).is_linear(); }

}  // namespace z2z4

#endif  // Z2Z4_ADDITIVE_HPP
