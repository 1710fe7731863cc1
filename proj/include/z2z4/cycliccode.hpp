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

// Z2Z4-additive cyclic codes C = <(b | 0), (l | fh + 2f)> with fhg = x^beta - 1
// over Z4 and beta odd.

#ifndef Z2Z4_CYCLICCODE_HPP
#define Z2Z4_CYCLICCODE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2z4/additive.hpp"
#include "z2z4/polyring.hpp"

namespace z2z4 {

struct CyclicGenerators {
  int alpha = 0;
  int beta = 1;
  BinPoly b = BinPoly::one();
  BinPoly ell;
  QuatPoly f = QuatPoly::one();
  QuatPoly h = QuatPoly::one();
  QuatPoly g = QuatPoly::one();

  QuatPoly quat_generator() const { return f * h + 2U * f; }

  friend bool operator==(const CyclicGenerators&, const CyclicGenerators&) = default;
};

// Element of Z2[x]/(x^alpha - 1) x Z4[x]/(x^beta - 1), both sides reduced.
// For alpha = 0 the binary side is the zero ring.
struct ResidueWord {
  BinPoly bin;
  QuatPoly quat;

  friend bool operator==(const ResidueWord&, const ResidueWord&) = default;
};

ResidueWord make_residue(const BinPoly& bin, const QuatPoly& quat, int alpha, int beta);
MixedVector to_vector(const ResidueWord& w, int alpha, int beta);
ResidueWord from_vector(const MixedVector& v);

// p * (b | a) = (p~ b | p a).
ResidueWord star(const QuatPoly& p, const ResidueWord& w, int alpha, int beta);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the canonical-form conditions, including both divisibility
// conditions b | (x^beta - 1)/f~ gcd(b, l) and b | h~ gcd(b, l g~).
// Throws DomainError for even or non-positive beta.
ValidationReport validate(const CyclicGenerators& g);

class CyclicCode {
 public:
  // Reduces l mod b (recording a notice) and validates; throws DomainError
  // listing every violated condition.
  static CyclicCode from_generators(CyclicGenerators g);
  // No validation; type formulas and the divisibility-dependent operations refuse
  // to run on such codes.
  static CyclicCode from_unchecked(CyclicGenerators g);

  const CyclicGenerators& generators() const { return gens_; }
  int alpha() const { return gens_.alpha; }
  int beta() const { return gens_.beta; }
  bool checked() const { return checked_; }
  const std::optional<std::string>& notice() const { return notice_; }

  ResidueWord binary_generator() const;  // (b | 0)
  ResidueWord mixed_generator() const;   // (l | fh + 2f)

 private:
  CyclicCode(CyclicGenerators g, bool checked, std::optional<std::string> notice)
      : gens_(std::move(g)), checked_(checked), notice_(std::move(notice)) {}

  CyclicGenerators gens_;
  bool checked_;
  std::optional<std::string> notice_;
};

// gamma = alpha - deg b + deg h, delta = deg g, kappa = alpha - deg gcd(l g~, b),
// plus kappa1, kappa2, delta1, delta2. Throws PreconditionError for unchecked codes.
CodeType code_type(const CyclicCode& c);

// Generators of the order-two subcode: (b | 0) and (mu~ l g~ | 2f).
std::pair<ResidueWord, ResidueWord> order_two_generators(const CyclicCode& c);

// (b | 0), (l g~ | 2fg), (l' | fh) with l' = l - mu~ l g~.
std::array<ResidueWord, 3> three_generator_form(const CyclicCode& c);

// Rows x^i * (b | 0), i < alpha, and x^j * (l | fh + 2f), j < beta. For
// unchecked codes the second generator contributes its full shift orbit.
GeneratorMatrix realize(const CyclicCode& c);

// Rows: every distinct cyclic shift of every word. The Z-span of the rows is
// the Z4[x]-submodule generated by the words.
GeneratorMatrix cyclic_span_matrix(const std::vector<ResidueWord>& words, int alpha, int beta);

// <(b | 0), (0 | fh + 2f)>.
CyclicCode separable_cyclic(const BinPoly& b, const QuatPoly& f, const QuatPoly& h, const QuatPoly& g, int alpha,
                            int beta);

// C_X = <gcd(b, l)>, C_Y = <fh + 2f>.
struct PuncturedGenerators {
  BinPoly x_generator;
  QuatPoly y_generator;
};
PuncturedGenerators punctured_generators(const CyclicCode& c);

// Ordered (f, h, g) with fhg = x^beta - 1, one tuple per assignment of the
// Z4 factors, sorted by h then g.
std::vector<std::array<QuatPoly, 3>> quaternary_factorizations(int beta);

struct EnumerateOptions {
  bool dedupe = false;  // keep only the first tuple per distinct code
  std::uint64_t capacity = kDefaultCapacity;
};

// Every valid canonical generator tuple for (alpha, beta), ordered by b
// (degree, then coefficients), then (f, h, g), then l by bit value.
std::vector<CyclicCode> enumerate_all_cyclic(int alpha, int beta, const EnumerateOptions& opts = {});

}  // namespace z2z4

#endif  // Z2Z4_CYCLICCODE_HPP
