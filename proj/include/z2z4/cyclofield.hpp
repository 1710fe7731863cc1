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

// Cyclotomic cosets, GF(2^m) arithmetic and the factorization of x^n - 1
// (n odd) over Z2 and Z4, together with the tensor square (p (x) p).

#ifndef Z2Z4_CYCLOFIELD_HPP
#define Z2Z4_CYCLOFIELD_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "z2z4/polyring.hpp"

namespace z2z4 {

// Largest odd length accepted by the splitting-field machinery.
inline constexpr int kMaxCycloLength = 255;

// Partition of {0, ..., n-1} into 2-cyclotomic cosets. Each coset is sorted,
// so its first element is the representative; cosets are ordered by
// representative.
struct CosetTable {
  int n = 1;
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_index;  // exponent -> index into cosets

  const std::vector<int>& coset_of(int e) const { return cosets[static_cast<std::size_t>(coset_index[static_cast<std::size_t>(e)])]; }
};

CosetTable cyclotomic_cosets(int n);

// Multiplicative order of 2 mod n (n odd); 1 for n = 1.
int order_of_two(int n);

// GF(2^m) as Z2[x] modulo an irreducible polynomial of degree m <= 255.
class Gf2m {
 public:
  using Elem = std::array<std::uint64_t, 4>;

  // Throws DomainError unless modulus is irreducible of degree 1..255.
  explicit Gf2m(const BinPoly& modulus);
  // Field built on the lexicographically smallest irreducible of degree m.
  static Gf2m smallest(int m);

  int degree() const { return m_; }
  const BinPoly& modulus() const { return modulus_poly_; }

  static Elem zero() { return {}; }
  static Elem one() { return {1, 0, 0, 0}; }
  static Elem from_bits(std::uint64_t v) { return {v, 0, 0, 0}; }
  static Elem add(const Elem& a, const Elem& b) {
    return {a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2], a[3] ^ b[3]};
  }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  // a^e with e given as little-endian 32-bit limbs.
  Elem pow(const Elem& a, const std::vector<std::uint32_t>& e) const;

 private:
  Gf2m(int m, Elem modulus, BinPoly poly) : m_(m), modulus_(modulus), modulus_poly_(std::move(poly)) {}

  int m_;
  Elem modulus_;
  BinPoly modulus_poly_;
};

// Rabin irreducibility test over Z2.
bool is_irreducible(const BinPoly& p);
BinPoly smallest_irreducible(int m);

// Exponent set S describing p = prod_{i in S} (x - xi^i) for a fixed
// primitive n-th root of unity xi. Always closed under doubling mod n.
struct RootSet {
  int n = 1;
  std::vector<int> exponents;  // sorted

  friend bool operator==(const RootSet&, const RootSet&) = default;
};

// Everything derived from one choice of GF(2^m) modulus and root xi for odd
// n. Immutable once built.
struct CycloTables {
  int n = 1;
  int m = 1;
  BinPoly modulus;
  std::uint64_t xi_seed = 0;  // xi = seed^((2^m - 1) / n) with seed read as bits
  CosetTable cosets;
  std::vector<BinPoly> minimal;  // minimal polynomial of xi^rep, per coset
};

CycloTables make_cyclo_tables(int n, const BinPoly& modulus);
// Cached tables for the default modulus; thread-safe.
const CycloTables& cyclo_tables(int n);

// Irreducible factors of x^n - 1 over Z2, sorted canonically.
std::vector<BinPoly> factor_xn_minus_1_z2(int n);
// Monic basic-irreducible factors of x^n - 1 over Z4 (Graeffe lifts of the
// Z2 factors), sorted canonically.
std::vector<QuatPoly> factor_xn_minus_1_z4(int n);
// All monic divisors of x^n - 1 over Z2 for any n >= 1 (n may be even),
// sorted canonically.
std::vector<BinPoly> binary_divisors_xn_minus_1(int n);

RootSet roots_of(const BinPoly& p, const CycloTables& tables);
RootSet roots_of(const BinPoly& p, int n);
BinPoly poly_from_roots(const RootSet& s, const CycloTables& tables);

// (p (x) p): the divisor of x^n - 1 whose roots are all products of two
// roots of p, i.e. the exponent sumset S + S mod n.
BinPoly tensor_square(const BinPoly& p, const CycloTables& tables);
BinPoly tensor_square(const BinPoly& p, int n);

RootSet sumset(const RootSet& s);

}  // namespace z2z4

#endif  // Z2Z4_CYCLOFIELD_HPP
