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

// Dense univariate polynomials over Z2 and Z4.

#ifndef Z2Z4_POLYRING_HPP
#define Z2Z4_POLYRING_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z2z4 {

// Degree reported for the zero polynomial.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

// Polynomial with coefficients in Z/Mod, Mod in {2, 4}. Coefficients are
// stored ascending (index i holds the coefficient of x^i) with no trailing
// zeros, so the zero polynomial has an empty coefficient vector.
template <unsigned Mod>
class Poly {
  static_assert(Mod == 2 || Mod == 4, "only Z2[x] and Z4[x] are supported");

 public:
  using Coeff = std::uint8_t;
  static constexpr unsigned kModulus = Mod;

  Poly() = default;
  // Coefficients are reduced mod Mod and trailing zeros dropped.
  explicit Poly(std::vector<Coeff> ascending);
  Poly(std::initializer_list<int> ascending);

  static Poly zero() { return Poly(); }
  static Poly one() { return monomial(0); }
  static Poly monomial(int degree, Coeff c = 1);
  // x^n - 1.
  static Poly x_n_minus_1(int n);

  int degree() const { return coeffs_.empty() ? kDegreeNegInf : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Coeff lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Coeff coeff(int i) const {
    return (i >= 0 && static_cast<std::size_t>(i) < coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(const Poly& a, const Poly& b) { return Poly::mul(a, b); }
  friend Poly operator*(unsigned c, const Poly& a) { return Poly::scale(a, c); }

  friend bool operator==(const Poly&, const Poly&) = default;
  // Canonical order: by degree, then by coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b) { return Poly::less(a, b); }

  // p(x) -> p(x) mod (x^n - 1), folding exponents.
  Poly reduce_cyclic(int n) const;
  // Multiplies by x^k modulo x^n - 1 (cyclic shift of the coefficient vector).
  Poly shift_cyclic(int k, int n) const;
  // Coefficient vector padded or truncated to length n.
  std::vector<Coeff> to_vector(int n) const;

 private:
  static Poly mul(const Poly& a, const Poly& b);
  static Poly scale(const Poly& a, unsigned c);
  static bool less(const Poly& a, const Poly& b);
  void trim();

  std::vector<Coeff> coeffs_;
};

using BinPoly = Poly<2>;
using QuatPoly = Poly<4>;

extern template class Poly<2>;
extern template class Poly<4>;

template <unsigned Mod>
struct DivMod {
  Poly<Mod> quot;
  Poly<Mod> rem;
};

// a = q d + r with deg r < deg d. Over Z4 the divisor must be monic.
template <unsigned Mod>
DivMod<Mod> divmod(const Poly<Mod>& a, const Poly<Mod>& d);

template <unsigned Mod>
Poly<Mod> operator%(const Poly<Mod>& a, const Poly<Mod>& d) {
  return divmod(a, d).rem;
}

template <unsigned Mod>
bool divides(const Poly<Mod>& d, const Poly<Mod>& a) {
  return divmod(a, d).rem.is_zero();
}

// a / d, throwing InternalError when the division is not exact.
template <unsigned Mod>
Poly<Mod> exact_div(const Poly<Mod>& a, const Poly<Mod>& d);

// Monic gcd over Z2. Throws DomainError when both arguments are zero.
BinPoly gcd2(const BinPoly& a, const BinPoly& b);

struct ExtGcd {
  BinPoly gcd;
  BinPoly s;  // s a + t b = gcd
  BinPoly t;
};
ExtGcd ext_gcd2(const BinPoly& a, const BinPoly& b);

// Coefficient-wise reduction mod 2 (the tilde map).
BinPoly reduce_mod2(const QuatPoly& p);
// Embeds a binary polynomial into Z4[x] with coefficients in {0, 1}.
QuatPoly lift01(const BinPoly& p);

// Hensel lift of a divisor of x^n - 1 (n odd) from Z2[x] to Z4[x] via one
// Graeffe step. The result is monic, reduces to p2 and divides x^n - 1.
QuatPoly graeffe_lift(const BinPoly& p2, int n);

// lambda h + mu g = 1 in Z4[x] (not reduced modulo anything).
struct BezoutPair {
  QuatPoly lambda;
  QuatPoly mu;
};
BezoutPair bezout_lift(const QuatPoly& h, const QuatPoly& g);

// Human form "x^3+2x^2+x+3" (terms in any order, '+' or '-') or array form
// "[3,1,2,1]" (ascending). Throws DomainError on malformed input.
template <unsigned Mod>
Poly<Mod> parse_poly(std::string_view text);

// Descending human form; "0" for the zero polynomial.
template <unsigned Mod>
std::string to_string(const Poly<Mod>& p);

// Ascending coefficient array as ints.
template <unsigned Mod>
std::vector<int> to_array(const Poly<Mod>& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

// Integer value sum c_i 2^i of a binary polynomial (for ordering).
std::uint64_t bit_value(const BinPoly& p);
BinPoly from_bit_value(std::uint64_t v);

}  // namespace z2z4

#endif  // Z2Z4_POLYRING_HPP
