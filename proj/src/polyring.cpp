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

#include "z2z4/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "z2z4/errors.hpp"

namespace z2z4 {

template <unsigned Mod>
Poly<Mod>::Poly(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c = static_cast<Coeff>(c % Mod);
  trim();
}

template <unsigned Mod>
Poly<Mod>::Poly(std::initializer_list<int> ascending) {
  coeffs_.reserve(ascending.size());
  for (int c : ascending) coeffs_.push_back(static_cast<Coeff>(((c % int(Mod)) + int(Mod)) % int(Mod)));
  trim();
}

template <unsigned Mod>
Poly<Mod> Poly<Mod>::monomial(int degree, Coeff c) {
  if (degree < 0) throw DomainError("monomial of negative degree");
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(std::move(v));
}

template <unsigned Mod>
Poly<Mod> Poly<Mod>::x_n_minus_1(int n) {
  if (n < 0) throw DomainError("x^n - 1 with negative n");
  if (n == 0) return Poly();
  std::vector<Coeff> v(static_cast<std::size_t>(n) + 1, 0);
  v[0] = static_cast<Coeff>(Mod - 1);
  v.back() = 1;
  return Poly(std::move(v));
}

template <unsigned Mod>
void Poly<Mod>::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

template <unsigned Mod>
Poly<Mod>& Poly<Mod>::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = static_cast<Coeff>((coeffs_[i] + o.coeffs_[i]) % Mod);
  trim();
  return *this;
}

template <unsigned Mod>
Poly<Mod>& Poly<Mod>::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = static_cast<Coeff>((coeffs_[i] + Mod - o.coeffs_[i]) % Mod);
  trim();
  return *this;
}

template <unsigned Mod>
Poly<Mod> Poly<Mod>::mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<unsigned> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) acc[i + j] += unsigned(a.coeffs_[i]) * b.coeffs_[j];
  }
  std::vector<Coeff> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Coeff>(acc[i] % Mod);
  return Poly(std::move(out));
}

template <unsigned Mod>
Poly<Mod> Poly<Mod>::scale(const Poly& a, unsigned c) {
  std::vector<Coeff> out(a.coeffs_);
  for (auto& x : out) x = static_cast<Coeff>((x * c) % Mod);
  return Poly(std::move(out));
}

template <unsigned Mod>
bool Poly<Mod>::less(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

template <unsigned Mod>
Poly<Mod> Poly<Mod>::reduce_cyclic(int n) const {
  if (n <= 0) throw DomainError("cyclic reduction needs n >= 1");
  std::vector<unsigned> acc(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc[i % static_cast<std::size_t>(n)] += coeffs_[i];
  std::vector<Coeff> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Coeff>(acc[i] % Mod);
  return Poly(std::move(out));
}

template <unsigned Mod>
Poly<Mod> Poly<Mod>::shift_cyclic(int k, int n) const {
  if (n <= 0) throw DomainError("cyclic shift needs n >= 1");
  const Poly r = reduce_cyclic(n);
  std::vector<Coeff> out(static_cast<std::size_t>(n), 0);
  const int kk = ((k % n) + n) % n;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) out[(i + static_cast<std::size_t>(kk)) % static_cast<std::size_t>(n)] = r.coeffs_[i];
  return Poly(std::move(out));
}

template <unsigned Mod>
std::vector<typename Poly<Mod>::Coeff> Poly<Mod>::to_vector(int n) const {
  std::vector<Coeff> out(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (std::size_t i = 0; i < out.size() && i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  return out;
}

template class Poly<2>;
template class Poly<4>;

template <unsigned Mod>
DivMod<Mod> divmod(const Poly<Mod>& a, const Poly<Mod>& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (!d.is_monic()) throw DomainError("division by a non-monic polynomial over Z4: " + to_string(d));
  if (a.degree() < d.degree()) return {Poly<Mod>(), a};
  std::vector<std::uint8_t> r(a.coeffs());
  const auto& dc = d.coeffs();
  const std::size_t dd = dc.size() - 1;
  std::vector<std::uint8_t> q(r.size() - dd, 0);
  for (std::size_t i = r.size(); i-- > dd;) {
    const unsigned c = r[i];
    if (c == 0) continue;
    q[i - dd] = static_cast<std::uint8_t>(c);
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = static_cast<std::uint8_t>((r[i - dd + j] + Mod * Mod - c * dc[j]) % Mod);
  }
  return {Poly<Mod>(std::move(q)), Poly<Mod>(std::move(r))};
}

template DivMod<2> divmod(const Poly<2>&, const Poly<2>&);
template DivMod<4> divmod(const Poly<4>&, const Poly<4>&);

template <unsigned Mod>
Poly<Mod> exact_div(const Poly<Mod>& a, const Poly<Mod>& d) {
  auto [q, r] = divmod(a, d);
  if (!r.is_zero()) throw InternalError("inexact division of " + to_string(a) + " by " + to_string(d));
  return q;
}

template Poly<2> exact_div(const Poly<2>&, const Poly<2>&);
template Poly<4> exact_div(const Poly<4>&, const Poly<4>&);

BinPoly gcd2(const BinPoly& a, const BinPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  BinPoly x = a, y = b;
  while (!y.is_zero()) {
    BinPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;  // nonzero binary polynomials are monic
}

ExtGcd ext_gcd2(const BinPoly& a, const BinPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  BinPoly r0 = a, r1 = b;
  BinPoly s0 = BinPoly::one(), s1;
  BinPoly t0, t1 = BinPoly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return {r0, s0, t0};
}

BinPoly reduce_mod2(const QuatPoly& p) {
  return BinPoly(std::vector<std::uint8_t>(p.coeffs()));
}

QuatPoly lift01(const BinPoly& p) {
  return QuatPoly(std::vector<std::uint8_t>(p.coeffs()));
}

QuatPoly graeffe_lift(const BinPoly& p2, int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("Graeffe lift needs odd n, got " + std::to_string(n));
  if (p2.is_zero() || !divides(p2, BinPoly::x_n_minus_1(n)))
    throw DomainError(to_string(p2) + " does not divide x^" + std::to_string(n) + "-1 over Z2");
  // p2(x) = e(x^2) + x o(x^2); the lift q satisfies q(x^2) = +-(e(x)^2 - x o(x)^2)
  // with e, o read in Z4 and the variable renamed.
  std::vector<std::uint8_t> ev, od;
  for (std::size_t i = 0; i < p2.coeffs().size(); ++i) (i % 2 == 0 ? ev : od).push_back(p2.coeffs()[i]);
  const QuatPoly e(std::move(ev)), o(std::move(od));
  QuatPoly q = e * e - QuatPoly::monomial(1) * o * o;
  if (q.lead() == 3) q = -q;
  if (!q.is_monic() || reduce_mod2(q) != p2 || !divides(q, QuatPoly::x_n_minus_1(n)))
    throw InternalError("Graeffe lift of " + to_string(p2) + " failed");
  return q;
}

BezoutPair bezout_lift(const QuatPoly& h, const QuatPoly& g) {
  const auto eg = ext_gcd2(reduce_mod2(h), reduce_mod2(g));
  if (!eg.gcd.is_one())
    throw DomainError("reductions of " + to_string(h) + " and " + to_string(g) + " are not coprime");
  const QuatPoly lam = lift01(eg.s), mu = lift01(eg.t);
  // lam h + mu g = 1 + s with s = 0 mod 2, and (1 + s)^2 = 1 mod 4.
  const QuatPoly corr = lam * h + mu * g;
  BezoutPair out{lam * corr, mu * corr};
  if (!(out.lambda * h + out.mu * g).is_one()) throw InternalError("Bezout lift identity failed");
  return out;
}

namespace {

[[noreturn]] void bad_poly(std::string_view text, const std::string& why) {
  throw DomainError("cannot parse polynomial '" + std::string(text) + "': " + why);
}

long parse_int(std::string_view s, std::string_view all) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) bad_poly(all, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

template <unsigned Mod>
Poly<Mod> parse_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad_poly(text, "empty");

  std::vector<std::uint8_t> acc;
  auto add_term = [&](long exp, long coeff) {
    if (exp < 0 || exp > 100000) bad_poly(text, "exponent out of range");
    if (coeff < 0 || coeff >= long(Mod)) bad_poly(text, "coefficient out of range for Z" + std::to_string(Mod));
    if (acc.size() <= static_cast<std::size_t>(exp)) acc.resize(static_cast<std::size_t>(exp) + 1, 0);
    acc[static_cast<std::size_t>(exp)] = static_cast<std::uint8_t>((acc[static_cast<std::size_t>(exp)] + coeff) % Mod);
  };

  if (s.front() == '[') {
    if (s.back() != ']') bad_poly(text, "unterminated array");
    std::string_view body(s.data() + 1, s.size() - 2);
    long exp = 0;
    while (!body.empty()) {
      auto comma = body.find(',');
      add_term(exp++, parse_int(body.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (body.empty()) bad_poly(text, "trailing comma");
    }
    return Poly<Mod>(std::move(acc));
  }

  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (i != 0) {
      bad_poly(text, "expected '+' or '-'");
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    long coeff = 1;
    bool have_coeff = j > i;
    if (have_coeff) coeff = parse_int(std::string_view(s).substr(i, j - i), text);
    i = j;
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) bad_poly(text, "dangling '*'");
      ++i;
    }
    long exp = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) bad_poly(text, "missing exponent");
        exp = parse_int(std::string_view(s).substr(i, j - i), text);
        i = j;
      }
    } else if (!have_coeff) {
      bad_poly(text, "empty term");
    }
    if (coeff >= long(Mod)) bad_poly(text, "coefficient out of range for Z" + std::to_string(Mod));
    add_term(exp, neg ? (long(Mod) - coeff) % long(Mod) : coeff);
  }
  return Poly<Mod>(std::move(acc));
}

template BinPoly parse_poly<2>(std::string_view);
template QuatPoly parse_poly<4>(std::string_view);

template <unsigned Mod>
std::string to_string(const Poly<Mod>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const unsigned c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

template std::string to_string(const Poly<2>&);
template std::string to_string(const Poly<4>&);

std::uint64_t bit_value(const BinPoly& p) {
  if (p.degree() >= 64) throw CapacityError("binary polynomial too long for a 64-bit value");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i]) v |= std::uint64_t{1} << i;
  return v;
}

BinPoly from_bit_value(std::uint64_t v) {
  std::vector<std::uint8_t> c;
  for (; v; v >>= 1) c.push_back(static_cast<std::uint8_t>(v & 1));
  return BinPoly(std::move(c));
}

}  // namespace z2z4
