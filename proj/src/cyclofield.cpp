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

#include "z2z4/cyclofield.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

using Elem = Gf2m::Elem;

bool bit(const Elem& e, int i) { return (e[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1U; }

void set_bit(Elem& e, int i) { e[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64); }

Elem shl1(const Elem& e) {
  return {e[0] << 1, (e[1] << 1) | (e[0] >> 63), (e[2] << 1) | (e[1] >> 63), (e[3] << 1) | (e[2] >> 63)};
}

Elem to_elem(const BinPoly& p) {
  if (p.degree() > 255) throw CapacityError("binary polynomial too long for GF(2^m) arithmetic");
  Elem e{};
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i]) set_bit(e, static_cast<int>(i));
  return e;
}

BinPoly to_poly(const Elem& e) {
  std::vector<std::uint8_t> c(256, 0);
  for (int i = 0; i < 256; ++i) c[static_cast<std::size_t>(i)] = bit(e, i) ? 1 : 0;
  return BinPoly(std::move(c));
}

// Arithmetic in Z2[x]/(modulus) for any modulus of degree m; the ring is a
// field only when the modulus is irreducible.
Elem mulmod(const Elem& a, const Elem& b, int m, const Elem& modulus) {
  Elem r{};
  for (int i = m - 1; i >= 0; --i) {
    r = shl1(r);
    if (bit(r, m)) r = Gf2m::add(r, modulus);
    if (bit(b, i)) r = Gf2m::add(r, a);
  }
  return r;
}

Elem x_pow_2k(int k, int m, const Elem& modulus) {
  Elem e{};
  set_bit(e, 1);
  if (m == 1) e = Gf2m::add(e, modulus);
  for (int i = 0; i < k; ++i) e = mulmod(e, e, m, modulus);
  return e;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_odd_length(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("length must be odd and positive, got " + std::to_string(n));
  if (n > kMaxCycloLength)
    throw CapacityError("length " + std::to_string(n) + " exceeds the bound " + std::to_string(kMaxCycloLength));
}

}  // namespace

CosetTable cyclotomic_cosets(int n) {
  require_odd_length(n);
  CosetTable t;
  t.n = n;
  t.coset_index.assign(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    if (t.coset_index[static_cast<std::size_t>(r)] >= 0) continue;
    std::vector<int> c;
    int e = r;
    do {
      c.push_back(e);
      t.coset_index[static_cast<std::size_t>(e)] = static_cast<int>(t.cosets.size());
      e = (2 * e) % n;
    } while (e != r);
    std::sort(c.begin(), c.end());
    t.cosets.push_back(std::move(c));
  }
  return t;
}

int order_of_two(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("order of 2 needs odd n");
  if (n == 1) return 1;
  int k = 1;
  for (long v = 2 % n; v != 1; v = (v * 2) % n) ++k;
  return k;
}

bool is_irreducible(const BinPoly& p) {
  const int m = p.degree();
  if (m < 1) return false;
  if (m == 1) return true;
  if (m > 255) throw CapacityError("irreducibility test limited to degree 255");
  const Elem mod = to_elem(p);
  Elem x{};
  set_bit(x, 1);
  if (x_pow_2k(m, m, mod) != x) return false;
  for (int q : prime_factors(m)) {
    const Elem e = Gf2m::add(x_pow_2k(m / q, m, mod), x);
    if (!gcd2(to_poly(e), p).is_one()) return false;
  }
  return true;
}

BinPoly smallest_irreducible(int m) {
  if (m < 1 || m > 255) throw CapacityError("irreducible degree must lie in 1..255");
  for (std::uint64_t low = 0;; ++low) {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(m) + 1, 0);
    c.back() = 1;
    for (int i = 0; i < m && i < 64; ++i) c[static_cast<std::size_t>(i)] = (low >> i) & 1U;
    BinPoly p(std::move(c));
    if (is_irreducible(p)) return p;
  }
}

Gf2m::Gf2m(const BinPoly& modulus) : m_(modulus.degree()), modulus_(), modulus_poly_(modulus) {
  if (m_ < 1 || m_ > 255) throw DomainError("GF(2^m) modulus degree must lie in 1..255");
  if (!is_irreducible(modulus)) throw DomainError(to_string(modulus) + " is not irreducible");
  modulus_ = to_elem(modulus);
}

Gf2m Gf2m::smallest(int m) { return Gf2m(smallest_irreducible(m)); }

Gf2m::Elem Gf2m::mul(const Elem& a, const Elem& b) const { return mulmod(a, b, m_, modulus_); }

Gf2m::Elem Gf2m::pow(const Elem& a, std::uint64_t e) const {
  Elem r = one(), base = a;
  for (; e; e >>= 1) {
    if (e & 1U) r = mul(r, base);
    base = mul(base, base);
  }
  return r;
}

Gf2m::Elem Gf2m::pow(const Elem& a, const std::vector<std::uint32_t>& e) const {
  Elem r = one();
  for (std::size_t limb = e.size(); limb-- > 0;)
    for (int i = 31; i >= 0; --i) {
      r = mul(r, r);
      if ((e[limb] >> i) & 1U) r = mul(r, a);
    }
  return r;
}

CycloTables make_cyclo_tables(int n, const BinPoly& modulus) {
  require_odd_length(n);
  CycloTables t;
  t.n = n;
  t.m = order_of_two(n);
  if (modulus.degree() != t.m)
    throw DomainError("modulus degree " + std::to_string(modulus.degree()) + " differs from ord_n(2) = " +
                      std::to_string(t.m));
  const Gf2m field(modulus);
  t.modulus = modulus;
  t.cosets = cyclotomic_cosets(n);

  // (2^m - 1) / n as 32-bit limbs.
  std::vector<std::uint32_t> num(static_cast<std::size_t>((t.m + 31) / 32), 0);
  for (int i = 0; i < t.m; ++i) num[static_cast<std::size_t>(i / 32)] |= std::uint32_t{1} << (i % 32);
  std::uint64_t rem = 0;
  for (std::size_t i = num.size(); i-- > 0;) {
    const std::uint64_t cur = (rem << 32) | num[i];
    num[i] = static_cast<std::uint32_t>(cur / static_cast<std::uint64_t>(n));
    rem = cur % static_cast<std::uint64_t>(n);
  }
  if (rem != 0) throw InternalError("n does not divide 2^m - 1");

  const auto primes = prime_factors(n);
  Elem xi{};
  bool found = false;
  for (std::uint64_t seed = (t.m == 1 ? 1 : 2); !found; ++seed) {
    if (t.m < 64 && seed >> t.m) throw InternalError("no primitive n-th root of unity found");
    const Elem z = field.pow(Gf2m::from_bits(seed), num);
    if (z == Gf2m::zero()) continue;
    bool primitive = field.pow(z, static_cast<std::uint64_t>(n)) == Gf2m::one();
    for (int p : primes) primitive = primitive && field.pow(z, static_cast<std::uint64_t>(n / p)) != Gf2m::one();
    if (primitive) {
      xi = z;
      t.xi_seed = seed;
      found = true;
    }
  }

  std::vector<Elem> powers(static_cast<std::size_t>(n));
  powers[0] = Gf2m::one();
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = field.mul(powers[i - 1], xi);

  for (const auto& coset : t.cosets.cosets) {
    std::vector<Elem> c{Gf2m::one()};  // ascending coefficients in GF(2^m)
    for (int j : coset) {
      std::vector<Elem> next(c.size() + 1, Gf2m::zero());
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] = Gf2m::add(next[i + 1], c[i]);
        next[i] = Gf2m::add(next[i], field.mul(c[i], powers[static_cast<std::size_t>(j)]));
      }
      c = std::move(next);
    }
    std::vector<std::uint8_t> bits;
    for (const auto& e : c) {
      if (e != Gf2m::zero() && e != Gf2m::one()) throw InternalError("minimal polynomial left Z2");
      bits.push_back(e == Gf2m::one() ? 1 : 0);
    }
    t.minimal.emplace_back(std::move(bits));
  }
  return t;
}

const CycloTables& cyclo_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const CycloTables>> cache;
  require_odd_length(n);
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const CycloTables>(make_cyclo_tables(n, smallest_irreducible(order_of_two(n))));
  return *slot;
}

std::vector<BinPoly> factor_xn_minus_1_z2(int n) {
  auto out = cyclo_tables(n).minimal;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuatPoly> factor_xn_minus_1_z4(int n) {
  std::vector<QuatPoly> out;
  for (const auto& p : cyclo_tables(n).minimal) out.push_back(graeffe_lift(p, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BinPoly> binary_divisors_xn_minus_1(int n) {
  if (n < 1) throw DomainError("x^n - 1 divisors need n >= 1");
  int mult = 1, odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    mult *= 2;
  }
  const auto factors = factor_xn_minus_1_z2(odd);
  std::vector<BinPoly> out{BinPoly::one()};
  for (const auto& f : factors) {
    std::vector<BinPoly> next;
    for (const auto& d : out) {
      BinPoly acc = d;
      for (int e = 0; e <= mult; ++e) {
        next.push_back(acc);
        acc = acc * f;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSet roots_of(const BinPoly& p, const CycloTables& t) {
  if (p.is_zero() || !divides(p, BinPoly::x_n_minus_1(t.n)))
    throw DomainError(to_string(p) + " does not divide x^" + std::to_string(t.n) + "-1 over Z2");
  RootSet s{t.n, {}};
  BinPoly check = BinPoly::one();
  for (std::size_t c = 0; c < t.cosets.cosets.size(); ++c) {
    if (!divides(t.minimal[c], p)) continue;
    check = check * t.minimal[c];
    s.exponents.insert(s.exponents.end(), t.cosets.cosets[c].begin(), t.cosets.cosets[c].end());
  }
  if (check != p) throw InternalError("root set of " + to_string(p) + " does not reproduce it");
  std::sort(s.exponents.begin(), s.exponents.end());
  return s;
}

RootSet roots_of(const BinPoly& p, int n) { return roots_of(p, cyclo_tables(n)); }

BinPoly poly_from_roots(const RootSet& s, const CycloTables& t) {
  std::vector<char> in(static_cast<std::size_t>(t.n), 0);
  for (int e : s.exponents) in[static_cast<std::size_t>(e)] = 1;
  BinPoly out = BinPoly::one();
  for (std::size_t c = 0; c < t.cosets.cosets.size(); ++c) {
    const auto& coset = t.cosets.cosets[c];
    const bool any = in[static_cast<std::size_t>(coset.front())];
    for (int e : coset)
      if (bool(in[static_cast<std::size_t>(e)]) != any) throw DomainError("exponent set is not closed under doubling");
    if (any) out = out * t.minimal[c];
  }
  return out;
}

RootSet sumset(const RootSet& s) {
  std::vector<char> in(static_cast<std::size_t>(s.n), 0);
  for (int i : s.exponents)
    for (int j : s.exponents) in[static_cast<std::size_t>((i + j) % s.n)] = 1;
  RootSet out{s.n, {}};
  for (int k = 0; k < s.n; ++k)
    if (in[static_cast<std::size_t>(k)]) out.exponents.push_back(k);
  return out;
}

BinPoly tensor_square(const BinPoly& p, const CycloTables& t) { return poly_from_roots(sumset(roots_of(p, t)), t); }

BinPoly tensor_square(const BinPoly& p, int n) { return tensor_square(p, cyclo_tables(n)); }

}  // namespace z2z4
