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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "z2z4/cyclofield.hpp"
#include "z2z4/errors.hpp"

using namespace z2z4;

namespace {

bool trial_irreducible(const BinPoly& p) {
  if (p.degree() < 1) return false;
  for (std::uint64_t v = 2; v < (std::uint64_t{1} << (p.degree() / 2 + 1)); ++v) {
    const BinPoly d = from_bit_value(v);
    if (d.degree() >= 1 && d.degree() <= p.degree() / 2 && divides(d, p)) return false;
  }
  return true;
}

// Exponents i with p(xi^i) = 0, found by evaluating p in GF(2^m) at every
// power of xi = seed^((2^m - 1) / n).
std::vector<int> roots_by_evaluation(const BinPoly& p, const CycloTables& t) {
  REQUIRE(t.m < 64);
  const Gf2m field(t.modulus);
  const std::uint64_t order = (std::uint64_t{1} << t.m) - 1;
  const auto xi = field.pow(Gf2m::from_bits(t.xi_seed), order / static_cast<std::uint64_t>(t.n));
  std::vector<int> out;
  Gf2m::Elem root = Gf2m::one();
  for (int i = 0; i < t.n; ++i) {
    Gf2m::Elem acc = Gf2m::zero(), pw = Gf2m::one();
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k)) acc = Gf2m::add(acc, pw);
      pw = field.mul(pw, root);
    }
    if (acc == Gf2m::zero()) out.push_back(i);
    root = field.mul(root, xi);
  }
  return out;
}

BinPoly product(const std::vector<BinPoly>& v) {
  BinPoly p = BinPoly::one();
  for (const auto& f : v) p = p * f;
  return p;
}

}  // namespace

TEST_CASE("cyclotomic cosets") {
  const CosetTable c7 = cyclotomic_cosets(7);
  CHECK(c7.cosets == std::vector<std::vector<int>>{{0}, {1, 2, 4}, {3, 5, 6}});
  CHECK(cyclotomic_cosets(1).cosets == std::vector<std::vector<int>>{{0}});
  CHECK(cyclotomic_cosets(3).cosets == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK_THROWS_AS(cyclotomic_cosets(6), DomainError);
  CHECK_THROWS_AS(cyclotomic_cosets(257), CapacityError);
  for (int n = 1; n <= 63; n += 2) {
    const CosetTable t = cyclotomic_cosets(n);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& c : t.cosets) {
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
      for (int e : c) {
        ++seen[static_cast<std::size_t>(e)];
        CHECK(std::find(c.begin(), c.end(), (2 * e) % n) != c.end());
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
  CHECK(order_of_two(7) == 3);
  CHECK(order_of_two(1) == 1);
  CHECK(order_of_two(15) == 4);
}

TEST_CASE("GF(2^m) arithmetic") {
  CHECK(smallest_irreducible(3) == parse_poly<2>("x^3+x+1"));
  CHECK(smallest_irreducible(4) == parse_poly<2>("x^4+x+1"));
  CHECK(is_irreducible(parse_poly<2>("x^8+x^4+x^3+x+1")));
  CHECK_FALSE(is_irreducible(parse_poly<2>("x^4+x^2+1")));
  for (std::uint64_t v = 4; v < 512; ++v) CHECK(is_irreducible(from_bit_value(v)) == trial_irreducible(from_bit_value(v)));
  CHECK_THROWS_AS(Gf2m(parse_poly<2>("x^2+1")), DomainError);
  const Gf2m f = Gf2m::smallest(4);
  for (std::uint64_t a = 1; a < 16; ++a) {
    const auto e = Gf2m::from_bits(a);
    CHECK(f.pow(e, 15) == Gf2m::one());
    CHECK(f.mul(e, f.pow(e, 14)) == Gf2m::one());
  }
}

TEST_CASE("factorization of x^n - 1 over Z2") {
  CHECK(factor_xn_minus_1_z2(7) ==
        std::vector<BinPoly>{parse_poly<2>("x+1"), parse_poly<2>("x^3+x+1"), parse_poly<2>("x^3+x^2+1")});
  CHECK(factor_xn_minus_1_z2(1) == std::vector<BinPoly>{parse_poly<2>("x+1")});
  CHECK(factor_xn_minus_1_z2(3) == std::vector<BinPoly>{parse_poly<2>("x+1"), parse_poly<2>("x^2+x+1")});
  for (int n = 1; n <= 99; n += 2) {
    const auto fs = factor_xn_minus_1_z2(n);
    CHECK(product(fs) == BinPoly::x_n_minus_1(n));
    CHECK(fs.size() == cyclotomic_cosets(n).cosets.size());
    if (n <= 31)
      for (const auto& p : fs) CHECK(trial_irreducible(p));
  }
}

TEST_CASE("factorization of x^n - 1 over Z4") {
  CHECK(factor_xn_minus_1_z4(7) == std::vector<QuatPoly>{parse_poly<4>("x+3"), parse_poly<4>("x^3+2x^2+x+3"),
                                                         parse_poly<4>("x^3+3x^2+2x+3")});
  CHECK(factor_xn_minus_1_z4(3) == std::vector<QuatPoly>{parse_poly<4>("x+3"), parse_poly<4>("x^2+x+1")});
  CHECK(factor_xn_minus_1_z4(1) == std::vector<QuatPoly>{parse_poly<4>("x-1")});
  for (int n = 1; n <= 63; n += 2) {
    QuatPoly p = QuatPoly::one();
    for (const auto& f : factor_xn_minus_1_z4(n)) {
      CHECK(f.is_monic());
      p = p * f;
    }
    CHECK(p == QuatPoly::x_n_minus_1(n));
  }
  CHECK_THROWS_AS(factor_xn_minus_1_z4(4), DomainError);
}

TEST_CASE("binary divisors for any length") {
  // x^2 - 1 = (x+1)^2 over Z2.
  CHECK(binary_divisors_xn_minus_1(2) ==
        std::vector<BinPoly>{parse_poly<2>("1"), parse_poly<2>("x+1"), parse_poly<2>("x^2+1")});
  for (int n = 1; n <= 12; ++n) {
    std::vector<BinPoly> brute;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << (n + 1)); ++v)
      if (divides(from_bit_value(v), BinPoly::x_n_minus_1(n))) brute.push_back(from_bit_value(v));
    std::sort(brute.begin(), brute.end());
    CHECK(binary_divisors_xn_minus_1(n) == brute);
  }
}

TEST_CASE("root sets") {
  for (int n : {1, 3, 5, 7, 9, 15, 21}) {
    const CycloTables& t = cyclo_tables(n);
    CHECK(roots_of(parse_poly<2>("x+1"), t).exponents == std::vector<int>{0});
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    CHECK(roots_of(BinPoly::x_n_minus_1(n), t).exponents == all);
    for (const auto& p : binary_divisors_xn_minus_1(n)) {
      const RootSet s = roots_of(p, t);
      CHECK(s.exponents == roots_by_evaluation(p, t));
      CHECK(poly_from_roots(s, t) == p);
    }
  }
  const CycloTables& t7 = cyclo_tables(7);
  const RootSet s = roots_of(parse_poly<2>("x^3+x+1"), t7);
  CHECK(s.exponents.size() == 3);
  CHECK(t7.minimal[static_cast<std::size_t>(t7.cosets.coset_index[static_cast<std::size_t>(s.exponents[0])])] ==
        parse_poly<2>("x^3+x+1"));
  CHECK_THROWS_AS(roots_of(parse_poly<2>("x^2+1"), 7), DomainError);
}

TEST_CASE("tensor square") {
  CHECK(tensor_square(parse_poly<2>("x+1"), 7) == parse_poly<2>("x+1"));
  const BinPoly full7 = exact_div(BinPoly::x_n_minus_1(7), parse_poly<2>("x+1"));
  // {1,2,4} + {1,2,4} = {1,...,6} mod 7, likewise for {3,5,6}.
  for (const char* p : {"x^3+x+1", "x^3+x^2+1"}) CHECK(tensor_square(parse_poly<2>(p), 7) == full7);
  for (int n : {3, 9, 15, 21}) {
    for (int s = 1; s <= n; ++s)
      if (n % s == 0) CHECK(tensor_square(BinPoly::x_n_minus_1(s), n) == BinPoly::x_n_minus_1(s));
  }

  // Independent of the GF(2^m) modulus.
  const CycloTables a = make_cyclo_tables(7, parse_poly<2>("x^3+x+1"));
  const CycloTables b = make_cyclo_tables(7, parse_poly<2>("x^3+x^2+1"));
  const CycloTables c = make_cyclo_tables(15, parse_poly<2>("x^4+x+1"));
  const CycloTables d = make_cyclo_tables(15, parse_poly<2>("x^4+x^3+x^2+x+1"));
  for (const auto& p : binary_divisors_xn_minus_1(7)) CHECK(tensor_square(p, a) == tensor_square(p, b));
  for (const auto& p : binary_divisors_xn_minus_1(15)) CHECK(tensor_square(p, c) == tensor_square(p, d));

  for (int n : {5, 7, 9, 15}) {
    const auto divs = binary_divisors_xn_minus_1(n);
    for (const auto& p : divs) {
      const BinPoly tp = tensor_square(p, n);
      CHECK(divides(tp, BinPoly::x_n_minus_1(n)));
      // Sumset computed directly from evaluated roots.
      const auto r = roots_by_evaluation(p, cyclo_tables(n));
      std::set<int> sums;
      for (int i : r)
        for (int j : r) sums.insert((i + j) % n);
      CHECK(roots_of(tp, n).exponents == std::vector<int>(sums.begin(), sums.end()));
      CHECK(roots_of(tp, n) == sumset(roots_of(p, n)));
      for (const auto& q : divs)
        if (divides(p, q)) CHECK(divides(tp, tensor_square(q, n)));
    }
  }
}
