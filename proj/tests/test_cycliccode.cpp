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

#include <set>

#include "doctest.h"
#include "z2z4/cycliccode.hpp"
#include "z2z4/cyclofield.hpp"
#include "z2z4/errors.hpp"

using namespace z2z4;

namespace {

CyclicGenerators example_gens() {
  return {3, 3, parse_poly<2>("x^2+x+1"), parse_poly<2>("1"), parse_poly<4>("1"), parse_poly<4>("x^2+x+1"),
          parse_poly<4>("x+3")};
}

AdditiveCode span_of(const std::vector<ResidueWord>& w, int a, int b) { return enumerate(cyclic_span_matrix(w, a, b)); }

// Every subgroup of Z2^alpha x Z4^beta invariant under the shift, found by
// closing {0} under adding shift orbits of single vectors, one at a time.
std::size_t count_invariant_subgroups(int alpha, int beta) {
  const CodeLayout layout(alpha, beta);
  const std::uint64_t total = std::uint64_t{1} << (alpha + 2 * beta);
  std::set<std::vector<std::uint64_t>> found{{0}};
  std::vector<std::vector<std::uint64_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& s : frontier) {
      std::vector<char> in(total, 0);
      for (auto k : s) in[k] = 1;
      for (std::uint64_t v = 0; v < total; ++v) {
        if (in[v]) continue;
        GeneratorMatrix m{alpha, beta, {}};
        for (auto k : s) m.rows.push_back(layout.decode(k));
        MixedVector w = layout.decode(v);
        for (int i = 0; i < std::max(alpha, beta) * 2 + 1; ++i, w = shift(w)) m.rows.push_back(w);
        const auto keys = enumerate(m).keys();
        if (found.insert(keys).second) next.push_back(keys);
      }
    }
    frontier.swap(next);
  }
  return found.size();
}

}  // namespace

TEST_CASE("residue words and the star product") {
  const ResidueWord w = make_residue(parse_poly<2>("x^2+1"), parse_poly<4>("x^2+3x+2"), 3, 3);
  CHECK(star(QuatPoly::one(), w, 3, 3) == w);
  CHECK(to_vector(star(parse_poly<4>("x"), w, 3, 3), 3, 3) == shift(to_vector(w, 3, 3)));
  CHECK(from_vector(to_vector(w, 3, 3)) == w);
  const CyclicCode c = CyclicCode::from_generators(example_gens());
  const auto& g = c.generators();
  CHECK(star(g.g, c.mixed_generator(), 3, 3) ==
        make_residue(g.ell * reduce_mod2(g.g), 2U * g.f * g.g, 3, 3));
  // Binary block of length 0 is the zero ring.
  CHECK(make_residue(parse_poly<2>("x+1"), parse_poly<4>("1"), 0, 1).bin.is_zero());
}

TEST_CASE("validation") {
  CHECK(validate(example_gens()).ok());
  CyclicGenerators bad = example_gens();
  bad.g = parse_poly<4>("x+1");
  CHECK_FALSE(validate(bad).ok());
  CyclicGenerators even = example_gens();
  even.beta = 4;
  CHECK_THROWS_AS(validate(even), DomainError);
  CyclicGenerators nb = example_gens();
  nb.b = parse_poly<2>("x^2+1");
  CHECK_FALSE(validate(nb).ok());
  // b = x^3 - 1, l = 1, g = 1: h~ g~ gcd(b, l) = x^2+x+1 is not a multiple of b.
  CyclicGenerators bad_divisor = example_gens();
  bad_divisor.b = BinPoly::x_n_minus_1(3);
  bad_divisor.ell = parse_poly<2>("1");
  bad_divisor.f = parse_poly<4>("x+3");
  bad_divisor.g = QuatPoly::one();
  CHECK_FALSE(validate(bad_divisor).ok());
  CHECK_THROWS_AS(CyclicCode::from_generators(bad_divisor), DomainError);
  CyclicGenerators a0{0, 3, parse_poly<2>("x+1"), BinPoly(), parse_poly<4>("1"), parse_poly<4>("x+3"),
                      parse_poly<4>("x^2+x+1")};
  CHECK_FALSE(validate(a0).ok());
  a0.b = BinPoly::one();
  CHECK(validate(a0).ok());
}

TEST_CASE("l is reduced modulo b") {
  CyclicGenerators g = example_gens();
  g.ell = parse_poly<2>("x^2+x");  // = 1 mod x^2+x+1
  const CyclicCode c = CyclicCode::from_generators(g);
  CHECK(c.generators().ell == parse_poly<2>("1"));
  CHECK(c.notice().has_value());
  const CyclicCode ref = CyclicCode::from_generators(example_gens());
  CHECK_FALSE(ref.notice().has_value());
  CHECK(enumerate(realize(c)) == enumerate(realize(ref)));
  CHECK(enumerate(realize(CyclicCode::from_unchecked(g))) == enumerate(realize(ref)));
}

TEST_CASE("type formulas") {
  const CyclicCode c = CyclicCode::from_generators(example_gens());
  const CodeType t = code_type(c);
  CHECK(t.gamma == 3);
  CHECK(t.delta == 1);
  CHECK(t.kappa == 3);
  CHECK(*t.kappa1 == 1);
  CHECK(*t.kappa2 == 2);
  CHECK(*t.delta1 == 0);
  CHECK(*t.delta2 == 1);
  CHECK(enumerate(realize(c)).size() == 32);
  CHECK(standard_form(realize(c)).type.same_main(t));

  for (int a : {1, 2, 3}) {
    for (int b : {1, 3, 5}) {
      const CyclicCode full = CyclicCode::from_generators(
          {a, b, BinPoly::x_n_minus_1(a), BinPoly(), QuatPoly::one(), QuatPoly::one(), QuatPoly::x_n_minus_1(b)});
      const CodeType ft = code_type(full);
      CHECK(ft.gamma == 0);
      CHECK(ft.delta == b);
      CHECK(ft.kappa == 0);
      CHECK(enumerate(realize(full)).size() == (std::size_t{1} << (2 * b)));
    }
  }
  CHECK_THROWS_AS(code_type(CyclicCode::from_unchecked(example_gens())), PreconditionError);
}

TEST_CASE("order-two subcode generators") {
  const CyclicCode c = CyclicCode::from_generators(example_gens());
  const auto [w1, w2] = order_two_generators(c);
  CHECK(w1 == c.binary_generator());
  const BezoutPair bz = bezout_lift(parse_poly<4>("x^2+x+1"), parse_poly<4>("x+3"));
  CHECK(w2 == make_residue(reduce_mod2(bz.mu) * parse_poly<2>("x+1"), parse_poly<4>("2"), 3, 3));
  const AdditiveCode code = enumerate(realize(c));
  CHECK(span_of({w1, w2}, 3, 3) == order_two_subcode(code));

  const CyclicCode sep = separable_cyclic(parse_poly<2>("x+1"), parse_poly<4>("x+3"), parse_poly<4>("x^2+x+1"),
                                          QuatPoly::one(), 3, 3);
  const auto [s1, s2] = order_two_generators(sep);
  CHECK(s2 == make_residue(BinPoly(), 2U * parse_poly<4>("x+3"), 3, 3));
  CHECK(span_of({s1, s2}, 3, 3) == order_two_subcode(enumerate(realize(sep))));

  const CyclicCode g1 = CyclicCode::from_generators(
      {3, 3, parse_poly<2>("x+1"), BinPoly(), QuatPoly::one(), QuatPoly::x_n_minus_1(3), QuatPoly::one()});
  const auto [g1a, g1b] = order_two_generators(g1);
  CHECK(span_of({g1a, g1b}, 3, 3) == order_two_subcode(enumerate(realize(g1))));
}

TEST_CASE("three-generator form") {
  const CyclicCode c = CyclicCode::from_generators(example_gens());
  const auto three = three_generator_form(c);
  CHECK(span_of({three.begin(), three.end()}, 3, 3) == enumerate(realize(c)));
  CHECK(three[1] == star(parse_poly<4>("x+3"), c.mixed_generator(), 3, 3));

  const CyclicCode sep = separable_cyclic(BinPoly::one(), parse_poly<4>("x+3"), QuatPoly::one(),
                                          parse_poly<4>("x^2+x+1"), 3, 3);
  const auto t2 = three_generator_form(sep);
  CHECK(t2[1] == make_residue(BinPoly(), 2U * parse_poly<4>("x+3") * parse_poly<4>("x^2+x+1"), 3, 3));
  CHECK(t2[2] == make_residue(BinPoly(), parse_poly<4>("x+3"), 3, 3));

  // b | l g~: the second word's binary part vanishes modulo b.
  const CyclicCode d = CyclicCode::from_generators(
      {3, 3, parse_poly<2>("x+1"), BinPoly(), parse_poly<4>("1"), parse_poly<4>("x^2+x+1"), parse_poly<4>("x+3")});
  const auto t3 = three_generator_form(d);
  CHECK((t3[1].bin % parse_poly<2>("x+1")).is_zero());
  CHECK(span_of({t3.begin(), t3.end()}, 3, 3) == enumerate(realize(d)));
}

TEST_CASE("realization") {
  const CyclicCode c = CyclicCode::from_generators(example_gens());
  const GeneratorMatrix m = realize(c);
  CHECK(m.rows.size() == 6);
  CHECK(enumerate(m).size() == 32);
  CHECK(is_cyclic(enumerate(m)));
  const CyclicCode full = CyclicCode::from_generators(
      {2, 3, BinPoly::one(), BinPoly(), QuatPoly::one(), QuatPoly::one(), QuatPoly::x_n_minus_1(3)});
  CHECK(enumerate(realize(full)).size() == std::size_t{1} << (2 + 6));
  const CyclicCode zero = CyclicCode::from_generators(
      {2, 3, BinPoly::x_n_minus_1(2), BinPoly(), QuatPoly::x_n_minus_1(3), QuatPoly::one(), QuatPoly::one()});
  CHECK(enumerate(realize(zero)).size() == 1);
}

TEST_CASE("separable construction") {
  for (const auto& b : binary_divisors_xn_minus_1(3))
    for (const auto& fhg : quaternary_factorizations(3)) {
      const CyclicCode c = separable_cyclic(b, fhg[0], fhg[1], fhg[2], 3, 3);
      const AdditiveCode code = enumerate(realize(c));
      CHECK(is_separable(code));
      CHECK(is_cyclic(code));
      const PuncturedGenerators pg = punctured_generators(c);
      CHECK(pg.x_generator == b.reduce_cyclic(3));
    }
  const CyclicCode triv = separable_cyclic(BinPoly::one(), QuatPoly::one(), QuatPoly::x_n_minus_1(3), QuatPoly::one(), 3, 3);
  CHECK(puncture_x(enumerate(realize(triv))).size() == 8);
}

TEST_CASE("punctured generators") {
  for (const CyclicCode& c : enumerate_all_cyclic(3, 3)) {
    const AdditiveCode code = enumerate(realize(c));
    const PuncturedGenerators pg = punctured_generators(c);
    CHECK(puncture_x(code) == puncture_x(span_of({{pg.x_generator, QuatPoly()}}, 3, 3)));
    CHECK(puncture_y(code) == puncture_y(span_of({{BinPoly(), pg.y_generator}}, 3, 3)));
  }
}

TEST_CASE("quaternary factorizations") {
  const auto f7 = quaternary_factorizations(7);
  CHECK(f7.size() == 27);
  for (const auto& t : f7) CHECK(t[0] * t[1] * t[2] == QuatPoly::x_n_minus_1(7));
  for (std::size_t i = 1; i < f7.size(); ++i) {
    const bool ordered = f7[i - 1][1] < f7[i][1] || (f7[i - 1][1] == f7[i][1] && !(f7[i][2] < f7[i - 1][2]));
    CHECK(ordered);
  }
}

TEST_CASE("enumeration of all cyclic codes") {
  const auto c11 = enumerate_all_cyclic(1, 1);
  CHECK(c11.size() == 8);
  CHECK(enumerate_all_cyclic(3, 3).size() == 96);
  // Candidates of type (2,7; 2,3; *) all have deg g = 3 and deg b = deg h <= 2.
  std::size_t hits = 0;
  for (const auto& c : enumerate_all_cyclic(2, 7)) {
    const CodeType t = code_type(c);
    if (t.gamma != 2 || t.delta != 3) continue;
    ++hits;
    const int db = c.generators().b.degree();
    CHECK(c.generators().g.degree() == 3);
    CHECK(db == c.generators().h.degree());
    CHECK(db <= 2);
  }
  CHECK(hits > 0);

  // Canonical tuples are complete and pairwise distinct.
  for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{2, 1}, std::pair{2, 3}, std::pair{3, 3},
                      std::pair{0, 5}, std::pair{1, 5}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto all = enumerate_all_cyclic(a, b);
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& c : all) {
      const AdditiveCode code = enumerate(realize(c));
      CHECK(is_cyclic(code));
      distinct.insert(code.keys());
    }
    CHECK(distinct.size() == all.size());
    CHECK(enumerate_all_cyclic(a, b, {true}).size() == all.size());
    CHECK(count_invariant_subgroups(a, b) == all.size());
  }
  CHECK_THROWS_AS(enumerate_all_cyclic(2, 2), DomainError);
}
