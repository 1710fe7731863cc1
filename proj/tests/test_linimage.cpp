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

#include <atomic>
#include <map>
#include <tuple>

#include "doctest.h"
#include "z2z4/cyclofield.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/linimage.hpp"
#include "z2z4/reproduce.hpp"
#include "z2z4/zmaps.hpp"

using namespace z2z4;

namespace {

CyclicCode example() { return CyclicCode::from_generators(nechaev_example_generators()); }

CyclicCode quaternary_only(const char* f, const char* h, const char* g, int beta, int alpha = 1) {
  return CyclicCode::from_generators({alpha, beta, BinPoly::x_n_minus_1(alpha), BinPoly(), parse_poly<4>(f),
                                      parse_poly<4>(h), parse_poly<4>(g)});
}

}  // namespace

TEST_CASE("criterion on the worked example") {
  const LinearityReport r = gray_linear_criterion(example(), {true});
  CHECK(r.criterion_poly == parse_poly<2>("x^2+x+1"));
  CHECK(r.tensor_poly == parse_poly<2>("x+1"));
  CHECK(r.gcd_value == BinPoly::one());
  CHECK(r.verdict);
  CHECK(*r.oracle_verdict);
  CHECK(gray_image_is_linear(enumerate(realize(example()))));
  CHECK_THROWS_AS(gray_linear_criterion(CyclicCode::from_unchecked(nechaev_example_generators())), PreconditionError);
}

TEST_CASE("quaternary criterion") {
  // g~ of degree 3 over n = 7 has full tensor square; f~ = 1 is still linear.
  CHECK(wolfmann_linear(parse_poly<4>("1"), parse_poly<4>("x^3+2x^2+x+3"), parse_poly<4>("x^3+3x^2+2x+3"), 7));
  // f~ = x^3+x+1 shares its roots with the tensor square of x^3+x^2+1.
  CHECK_FALSE(wolfmann_linear(parse_poly<4>("x^3+2x^2+x+3"), parse_poly<4>("x+3"), parse_poly<4>("x^3+3x^2+2x+3"), 7));
  const CyclicCode nl = quaternary_only("x^3+2x^2+x+3", "x+3", "x^3+3x^2+2x+3", 7);
  CHECK_FALSE(*gray_linear_criterion(nl, {true}).oracle_verdict);
  const CyclicCode lin = quaternary_only("x+3", "x^3+2x^2+x+3", "x^3+3x^2+2x+3", 7);
  CHECK(*gray_linear_criterion(lin, {true}).oracle_verdict);
  CHECK(wolfmann_linear(parse_poly<4>("x+3"), parse_poly<4>("x^2+x+1"), parse_poly<4>("1"), 3));
  CHECK(wolfmann_linear(parse_poly<4>("x^2+x+1"), parse_poly<4>("1"), parse_poly<4>("x+3"), 3));
}

TEST_CASE("subgroup family") {
  CHECK(in_subgroup_family(quaternary_only("x^2+x+1", "1", "x+3", 3)));
  CHECK(in_subgroup_family(quaternary_only("x+3", "1", "x^2+x+1", 3)) == false);
  CHECK(in_subgroup_family(quaternary_only("1", "x^3+3", "1", 3)));
  CHECK(in_subgroup_family(quaternary_only("1", "1", "x^3+3", 3)));
  for (const auto& c : enumerate_all_cyclic(2, 3))
    if (in_subgroup_family(c)) CHECK(gray_linear_criterion(c, {true}).oracle_verdict == true);
}

TEST_CASE("linear code forces a linear quaternary projection") {
  const ImplicationCheck ex = cy_linear_implication_check(enumerate(gray_nonlinear_example_matrix()));
  CHECK_FALSE(ex.code_linear);
  CHECK(ex.y_linear);
  CHECK(ex.holds());
  const ImplicationCheck zero = cy_linear_implication_check(enumerate(GeneratorMatrix{2, 3, {}}));
  CHECK(zero.code_linear);
  CHECK(zero.y_linear);
  for (const auto& c : enumerate_all_cyclic(2, 3)) CHECK(cy_linear_implication_check(enumerate(realize(c))).holds());
}

TEST_CASE("reports depend only on b, gcd(b, l g~), f~, g~") {
  for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{1, 7}}) {
    std::map<std::tuple<BinPoly, BinPoly, BinPoly, BinPoly>, std::pair<bool, bool>> seen;
    for (const auto& c : enumerate_all_cyclic(a, b)) {
      const auto& g = c.generators();
      const BinPoly gt = reduce_mod2(g.g);
      const auto key = std::tuple{g.b, gcd2(g.b, g.ell * gt), reduce_mod2(g.f), gt};
      const LinearityReport r = gray_linear_criterion(c, {true});
      CHECK(r.verdict == *r.oracle_verdict);
      const auto [it, fresh] = seen.emplace(key, std::pair{r.verdict, *r.oracle_verdict});
      if (!fresh) CHECK(it->second == std::pair{r.verdict, *r.oracle_verdict});
    }
  }
}

TEST_CASE("type search") {
  const auto hits = search_by_type(2, 7, {2, 3, std::nullopt, false});
  CHECK(hits.size() == 6);
  for (const auto& h : hits) {
    CHECK(h.type.gamma == 2);
    CHECK(h.type.delta == 3);
    CHECK_FALSE(h.report.verdict);
  }
  CHECK(search_by_type(2, 7, {2, 3, std::nullopt, true}).empty());
  const auto ex = search_by_type(3, 3, {3, 1, 3, false});
  bool found = false;
  const AdditiveCode target = enumerate(realize(example()));
  for (const auto& h : ex) found |= enumerate(realize(h.code)) == target;
  CHECK(found);
  CHECK(search_by_type(1, 3, {5, std::nullopt, std::nullopt, false}).empty());
  SearchOptions par;
  par.jobs = 4;
  const auto hp = search_by_type(2, 7, {2, 3, std::nullopt, false}, par);
  REQUIRE(hp.size() == hits.size());
  for (std::size_t i = 0; i < hp.size(); ++i) CHECK(hp[i].code.generators() == hits[i].code.generators());
}

TEST_CASE("a corrupted tensor square flips the type (2,7;2,3) verdict") {
  CriterionOptions broken;
  broken.tensor = [](const BinPoly&, int) { return BinPoly::one(); };
  SearchOptions opts;
  opts.criterion = broken;
  CHECK_FALSE(search_by_type(2, 7, {2, 3, std::nullopt, true}, opts).empty());
}

TEST_CASE("double cyclic generators of the image") {
  const DoubleCyclicGenerators d = psi_image_generators(example());
  CHECK(d.r == 3);
  CHECK(d.s == 6);
  CHECK(d.b == parse_poly<2>("x^2+x+1"));
  CHECK(d.ellp == parse_poly<2>("x"));
  CHECK(d.a.reduce_cyclic(6) == parse_poly<2>("x^2+x+1"));
  CHECK(d.multiplier == parse_poly<4>("2x^2+x"));
  CHECK(divides(d.a, BinPoly::x_n_minus_1(6)));
  const BinaryCode img = nechaev_gray_image(enumerate(realize(example())));
  CHECK(img.size() == 32);
  CHECK(is_double_cyclic(img, 3, 6));
  CHECK(double_cyclic_span(d) == img);
  // The multiplier solves p (fh + 2f) = psi^-1(a).
  const CyclicCode ex = example();
  const auto& g = ex.generators();
  const QuatPoly lhs = (d.multiplier * (g.f * g.h + 2U * g.f)).reduce_cyclic(3);
  CHECK(lhs.to_vector(3) == nechaev_gray_inv(d.a.reduce_cyclic(6).to_vector(6)));
  CHECK(solve_multiplier_exhaustive(g.f * g.h + 2U * g.f, lhs.to_vector(3), 3) == d.multiplier);

  // With the usual Gray map the image is not double cyclic for these blocks.
  CHECK_FALSE(is_double_cyclic(gray_image(enumerate(realize(example()))), 3, 6));

  CHECK_THROWS_AS(psi_image_generators(quaternary_only("x^3+2x^2+x+3", "x+3", "x^3+3x^2+2x+3", 7)), PreconditionError);
  const CyclicCode zero_l = CyclicCode::from_generators(
      {3, 3, parse_poly<2>("x+1"), BinPoly(), parse_poly<4>("x+3"), parse_poly<4>("x^2+x+1"), parse_poly<4>("1")});
  const DoubleCyclicGenerators dz = psi_image_generators(zero_l);
  CHECK(dz.ellp.is_zero());
  CHECK(double_cyclic_span(dz) == nechaev_gray_image(enumerate(realize(zero_l))));
}

TEST_CASE("multiplier solver agrees with exhaustive search") {
  for (const auto& fhg : quaternary_factorizations(5)) {
    const QuatPoly c = fhg[0] * fhg[1] + 2U * fhg[0];
    for (std::uint32_t t = 0; t < 1024; t += 37) {
      QuatVec target(5);
      for (int i = 0; i < 5; ++i) target[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((t >> (2 * i)) & 3U);
      CHECK(solve_multiplier(c, target, 5) == solve_multiplier_exhaustive(c, target, 5));
    }
  }
}

TEST_CASE("parallel_for visits each index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 7, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
  parallel_for(0, 4, [](std::size_t) { FAIL("no indices"); });
}
