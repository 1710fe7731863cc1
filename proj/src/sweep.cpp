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

#include "z2z4/sweep.hpp"

#include <algorithm>
#include <unordered_set>

#include "z2z4/errors.hpp"
#include "z2z4/zmaps.hpp"

namespace z2z4 {

std::string describe(const CyclicGenerators& g) {
  return "alpha=" + std::to_string(g.alpha) + " beta=" + std::to_string(g.beta) + " b=" + to_string(g.b) +
         " l=" + to_string(g.ell) + " f=" + to_string(g.f) + " h=" + to_string(g.h) + " g=" + to_string(g.g);
}

void SweepStats::merge(const SweepStats& o, std::size_t max_failures) {
  codes += o.codes;
  skipped_capacity += o.skipped_capacity;
  linear += o.linear;
  nonlinear += o.nonlinear;
  criterion_mismatch += o.criterion_mismatch;
  oracle_disagreement += o.oracle_disagreement;
  not_cyclic += o.not_cyclic;
  cardinality_mismatch += o.cardinality_mismatch;
  type_mismatch += o.type_mismatch;
  order_two_mismatch += o.order_two_mismatch;
  three_generator_mismatch += o.three_generator_mismatch;
  psi_checked += o.psi_checked;
  psi_not_double_cyclic += o.psi_not_double_cyclic;
  psi_span_mismatch += o.psi_span_mismatch;
  multiplier_mismatch += o.multiplier_mismatch;
  family_members += o.family_members;
  family_exceptions += o.family_exceptions;
  for (const auto& f : o.failures)
    if (failures.size() < max_failures) failures.push_back(f);
}

namespace {

std::size_t reduction_classes(const AdditiveCode& code) {
  std::unordered_set<std::uint64_t> s;
  for (auto k : code.keys()) s.insert(code.layout().quat_reduction(k));
  return s.size();
}

}  // namespace

SweepStats check_cyclic_code(const CyclicCode& c, const SweepOptions& opts) {
  SweepStats st;
  const auto& g = c.generators();
  const CodeType t = code_type(c);
  if (t.log2_size() >= 63 || (std::uint64_t{1} << t.log2_size()) > opts.capacity) {
    st.skipped_capacity = 1;
    return st;
  }
  st.codes = 1;
  auto fail = [&](std::size_t& counter, const std::string& what) {
    ++counter;
    st.failures.push_back(what + ": " + describe(g));
  };

  const GeneratorMatrix m = realize(c);
  const AdditiveCode code = enumerate(m, opts.capacity);
  if (!is_cyclic(code)) fail(st.not_cyclic, "not cyclic");

  const int db = g.alpha == 0 ? 0 : g.b.degree();
  const int expected_log2 = (g.alpha - db) + 2 * g.g.degree() + g.h.degree();
  if (code.size() != (std::size_t{1} << expected_log2) || expected_log2 != t.log2_size())
    fail(st.cardinality_mismatch, "cardinality");
  if (!standard_form(m).type.same_main(t)) fail(st.type_mismatch, "type");

  const auto [w1, w2] = order_two_generators(c);
  if (!(enumerate(cyclic_span_matrix({w1, w2}, g.alpha, g.beta), opts.capacity) == order_two_subcode(code)))
    fail(st.order_two_mismatch, "order-two subcode generators");
  const auto three = three_generator_form(c);
  if (!(enumerate(cyclic_span_matrix({three.begin(), three.end()}, g.alpha, g.beta), opts.capacity) == code))
    fail(st.three_generator_mismatch, "three-generator form");

  CriterionOptions copt;
  copt.capacity = opts.capacity;
  copt.tensor = opts.tensor;
  const LinearityReport rep = gray_linear_criterion(c, copt);
  const bool pair_oracle = gray_is_linear_oracle(code, m).linear;
  if (rep.verdict != pair_oracle) fail(st.criterion_mismatch, "criterion vs oracle");
  (pair_oracle ? st.linear : st.nonlinear) += 1;
  if (gray_image_is_linear(code) != pair_oracle) fail(st.oracle_disagreement, "image closure vs oracle");
  const std::uint64_t k = reduction_classes(code);
  if (k * (k + 1) / 2 <= opts.exhaustive_pair_limit && gray_is_linear_oracle(code, opts.capacity).linear != pair_oracle)
    fail(st.oracle_disagreement, "exhaustive vs generator oracle");

  if (in_subgroup_family(c)) {
    ++st.family_members;
    if (!rep.verdict) fail(st.family_exceptions, "subgroup family not linear");
  }

  if (rep.verdict) {
    ++st.psi_checked;
    const DoubleCyclicGenerators d = psi_image_generators(c, copt);
    const BinaryCode image = nechaev_gray_image(code);
    if (!is_double_cyclic(image, g.alpha, 2 * g.beta)) fail(st.psi_not_double_cyclic, "psi image not double cyclic");
    if (!(double_cyclic_span(d, opts.capacity) == image)) fail(st.psi_span_mismatch, "psi generators span");
    if (g.beta <= 7) {
      const QuatVec target = nechaev_gray_inv(d.a.reduce_cyclic(2 * g.beta).to_vector(2 * g.beta));
      const auto brute = solve_multiplier_exhaustive(g.quat_generator(), target, g.beta);
      if (!brute || !(*brute == d.multiplier)) fail(st.multiplier_mismatch, "multiplier solve");
    }
  }
  return st;
}

SweepStats run_sweep(const SweepOptions& opts) {
  std::vector<CyclicCode> all;
  for (int a : opts.alphas)
    for (int b : opts.betas) {
      auto part = enumerate_all_cyclic(a, b);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  std::vector<SweepStats> per(all.size());
  parallel_for(all.size(), opts.jobs, [&](std::size_t i) { per[i] = check_cyclic_code(all[i], opts); });
  SweepStats total;
  for (const auto& s : per) total.merge(s);
  return total;
}

WolfmannStats run_wolfmann_sweep(const std::vector<int>& lengths, const SweepOptions& opts) {
  std::vector<CyclicCode> all;
  for (int n : lengths) {
    auto part = enumerate_all_cyclic(0, n);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  struct One {
    bool counted = false, skipped = false, linear = false, mismatch = false;
  };
  std::vector<One> per(all.size());
  parallel_for(all.size(), opts.jobs, [&](std::size_t i) {
    const auto& g = all[i].generators();
    const int lg = g.h.degree() + 2 * g.g.degree();
    if (lg >= 63 || (std::uint64_t{1} << lg) > opts.capacity) {
      per[i].skipped = true;
      return;
    }
    const GeneratorMatrix m = realize(all[i]);
    const AdditiveCode code = enumerate(m, opts.capacity);
    const bool oracle = gray_is_linear_oracle(code, m).linear;
    const bool w = wolfmann_linear(g.f, g.h, g.g, g.beta, opts.tensor);
    CriterionOptions copt;
    copt.tensor = opts.tensor;
    const bool general = gray_linear_criterion(all[i], copt).verdict;
    per[i] = {true, false, oracle, w != oracle || general != oracle};
  });
  WolfmannStats st;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (per[i].skipped) ++st.skipped_capacity;
    if (!per[i].counted) continue;
    ++st.codes;
    if (per[i].linear) ++st.linear;
    if (per[i].mismatch) {
      ++st.mismatches;
      if (st.failures.size() < 20) st.failures.push_back("Wolfmann vs oracle: " + describe(all[i].generators()));
    }
  }
  return st;
}

}  // namespace z2z4
