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

#include "z2z4/reproduce.hpp"

#include <algorithm>
#include <set>

#include "z2z4/cyclofield.hpp"
#include "z2z4/errors.hpp"

namespace z2z4 {

GeneratorMatrix noncyclic_example_matrix() {
  return parse_matrix_text("1 0 | 1 0 0\n0 1 | 0 1 0\n0 0 | 0 0 1\n");
}

GeneratorMatrix gray_nonlinear_example_matrix() {
  return parse_matrix_text(
      "1 0 0 | 0 0 0\n"
      "0 1 0 | 0 0 0\n"
      "0 0 1 | 2 0 0\n"
      "0 0 0 | 1 1 0\n"
      "0 0 0 | 1 0 1\n");
}

CyclicGenerators nechaev_example_generators() {
  return {3, 3, parse_poly<2>("x^2+x+1"), parse_poly<2>("1"), parse_poly<4>("1"), parse_poly<4>("x^2+x+1"),
          parse_poly<4>("x+3")};
}

CheckResult check_factor_x7() {
  CheckResult r{"factor-x7-z4", "x^7-1 over Z4 has factors x-1, x^3+2x^2+x+3, x^3+3x^2+2x+3", false, Json::object()};
  const auto f = factor_xn_minus_1_z4(7);
  Json arr = Json::array();
  std::set<std::string> got;
  for (const auto& p : f) {
    arr.push_back(to_string(p));
    got.insert(to_string(p));
  }
  r.details["factors"] = arr;
  r.pass = got == std::set<std::string>{"x+3", "x^3+2x^2+x+3", "x^3+3x^2+2x+3"} && f.size() == 3;
  return r;
}

CheckResult check_noncyclic_product(const ReproduceOptions& o) {
  CheckResult r{"noncyclic-with-cyclic-projections",
                "C_X and C_Y cyclic, C not cyclic, shift of (0,0|0,0,1) leaves the code", false, Json::object()};
  const GeneratorMatrix m = noncyclic_example_matrix();
  const AdditiveCode c = enumerate(m, o.capacity);
  const SeparableCyclicity sc = separable_cyclicity(c);
  const CyclicityCheck cc = check_cyclic(c);
  const StandardForm sf = standard_form(m);
  r.details["size"] = c.size();
  r.details["type"] = to_json(sf.type);
  r.details["x_cyclic"] = sc.x_cyclic;
  r.details["y_cyclic"] = sc.y_cyclic;
  r.details["cyclic"] = sc.cyclic;
  r.details["separable"] = sc.separable;
  const MixedVector expected_w = parse_mixed("0,0|0,0,1");
  const MixedVector expected_s = parse_mixed("0,0|1,0,0");
  bool witness_ok = false;
  if (cc.witness) {
    r.details["witness"] = format_mixed(*cc.witness);
    r.details["shifted"] = format_mixed(shift(*cc.witness));
    witness_ok = *cc.witness == expected_w && shift(*cc.witness) == expected_s && !c.contains(expected_s);
  }
  r.pass = sc.x_cyclic && sc.y_cyclic && !sc.cyclic && witness_ok;
  return r;
}

CheckResult check_gray_nonlinear_linear_y(const ReproduceOptions& o) {
  CheckResult r{"gray-nonlinear-with-linear-y", "Phi(C) nonlinear while phi(C_Y) is linear; witness product (0,0,0|2,0,0)",
                false, Json::object()};
  const GeneratorMatrix m = gray_nonlinear_example_matrix();
  const AdditiveCode c = enumerate(m, o.capacity);
  const OracleResult gen = gray_is_linear_oracle(c, m);
  const OracleResult full = gray_is_linear_oracle(c, o.capacity);
  const ImplicationCheck ic = cy_linear_implication_check(c, o.capacity);
  r.details["size"] = c.size();
  r.details["type"] = to_json(standard_form(m).type);
  r.details["generator_oracle"] = to_json(gen);
  r.details["exhaustive_linear"] = full.linear;
  r.details["image_linear"] = ic.code_linear;
  r.details["y_image_linear"] = ic.y_linear;
  r.pass = !gen.linear && !full.linear && !ic.code_linear && ic.y_linear && gen.product &&
           *gen.product == parse_mixed("0,0,0|2,0,0") && !c.contains(*gen.product);
  return r;
}

CheckResult check_type_without_linear_image(const ReproduceOptions& o) {
  CheckResult r{"no-linear-cyclic-code-of-type-2-7-2-3",
                "cyclic codes of type (2,7;2,3;*) exist, none has a linear Gray image", false, Json::object()};
  SearchOptions so;
  so.jobs = o.jobs;
  so.criterion.tensor = o.tensor;
  so.criterion.capacity = o.capacity;
  TypeFilter tf;
  tf.gamma = 2;
  tf.delta = 3;
  const auto all = search_by_type(2, 7, tf, so);
  tf.linear_only = true;
  const auto lin = search_by_type(2, 7, tf, so);
  std::set<int> kappas;
  bool all_false = true;
  for (const auto& h : all) {
    kappas.insert(h.type.kappa);
    all_false = all_false && !h.report.verdict;
  }
  r.details["candidates"] = all.size();
  r.details["kappas"] = Json(std::vector<int>(kappas.begin(), kappas.end()));
  r.details["linear_candidates"] = lin.size();
  r.pass = !all.empty() && lin.empty() && all_false;
  return r;
}

CheckResult check_nechaev_image_example(const ReproduceOptions& o) {
  CheckResult r{"nechaev-image-double-cyclic",
                "Psi(C) = <(x^2+x+1|0), (x|x^2+x+1)>, 32 words of length 9, double cyclic", false, Json::object()};
  const CyclicCode c = CyclicCode::from_generators(nechaev_example_generators());
  CriterionOptions co;
  co.tensor = o.tensor;
  co.capacity = o.capacity;
  const LinearityReport rep = gray_linear_criterion(c, co);
  r.details["report"] = to_json(rep);
  r.details["type"] = to_json(code_type(c));
  if (!rep.verdict) return r;
  const DoubleCyclicGenerators d = psi_image_generators(c, co);
  r.details["generators"] = to_json(d);
  const AdditiveCode code = enumerate(realize(c), o.capacity);
  const BinaryCode image = nechaev_gray_image(code);
  DoubleCyclicGenerators ref;
  ref.r = 3;
  ref.s = 6;
  ref.b = parse_poly<2>("x^2+x+1");
  ref.ellp = parse_poly<2>("x");
  ref.a = parse_poly<2>("x^2+x+1");
  const BinaryCode reference = double_cyclic_span(ref, o.capacity);
  const BinaryCode spanned = double_cyclic_span(d, o.capacity);
  const bool dc = is_double_cyclic(image, 3, 6);
  const bool phi_dc = is_double_cyclic(gray_image(code), 3, 6);
  r.details["image_size"] = image.size();
  r.details["image_length"] = image.length();
  r.details["image_double_cyclic"] = dc;
  r.details["gray_image_double_cyclic"] = phi_dc;
  r.details["span_equals_image"] = spanned == image;
  r.details["reference_equals_image"] = reference == image;
  r.pass = image.size() == 32 && image.length() == 9 && dc && spanned == image && reference == image;
  return r;
}

CheckResult check_subgroup_family_spots(const ReproduceOptions& o) {
  CheckResult r{"subgroup-family-linear", "g = 1 or g~ = x^s-1 with s | beta gives a linear Gray image", false,
                Json::object()};
  std::vector<std::pair<int, int>> lengths{{3, 9}, {1, 15}};
  if (o.quick) lengths = {{3, 9}};
  std::size_t members = 0, exceptions = 0, oracle_checked = 0, oracle_mismatch = 0;
  Json bad = Json::array();
  for (auto [a, b] : lengths) {
    const auto all = enumerate_all_cyclic(a, b);
    std::vector<int> res(all.size(), -1);
    parallel_for(all.size(), o.jobs, [&](std::size_t i) {
      if (!in_subgroup_family(all[i])) return;
      CriterionOptions co;
      co.tensor = o.tensor;
      co.capacity = o.capacity;
      const bool v = gray_linear_criterion(all[i], co).verdict;
      int code = v ? 1 : 0;
      const CodeType t = code_type(all[i]);
      if (t.log2_size() <= 20) {
        const GeneratorMatrix m = realize(all[i]);
        const bool oracle = gray_is_linear_oracle(enumerate(m, o.capacity), m).linear;
        code |= 2 | (oracle ? 4 : 0);
      }
      res[i] = code;
    });
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (res[i] < 0) continue;
      ++members;
      if (!(res[i] & 1)) {
        ++exceptions;
        if (bad.size() < 10) bad.push_back(describe(all[i].generators()));
      }
      if (res[i] & 2) {
        ++oracle_checked;
        if (!(res[i] & 4)) ++oracle_mismatch;
      }
    }
  }
  r.details["members"] = members;
  r.details["exceptions"] = exceptions;
  r.details["oracle_checked"] = oracle_checked;
  r.details["oracle_nonlinear"] = oracle_mismatch;
  r.details["examples_failing"] = bad;
  r.pass = members > 0 && exceptions == 0 && oracle_mismatch == 0;
  return r;
}

CheckResult check_cyclic_sweep(const ReproduceOptions& o) {
  SweepOptions so;
  if (o.quick) {
    so.alphas = {1, 2};
    so.betas = {1, 3};
  }
  so.jobs = o.jobs;
  so.capacity = o.capacity;
  so.tensor = o.tensor;
  CheckResult r{"criterion-oracle-sweep",
                o.quick ? "all cyclic codes with alpha <= 2, beta <= 3" : "all cyclic codes with alpha <= 4, beta <= 7",
                false, Json::object()};
  const SweepStats st = run_sweep(so);
  r.details = to_json(st);
  r.details["alphas"] = so.alphas;
  r.details["betas"] = so.betas;
  r.pass = st.codes > 0 && st.total_mismatches() == 0;
  return r;
}

CheckResult check_wolfmann_sweep(const ReproduceOptions& o) {
  const std::vector<int> ns = o.quick ? std::vector<int>{1, 3, 5, 7} : std::vector<int>{1, 3, 5, 7, 9, 15};
  CheckResult r{"wolfmann-oracle-sweep", "quaternary cyclic codes: gcd(f~, g~ (x) g~) = 1 iff the Gray image is linear",
                false, Json::object()};
  SweepOptions so;
  so.jobs = o.jobs;
  so.capacity = o.capacity;
  so.tensor = o.tensor;
  const WolfmannStats st = run_wolfmann_sweep(ns, so);
  r.details = to_json(st);
  r.details["lengths"] = ns;
  r.pass = st.codes > 0 && st.mismatches == 0;
  return r;
}

std::vector<CheckResult> run_reproduction(const ReproduceOptions& o) {
  std::vector<CheckResult> out;
  auto guarded = [&out](const std::string& id, auto fn) {
    try {
      out.push_back(fn());
    } catch (const Error& e) {
      out.push_back({id, "raised an error", false, Json{{"error", e.kind()}, {"message", e.what()}}});
    }
  };
  guarded("factor-x7-z4", [] { return check_factor_x7(); });
  guarded("noncyclic-with-cyclic-projections", [&] { return check_noncyclic_product(o); });
  guarded("gray-nonlinear-with-linear-y", [&] { return check_gray_nonlinear_linear_y(o); });
  guarded("no-linear-cyclic-code-of-type-2-7-2-3", [&] { return check_type_without_linear_image(o); });
  guarded("nechaev-image-double-cyclic", [&] { return check_nechaev_image_example(o); });
  guarded("subgroup-family-linear", [&] { return check_subgroup_family_spots(o); });
  guarded("criterion-oracle-sweep", [&] { return check_cyclic_sweep(o); });
  guarded("wolfmann-oracle-sweep", [&] { return check_wolfmann_sweep(o); });
  return out;
}

}  // namespace z2z4
