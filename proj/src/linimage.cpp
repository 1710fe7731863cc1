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

#include "z2z4/linimage.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "z2z4/cyclofield.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/z4linalg.hpp"
#include "z2z4/zmaps.hpp"

namespace z2z4 {

BinPoly default_tensor_square(const BinPoly& p, int n) { return tensor_square(p, n); }

bool wolfmann_linear(const QuatPoly& f, const QuatPoly& /*h*/, const QuatPoly& g, int n, const TensorSquareFn& tensor) {
  return gcd2(reduce_mod2(f), tensor(reduce_mod2(g), n)).is_one();
}

LinearityReport gray_linear_criterion(const CyclicCode& c, const CriterionOptions& opts) {
  if (!c.checked()) throw PreconditionError("the linearity criterion needs validated cyclic generators");
  const auto& g = c.generators();
  const BinPoly b = g.alpha == 0 ? BinPoly::one() : g.b;
  const BinPoly gt = reduce_mod2(g.g);
  LinearityReport rep;
  rep.criterion_poly = exact_div(reduce_mod2(g.f) * b, gcd2(b, g.ell * gt));
  rep.tensor_poly = opts.tensor(gt, g.beta);
  rep.gcd_value = gcd2(rep.criterion_poly, rep.tensor_poly);
  rep.verdict = rep.gcd_value.is_one();
  if (opts.with_oracle) {
    const GeneratorMatrix m = realize(c);
    const AdditiveCode code = enumerate(m, opts.capacity);
    rep.oracle = gray_is_linear_oracle(code, m);
    rep.oracle_verdict = rep.oracle->linear;
  }
  return rep;
}

bool in_subgroup_family(const CyclicCode& c) {
  const auto& g = c.generators();
  if (g.g.is_one()) return true;
  const BinPoly gt = reduce_mod2(g.g);
  const int s = gt.degree();
  return s > 0 && g.beta % s == 0 && gt == BinPoly::x_n_minus_1(s);
}

ImplicationCheck cy_linear_implication_check(const AdditiveCode& c, std::uint64_t capacity) {
  ImplicationCheck r;
  const AdditiveCode y = puncture_y(c);
  if (c.size() > capacity) throw CapacityError("code exceeds the enumeration capacity");
  r.code_linear = gray_image_is_linear(c);
  r.y_linear = gray_image_is_linear(y);
  return r;
}

namespace {

std::vector<Z4Row> shift_rows(const QuatPoly& c, int beta) {
  std::vector<Z4Row> rows;
  rows.reserve(static_cast<std::size_t>(beta));
  for (int i = 0; i < beta; ++i) rows.push_back(c.shift_cyclic(i, beta).to_vector(beta));
  return rows;
}

}  // namespace

std::optional<QuatPoly> solve_multiplier(const QuatPoly& c, const QuatVec& target, int beta) {
  if (target.size() != static_cast<std::size_t>(beta)) throw DomainError("target length must equal beta");
  const auto x = solve_lexmin(shift_rows(c, beta), target);
  if (!x) return std::nullopt;
  return QuatPoly(*x);
}

std::optional<QuatPoly> solve_multiplier_exhaustive(const QuatPoly& c, const QuatVec& target, int beta) {
  if (target.size() != static_cast<std::size_t>(beta)) throw DomainError("target length must equal beta");
  const auto x = solve_lexmin_exhaustive(shift_rows(c, beta), target);
  if (!x) return std::nullopt;
  return QuatPoly(*x);
}

DoubleCyclicGenerators psi_image_generators(const CyclicCode& c, const CriterionOptions& opts) {
  if (!gray_linear_criterion(c, opts).verdict)
    throw PreconditionError("the Nechaev-Gray image is not linear, so it has no double cyclic generators");
  const auto& g = c.generators();
  const int n2 = 2 * g.beta;
  DoubleCyclicGenerators d;
  d.r = g.alpha;
  d.s = n2;
  d.b = g.b;
  const BinPoly ft = reduce_mod2(g.f);
  d.a = ft * ft * reduce_mod2(g.h);  // divides x^(2 beta) - 1
  const QuatVec target = nechaev_gray_inv(d.a.reduce_cyclic(n2).to_vector(n2));
  const auto p = solve_multiplier(g.quat_generator(), target, g.beta);
  if (!p) throw InternalError("no multiplier maps the quaternary generator onto psi^-1(a)");
  d.multiplier = *p;
  d.ellp = g.alpha == 0 ? BinPoly() : (reduce_mod2(*p) * g.ell) % g.b;
  return d;
}

BinaryCode double_cyclic_span(const DoubleCyclicGenerators& d, std::uint64_t capacity) {
  const int n = d.r + d.s;
  std::vector<BitVec> gens;
  auto word = [&](const BinPoly& x, const BinPoly& y) {
    BitVec v = d.r == 0 ? BitVec{} : x.reduce_cyclic(d.r).to_vector(d.r);
    const BitVec w = y.reduce_cyclic(d.s).to_vector(d.s);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  };
  for (int i = 0; i < d.r; ++i) gens.push_back(word(d.b.shift_cyclic(i, d.r), BinPoly()));
  const int period = d.r == 0 ? d.s : std::lcm(d.r, d.s);
  for (int j = 0; j < period; ++j)
    gens.push_back(word(d.r == 0 ? BinPoly() : d.ellp.shift_cyclic(j, d.r), d.a.shift_cyclic(j, d.s)));
  return BinaryCode::span(n, gens, capacity);
}

bool is_double_cyclic(const BinaryCode& code, int r, int s) {
  if (r < 0 || s < 0 || r + s != code.length()) throw DomainError("block lengths do not match the code length");
  auto rot = [](std::uint64_t x, int len) -> std::uint64_t {
    if (len <= 1) return x;
    return (x >> 1) | ((x & 1U) << (len - 1));
  };
  const std::uint64_t ymask = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
  for (std::uint64_t w : code.words()) {
    const std::uint64_t x = s == 64 ? 0 : w >> s, y = w & ymask;
    const std::uint64_t sx = rot(x, r), sy = rot(y, s);
    if (!code.contains((s == 64 ? 0 : sx << s) | sy)) return false;
  }
  return true;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(n, 1));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(t);
  const std::size_t chunk = (n + t - 1) / t;
  for (std::size_t k = 0; k < t; ++k) {
    threads.emplace_back([&, k] {
      try {
        for (std::size_t i = k * chunk; i < std::min(n, (k + 1) * chunk); ++i) fn(i);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<SearchHit> search_by_type(int alpha, int beta, const TypeFilter& filter, const SearchOptions& opts) {
  const std::vector<CyclicCode> all = enumerate_all_cyclic(alpha, beta);
  std::vector<std::optional<SearchHit>> slots(all.size());
  parallel_for(all.size(), opts.jobs, [&](std::size_t i) {
    const CodeType t = code_type(all[i]);
    if (!filter.matches(t)) return;
    LinearityReport rep = gray_linear_criterion(all[i], opts.criterion);
    if (filter.linear_only && !rep.verdict) return;
    slots[i] = SearchHit{all[i], t, std::move(rep)};
  });
  std::vector<SearchHit> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace z2z4
