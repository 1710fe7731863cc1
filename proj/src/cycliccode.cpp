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

#include "z2z4/cycliccode.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "z2z4/cyclofield.hpp"
#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

BinPoly reduce_bin(const BinPoly& p, int alpha) { return alpha == 0 ? BinPoly() : p.reduce_cyclic(alpha); }

BinPoly bin_divisor_of_cyclic(const BinPoly& b, int alpha) {
  return alpha == 0 ? BinPoly::one() : b;
}

}  // namespace

ResidueWord make_residue(const BinPoly& bin, const QuatPoly& quat, int alpha, int beta) {
  return {reduce_bin(bin, alpha), quat.reduce_cyclic(beta)};
}

MixedVector to_vector(const ResidueWord& w, int alpha, int beta) {
  const ResidueWord r = make_residue(w.bin, w.quat, alpha, beta);
  return {r.bin.to_vector(alpha), r.quat.to_vector(beta)};
}

ResidueWord from_vector(const MixedVector& v) { return {BinPoly(v.bin), QuatPoly(v.quat)}; }

ResidueWord star(const QuatPoly& p, const ResidueWord& w, int alpha, int beta) {
  return make_residue(reduce_mod2(p) * w.bin, p * w.quat, alpha, beta);
}

ValidationReport validate(const CyclicGenerators& c) {
  if (c.beta <= 0 || c.beta % 2 == 0)
    throw DomainError("beta must be a positive odd integer, got " + std::to_string(c.beta));
  ValidationReport rep;
  auto bad = [&rep](std::string s) { rep.violations.push_back(std::move(s)); };
  if (c.alpha < 0) bad("alpha must be non-negative");
  bool quat_ok = true;
  for (const auto* p : {&c.f, &c.h, &c.g}) {
    if (!p->is_monic()) {
      bad("f, h and g must be monic");
      quat_ok = false;
      break;
    }
  }
  if (quat_ok && !(c.f * c.h * c.g == QuatPoly::x_n_minus_1(c.beta))) {
    bad("f*h*g must equal x^" + std::to_string(c.beta) + "-1 over Z4");
    quat_ok = false;
  }
  if (c.alpha == 0) {
    if (!c.b.is_one()) bad("b must be 1 when alpha = 0");
    if (!c.ell.is_zero()) bad("l must be 0 when alpha = 0");
    return rep;
  }
  if (c.alpha < 0) return rep;
  if (c.b.is_zero() || !divides(c.b, BinPoly::x_n_minus_1(c.alpha))) {
    bad("b must divide x^" + std::to_string(c.alpha) + "-1 over Z2");
    return rep;
  }
  if (!c.ell.is_zero() && c.ell.degree() >= c.b.degree()) bad("deg l must be smaller than deg b");
  if (!quat_ok) return rep;
  const BinPoly ht = reduce_mod2(c.h), gt = reduce_mod2(c.g);
  if (!divides(c.b, ht * gt * gcd2(c.b, c.ell))) bad("b must divide h~ g~ gcd(b, l)");
  if (!divides(c.b, ht * gcd2(c.b, c.ell * gt))) bad("b must divide h~ gcd(b, l g~)");
  return rep;
}

CyclicCode CyclicCode::from_generators(CyclicGenerators g) {
  std::optional<std::string> notice;
  if (g.alpha > 0 && !g.b.is_zero() && !g.ell.is_zero() && g.ell.degree() >= g.b.degree()) {
    g.ell = g.ell % g.b;
    notice = "l reduced modulo b to " + to_string(g.ell);
  }
  const ValidationReport rep = validate(g);
  if (!rep.ok()) {
    std::string msg = "invalid cyclic generators:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    msg.pop_back();
    throw DomainError(msg);
  }
  return CyclicCode(std::move(g), true, std::move(notice));
}

CyclicCode CyclicCode::from_unchecked(CyclicGenerators g) {
  if (g.beta <= 0 || g.beta % 2 == 0)
    throw DomainError("beta must be a positive odd integer, got " + std::to_string(g.beta));
  if (g.alpha < 0) throw DomainError("alpha must be non-negative");
  return CyclicCode(std::move(g), false, std::nullopt);
}

ResidueWord CyclicCode::binary_generator() const {
  return make_residue(gens_.b, QuatPoly(), gens_.alpha, gens_.beta);
}

ResidueWord CyclicCode::mixed_generator() const {
  return make_residue(gens_.ell, gens_.quat_generator(), gens_.alpha, gens_.beta);
}

namespace {

void require_checked(const CyclicCode& c, const char* what) {
  if (!c.checked()) throw PreconditionError(std::string(what) + " needs validated cyclic generators");
}

}  // namespace

CodeType code_type(const CyclicCode& c) {
  require_checked(c, "code_type");
  const auto& g = c.generators();
  const BinPoly b = bin_divisor_of_cyclic(g.b, g.alpha);
  const BinPoly gt = reduce_mod2(g.g);
  const int d_lg = gcd2(g.ell * gt, b).degree();
  const int d_l = gcd2(b, g.ell).degree();
  CodeType t;
  t.alpha = g.alpha;
  t.beta = g.beta;
  t.gamma = g.alpha - b.degree() + g.h.degree();
  t.delta = g.g.degree();
  t.kappa = g.alpha - d_lg;
  t.kappa1 = g.alpha - b.degree();
  t.kappa2 = b.degree() - d_lg;
  t.delta1 = d_lg - d_l;
  t.delta2 = g.g.degree() - (d_lg - d_l);
  return t;
}

std::pair<ResidueWord, ResidueWord> order_two_generators(const CyclicCode& c) {
  require_checked(c, "order_two_generators");
  const auto& g = c.generators();
  const BezoutPair bz = bezout_lift(g.h, g.g);
  const BinPoly bin = reduce_mod2(bz.mu) * g.ell * reduce_mod2(g.g);
  return {c.binary_generator(), make_residue(bin, 2U * g.f, g.alpha, g.beta)};
}

std::array<ResidueWord, 3> three_generator_form(const CyclicCode& c) {
  require_checked(c, "three_generator_form");
  const auto& g = c.generators();
  const BezoutPair bz = bezout_lift(g.h, g.g);
  const BinPoly gt = reduce_mod2(g.g);
  const BinPoly lp = g.ell - reduce_mod2(bz.mu) * g.ell * gt;
  return {c.binary_generator(), make_residue(g.ell * gt, 2U * g.f * g.g, g.alpha, g.beta),
          make_residue(lp, g.f * g.h, g.alpha, g.beta)};
}

GeneratorMatrix cyclic_span_matrix(const std::vector<ResidueWord>& words, int alpha, int beta) {
  GeneratorMatrix m{alpha, beta, {}};
  std::set<MixedVector> seen;
  for (const auto& w : words) {
    MixedVector v = to_vector(w, alpha, beta);
    const MixedVector start = v;
    do {
      if (!v.is_zero() && seen.insert(v).second) m.rows.push_back(v);
      v = shift(v);
    } while (!(v == start));
  }
  return m;
}

GeneratorMatrix realize(const CyclicCode& c) {
  if (!c.checked()) return cyclic_span_matrix({c.binary_generator(), c.mixed_generator()}, c.alpha(), c.beta());
  GeneratorMatrix m{c.alpha(), c.beta(), {}};
  MixedVector v = to_vector(c.binary_generator(), c.alpha(), c.beta());
  for (int i = 0; i < c.alpha(); ++i, v = shift(v)) m.rows.push_back(v);
  v = to_vector(c.mixed_generator(), c.alpha(), c.beta());
  for (int j = 0; j < c.beta(); ++j, v = shift(v)) m.rows.push_back(v);
  return m;
}

CyclicCode separable_cyclic(const BinPoly& b, const QuatPoly& f, const QuatPoly& h, const QuatPoly& g, int alpha,
                            int beta) {
  return CyclicCode::from_generators({alpha, beta, b, BinPoly(), f, h, g});
}

PuncturedGenerators punctured_generators(const CyclicCode& c) {
  const auto& g = c.generators();
  const BinPoly x = g.alpha == 0 ? BinPoly() : reduce_bin(gcd2(bin_divisor_of_cyclic(g.b, g.alpha), g.ell), g.alpha);
  return {x, g.quat_generator().reduce_cyclic(g.beta)};
}

std::vector<std::array<QuatPoly, 3>> quaternary_factorizations(int beta) {
  const std::vector<QuatPoly> factors = factor_xn_minus_1_z4(beta);
  std::size_t total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (total > (std::size_t{1} << 40) / 3) throw CapacityError("too many Z4 factor assignments");
    total *= 3;
  }
  std::vector<std::array<QuatPoly, 3>> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::array<QuatPoly, 3> fhg{QuatPoly::one(), QuatPoly::one(), QuatPoly::one()};
    std::size_t rem = code;
    for (const auto& fac : factors) {
      fhg[rem % 3] = fhg[rem % 3] * fac;
      rem /= 3;
    }
    out.push_back(std::move(fhg));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (!(a[1] == b[1])) return a[1] < b[1];
    return a[2] < b[2];
  });
  return out;
}

std::vector<CyclicCode> enumerate_all_cyclic(int alpha, int beta, const EnumerateOptions& opts) {
  if (beta <= 0 || beta % 2 == 0) throw DomainError("beta must be a positive odd integer, got " + std::to_string(beta));
  if (alpha < 0) throw DomainError("alpha must be non-negative");
  const std::vector<BinPoly> bs = alpha == 0 ? std::vector<BinPoly>{BinPoly::one()} : binary_divisors_xn_minus_1(alpha);
  const auto fhgs = quaternary_factorizations(beta);
  std::vector<CyclicCode> out;
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& b : bs) {
    const int db = b.degree();
    if (db > 24) throw CapacityError("too many candidates for l with deg b = " + std::to_string(db));
    const std::uint64_t nl = alpha == 0 ? 1 : (std::uint64_t{1} << db);
    for (const auto& fhg : fhgs) {
      for (std::uint64_t v = 0; v < nl; ++v) {
        CyclicGenerators g{alpha, beta, b, from_bit_value(v), fhg[0], fhg[1], fhg[2]};
        if (!validate(g).ok()) continue;
        CyclicCode c = CyclicCode::from_generators(std::move(g));
        if (opts.dedupe) {
          const AdditiveCode code = enumerate(realize(c), opts.capacity);
          if (!seen.insert(code.keys()).second) continue;
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace z2z4
