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

#include "z2z4/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "z2z4/errors.hpp"

namespace z2z4 {

template <unsigned Mod>
Poly<Mod> poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly<Mod>(j.get<std::string>());
  if (j.is_array()) {
    std::vector<std::uint8_t> c;
    for (const auto& e : j) {
      if (!e.is_number_integer()) throw DomainError("polynomial arrays must hold integers");
      const int v = e.get<int>();
      if (v < 0 || v >= static_cast<int>(Mod)) throw DomainError("coefficient out of range: " + std::to_string(v));
      c.push_back(static_cast<std::uint8_t>(v));
    }
    return Poly<Mod>(std::move(c));
  }
  if (j.is_number_integer()) return parse_poly<Mod>(std::to_string(j.get<int>()));
  throw DomainError("a polynomial must be a string or a coefficient array");
}

template BinPoly poly_from_json<2>(const Json&);
template QuatPoly poly_from_json<4>(const Json&);

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw DomainError(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

MixedVector row_from_tokens(const std::vector<std::string>& toks) {
  MixedVector v;
  bool quat = false;
  for (const auto& t : toks) {
    if (t == "|") {
      if (quat) throw DomainError("a row may contain only one '|'");
      quat = true;
      continue;
    }
    if (t.size() != 1 || !std::isdigit(static_cast<unsigned char>(t[0]))) throw DomainError("bad matrix entry '" + t + "'");
    const int d = t[0] - '0';
    if (d >= (quat ? 4 : 2)) throw DomainError("matrix entry out of range: " + t);
    (quat ? v.quat : v.bin).push_back(static_cast<std::uint8_t>(d));
  }
  if (!quat) throw DomainError("matrix rows need a '|' separating the blocks");
  return v;
}

std::vector<std::string> tokenize_row(std::string_view line) {
  std::vector<std::string> toks;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) toks.push_back(cur);
    cur.clear();
  };
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '&') {
      flush();
    } else if (ch == '|') {
      flush();
      toks.emplace_back("|");
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return toks;
}

}  // namespace

GeneratorMatrix matrix_from_json(const Json& j) {
  GeneratorMatrix m;
  m.alpha = get_int(j, "alpha");
  m.beta = get_int(j, "beta");
  if (!j.contains("rows") || !j["rows"].is_array()) throw DomainError("missing array field 'rows'");
  for (const auto& r : j["rows"]) {
    if (r.is_string()) {
      m.rows.push_back(row_from_tokens(tokenize_row(r.get<std::string>())));
    } else if (r.is_array()) {
      std::vector<std::string> toks;
      for (const auto& e : r) toks.push_back(e.is_string() ? e.get<std::string>() : std::to_string(e.get<int>()));
      m.rows.push_back(row_from_tokens(toks));
    } else {
      throw DomainError("matrix rows must be arrays or strings");
    }
  }
  m.check_shape();
  return m;
}

GeneratorMatrix parse_matrix_text(std::string_view text) {
  GeneratorMatrix m;
  bool first = true;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto toks = tokenize_row(line);
    if (toks.empty()) continue;
    MixedVector v = row_from_tokens(toks);
    if (first) {
      m.alpha = v.alpha();
      m.beta = v.beta();
      first = false;
    }
    m.rows.push_back(std::move(v));
  }
  if (first) throw DomainError("the matrix text has no rows");
  m.check_shape();
  return m;
}

GeneratorMatrix parse_matrix(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    try {
      return matrix_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw DomainError(std::string("invalid matrix JSON: ") + e.what());
    }
  }
  return parse_matrix_text(text);
}

CyclicGenerators generators_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("cyclic generators must be a JSON object");
  CyclicGenerators g;
  g.alpha = get_int(j, "alpha");
  g.beta = get_int(j, "beta");
  if (g.alpha < 0) throw DomainError("alpha must be non-negative");
  if (j.contains("b")) {
    g.b = poly_from_json<2>(j["b"]);
  } else {
    g.b = g.alpha == 0 ? BinPoly::one() : BinPoly::x_n_minus_1(g.alpha);
  }
  const char* ell_key = j.contains("ell") ? "ell" : "l";
  if (j.contains(ell_key)) g.ell = poly_from_json<2>(j[ell_key]);
  for (auto [key, dst] : {std::pair{"f", &g.f}, std::pair{"h", &g.h}, std::pair{"g", &g.g}}) {
    if (!j.contains(key)) throw DomainError(std::string("missing polynomial field '") + key + "'");
    *dst = poly_from_json<4>(j[key]);
  }
  return g;
}

CyclicGenerators load_generators(const std::string& text_or_path) {
  const auto pos = text_or_path.find_first_not_of(" \t\r\n");
  const std::string text =
      (pos != std::string::npos && text_or_path[pos] == '{') ? text_or_path : read_text_file(text_or_path);
  try {
    return generators_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("invalid code JSON: ") + e.what());
  }
}

std::string format_bits(const BitVec& v) { return format_digits(v); }

Json to_json(const CyclicGenerators& g) {
  return Json{{"alpha", g.alpha}, {"beta", g.beta}, {"b", to_string(g.b)}, {"ell", to_string(g.ell)},
              {"f", to_string(g.f)}, {"h", to_string(g.h)}, {"g", to_string(g.g)}};
}

Json to_json(const CodeType& t) {
  Json j{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}, {"delta", t.delta}, {"kappa", t.kappa}};
  if (t.kappa1) j["kappa1"] = *t.kappa1;
  if (t.kappa2) j["kappa2"] = *t.kappa2;
  if (t.delta1) j["delta1"] = *t.delta1;
  if (t.delta2) j["delta2"] = *t.delta2;
  j["log2_size"] = t.log2_size();
  return j;
}

Json to_json(const ResidueWord& w, int alpha, int beta) {
  return Json{{"bin", to_string(w.bin)}, {"quat", to_string(w.quat)}, {"vector", format_mixed(to_vector(w, alpha, beta))}};
}

Json to_json(const OracleResult& r) {
  Json j{{"linear", r.linear}};
  if (r.witness) j["witness"] = Json::array({format_mixed(r.witness->first), format_mixed(r.witness->second)});
  if (r.product) j["product"] = format_mixed(*r.product);
  return j;
}

Json to_json(const LinearityReport& r) {
  Json j{{"criterion_poly", to_string(r.criterion_poly)},
         {"tensor_poly", to_string(r.tensor_poly)},
         {"gcd", to_string(r.gcd_value)},
         {"verdict", r.verdict}};
  if (r.oracle_verdict) j["oracle_verdict"] = *r.oracle_verdict;
  if (r.oracle && r.oracle->witness) {
    j["witness"] = Json::array({format_mixed(r.oracle->witness->first), format_mixed(r.oracle->witness->second)});
    j["witness_product"] = format_mixed(*r.oracle->product);
  }
  return j;
}

Json to_json(const DoubleCyclicGenerators& d) {
  return Json{{"r", d.r}, {"s", d.s}, {"b", to_string(d.b)}, {"ell_prime", to_string(d.ellp)}, {"a", to_string(d.a)},
              {"multiplier", to_string(d.multiplier)}};
}

Json to_json(const SweepStats& s) {
  return Json{{"codes", s.codes},
              {"skipped_capacity", s.skipped_capacity},
              {"linear", s.linear},
              {"nonlinear", s.nonlinear},
              {"criterion_mismatch", s.criterion_mismatch},
              {"oracle_disagreement", s.oracle_disagreement},
              {"not_cyclic", s.not_cyclic},
              {"cardinality_mismatch", s.cardinality_mismatch},
              {"type_mismatch", s.type_mismatch},
              {"order_two_mismatch", s.order_two_mismatch},
              {"three_generator_mismatch", s.three_generator_mismatch},
              {"psi_checked", s.psi_checked},
              {"psi_not_double_cyclic", s.psi_not_double_cyclic},
              {"psi_span_mismatch", s.psi_span_mismatch},
              {"multiplier_mismatch", s.multiplier_mismatch},
              {"family_members", s.family_members},
              {"family_exceptions", s.family_exceptions},
              {"failures", s.failures}};
}

Json to_json(const WolfmannStats& s) {
  return Json{{"codes", s.codes},
              {"skipped_capacity", s.skipped_capacity},
              {"linear", s.linear},
              {"mismatches", s.mismatches},
              {"failures", s.failures}};
}

Json matrix_to_json(const GeneratorMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows) rows.push_back(format_mixed(r));
  return Json{{"alpha", m.alpha}, {"beta", m.beta}, {"rows", rows}};
}

}  // namespace z2z4
