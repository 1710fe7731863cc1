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

// z2z4: command-line front end.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "z2z4/cyclofield.hpp"
#include "z2z4/errors.hpp"
#include "z2z4/io.hpp"
#include "z2z4/reproduce.hpp"
#include "z2z4/zmaps.hpp"

namespace {

using namespace z2z4;

constexpr const char* kVersion = "1.0.0";

std::uint64_t capacity_from_env() {
  const char* env = std::getenv("Z2Z4_CAPACITY");
  if (env == nullptr || *env == '\0') return kDefaultCapacity;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw DomainError(std::string("Z2Z4_CAPACITY must be a positive integer, got '") + env + "'");
  return v;
}

class Timer {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(const std::string& command, Json inputs, Json results, const Timer& t) {
  Json out;
  out["tool"] = "z2z4";
  out["version"] = kVersion;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["elapsed_ms"] = t.elapsed_ms();
  std::cout << out.dump(2) << "\n";
}

// Aligned two-column key/value listing.
void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& r : rows) std::cout << std::left << std::setw(static_cast<int>(w) + 2) << r.first << r.second << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct CodeArgs {
  std::string code;
  int alpha = -1, beta = -1;
  std::string b, ell, f, h, g;

  void add_to(CLI::App* app, bool inline_polys) {
    app->add_option("--code", code, "cyclic generators as JSON text or a JSON file path");
    if (!inline_polys) return;
    app->set_help_flag("--help", "print this help and exit");  // frees -h
    app->add_option("--alpha", alpha, "binary length");
    app->add_option("--beta", beta, "quaternary length (odd)");
    app->add_option("--b", b, "binary generator b (divides x^alpha-1)");
    app->add_option("--ell,--l", ell, "binary polynomial l");
    app->add_option("--f", f, "Z4 factor f");
    app->add_option("--h", h, "Z4 factor h");
    app->add_option("--g", g, "Z4 factor g");
  }

  CyclicGenerators generators() const {
    if (!code.empty()) return load_generators(code);
    if (alpha < 0 || beta < 0) throw DomainError("give --code or --alpha/--beta with the generator polynomials");
    Json j{{"alpha", alpha}, {"beta", beta}};
    if (!b.empty()) j["b"] = b;
    if (!ell.empty()) j["ell"] = ell;
    j["f"] = f.empty() ? "1" : f;
    j["h"] = h.empty() ? "1" : h;
    j["g"] = g.empty() ? "1" : g;
    return generators_from_json(j);
  }
};

int cmd_factor(int n, const std::string& ring, bool json) {
  const Timer t;
  Json results = Json::array();
  std::vector<std::string> text;
  if (ring == "z2") {
    for (const auto& p : factor_xn_minus_1_z2(n)) {
      results.push_back(to_array(p));
      text.push_back(to_string(p));
    }
  } else if (ring == "z4") {
    for (const auto& p : factor_xn_minus_1_z4(n)) {
      results.push_back(to_array(p));
      text.push_back(to_string(p));
    }
  } else {
    throw DomainError("--ring must be z2 or z4");
  }
  if (json) {
    emit_json("factor", Json{{"n", n}, {"ring", ring}}, results, t);
  } else {
    std::cout << "x^" << n << "-1 over " << (ring == "z2" ? "Z2" : "Z4") << ": " << text.size() << " factors\n";
    for (std::size_t i = 0; i < text.size(); ++i)
      std::cout << std::right << std::setw(4) << i + 1 << "  deg " << std::setw(3) << results[i].size() - 1 << "  "
                << text[i] << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& path, bool json, bool oracle_full, std::uint64_t cap) {
  const Timer t;
  const GeneratorMatrix m = parse_matrix(read_text_file(path));
  const AdditiveCode c = enumerate(m, cap);
  const StandardForm sf = standard_form(m);
  const SeparableCyclicity sc = separable_cyclicity(c);
  const CyclicityCheck cc = check_cyclic(c);
  const OracleResult gen = gray_is_linear_oracle(c, m);
  Json r;
  r["size"] = c.size();
  r["type"] = to_json(sf.type);
  r["standard_form"] = matrix_to_json(sf.matrix);
  r["bin_permutation"] = sf.bin_perm;
  r["quat_permutation"] = sf.quat_perm;
  r["cyclic"] = sc.cyclic;
  if (cc.witness) r["cyclic_witness"] = format_mixed(*cc.witness);
  r["x_cyclic"] = sc.x_cyclic;
  r["y_cyclic"] = sc.y_cyclic;
  r["separable"] = sc.separable;
  r["gray_linear"] = gen.linear;
  r["oracle"] = to_json(gen);
  r["y_gray_linear"] = gray_image_is_linear(puncture_y(c));
  if (oracle_full) r["exhaustive_oracle"] = to_json(gray_is_linear_oracle(c, cap));
  if (json) {
    emit_json("analyze", Json{{"matrix", matrix_to_json(m)}}, r, t);
    return 0;
  }
  const auto& ty = sf.type;
  std::vector<std::pair<std::string, std::string>> rows{
      {"type", "(" + std::to_string(ty.alpha) + "," + std::to_string(ty.beta) + "; " + std::to_string(ty.gamma) + "," +
                   std::to_string(ty.delta) + "; " + std::to_string(ty.kappa) + ")"},
      {"size", std::to_string(c.size())},
      {"cyclic", yes_no(sc.cyclic) + (cc.witness ? "  (shift of " + format_mixed(*cc.witness) + " leaves C)" : "")},
      {"C_X cyclic", yes_no(sc.x_cyclic)},
      {"C_Y cyclic", yes_no(sc.y_cyclic)},
      {"separable", yes_no(sc.separable)},
      {"Gray image linear", yes_no(gen.linear)},
      {"phi(C_Y) linear", yes_no(r["y_gray_linear"].get<bool>())}};
  if (gen.witness)
    rows.emplace_back("witness", "2 " + format_mixed(gen.witness->first) + " * " + format_mixed(gen.witness->second) +
                                     " = " + format_mixed(*gen.product));
  print_table(rows);
  std::cout << "standard form:\n";
  for (const auto& row : sf.matrix.rows) std::cout << "  " << format_mixed(row) << "\n";
  return 0;
}

int cmd_code(const CodeArgs& args, bool json, bool enumerate_check, std::uint64_t cap) {
  const Timer t;
  const CyclicGenerators raw = args.generators();
  ValidationReport rep = validate(raw);
  Json r;
  r["violations"] = rep.violations;
  std::optional<CyclicCode> c;
  // l of too high degree is reduced, not rejected.
  if (!rep.ok()) {
    try {
      c = CyclicCode::from_generators(raw);
      rep = validate(c->generators());
    } catch (const DomainError&) {
    }
  } else {
    c = CyclicCode::from_generators(raw);
  }
  r["valid"] = c.has_value();
  if (!c) {
    if (json) {
      emit_json("code", to_json(raw), r, t);
    } else {
      std::cout << "invalid generators:\n";
      for (const auto& v : rep.violations) std::cout << "  - " << v << "\n";
    }
    throw DomainError("the generators do not define a cyclic code in canonical form");
  }
  if (c->notice()) r["notice"] = *c->notice();
  const int a = c->alpha(), b = c->beta();
  r["generators"] = to_json(c->generators());
  const CodeType ty = code_type(*c);
  r["type"] = to_json(ty);
  const auto [o1, o2] = order_two_generators(*c);
  r["order_two_generators"] = Json::array({to_json(o1, a, b), to_json(o2, a, b)});
  const auto three = three_generator_form(*c);
  r["three_generator_form"] = Json::array({to_json(three[0], a, b), to_json(three[1], a, b), to_json(three[2], a, b)});
  const PuncturedGenerators pg = punctured_generators(*c);
  r["c_x_generator"] = to_string(pg.x_generator);
  r["c_y_generator"] = to_string(pg.y_generator);
  if (enumerate_check) {
    const GeneratorMatrix m = realize(*c);
    const AdditiveCode code = enumerate(m, cap);
    r["enumerated_size"] = code.size();
    r["standard_form_type"] = to_json(standard_form(m).type);
  }
  if (json) {
    emit_json("code", to_json(raw), r, t);
    return 0;
  }
  if (c->notice()) std::cout << "note: " << *c->notice() << "\n";
  print_table({{"validation", "ok"},
               {"type", "(" + std::to_string(ty.alpha) + "," + std::to_string(ty.beta) + "; " + std::to_string(ty.gamma) +
                            "," + std::to_string(ty.delta) + "; " + std::to_string(ty.kappa) + ")"},
               {"kappa1, kappa2", std::to_string(*ty.kappa1) + ", " + std::to_string(*ty.kappa2)},
               {"delta1, delta2", std::to_string(*ty.delta1) + ", " + std::to_string(*ty.delta2)},
               {"log2 |C|", std::to_string(ty.log2_size())},
               {"C_b generators", "(" + to_string(o1.bin) + " | " + to_string(o1.quat) + "), (" + to_string(o2.bin) +
                                      " | " + to_string(o2.quat) + ")"},
               {"three generators", "(" + to_string(three[0].bin) + " | " + to_string(three[0].quat) + "), (" +
                                        to_string(three[1].bin) + " | " + to_string(three[1].quat) + "), (" +
                                        to_string(three[2].bin) + " | " + to_string(three[2].quat) + ")"},
               {"C_X generator", to_string(pg.x_generator)},
               {"C_Y generator", to_string(pg.y_generator)}});
  if (enumerate_check) std::cout << "enumerated size: " << r["enumerated_size"].get<std::size_t>() << "\n";
  return 0;
}

int cmd_gray(const std::string& map, bool inv, int alpha, int beta, const std::string& vec, bool json) {
  const Timer t;
  std::string out;
  if (map == "phi" || map == "psi") {
    if (!inv) {
      const QuatVec u = parse_digits(vec, 4);
      out = format_digits(map == "phi" ? gray(u) : nechaev_gray(u));
    } else {
      const BitVec v = parse_digits(vec, 2);
      out = format_digits(map == "phi" ? gray_inv(v) : nechaev_gray_inv(v));
    }
  } else if (map == "Phi" || map == "Psi") {
    if (!inv) {
      const MixedVector w = parse_mixed(vec);
      if ((alpha >= 0 && alpha != w.alpha()) || (beta >= 0 && beta != w.beta()))
        throw DomainError("vector shape does not match --alpha/--beta");
      out = format_digits(map == "Phi" ? ext_gray(w) : ext_nechaev_gray(w));
    } else {
      if (alpha < 0 || beta < 0) throw DomainError("--inv with Phi/Psi needs --alpha and --beta");
      const BitVec v = parse_digits(vec, 2);
      out = format_mixed(map == "Phi" ? ext_gray_inv(v, alpha, beta) : ext_nechaev_gray_inv(v, alpha, beta));
    }
  } else {
    throw DomainError("--map must be phi, psi, Phi or Psi");
  }
  if (json) {
    emit_json("gray", Json{{"map", map}, {"inverse", inv}, {"vector", vec}}, Json{{"image", out}}, t);
  } else {
    std::cout << out << "\n";
  }
  return 0;
}

int cmd_linearity(const CodeArgs& args, bool oracle, bool json, std::uint64_t cap) {
  const Timer t;
  const CyclicCode c = CyclicCode::from_generators(args.generators());
  CriterionOptions co;
  co.with_oracle = oracle;
  co.capacity = cap;
  const LinearityReport rep = gray_linear_criterion(c, co);
  if (json) {
    Json r = to_json(rep);
    r["subgroup_family"] = in_subgroup_family(c);
    emit_json("linearity", to_json(c.generators()), r, t);
    return 0;
  }
  std::vector<std::pair<std::string, std::string>> rows{{"f~ b / gcd(b, l g~)", to_string(rep.criterion_poly)},
                                                        {"g~ (x) g~", to_string(rep.tensor_poly)},
                                                        {"gcd", to_string(rep.gcd_value)},
                                                        {"Gray image linear", yes_no(rep.verdict)}};
  if (rep.oracle_verdict) rows.emplace_back("oracle", yes_no(*rep.oracle_verdict));
  if (rep.oracle && rep.oracle->witness)
    rows.emplace_back("witness", "2 " + format_mixed(rep.oracle->witness->first) + " * " +
                                     format_mixed(rep.oracle->witness->second) + " = " + format_mixed(*rep.oracle->product));
  print_table(rows);
  return 0;
}

int cmd_image(const CodeArgs& args, const std::string& map, bool dump, bool json, std::uint64_t cap) {
  const Timer t;
  const CyclicCode c = CyclicCode::from_generators(args.generators());
  Json r;
  std::optional<BinaryCode> img;
  if (map == "Psi" || map == "psi") {
    CriterionOptions co;
    co.capacity = cap;
    const DoubleCyclicGenerators d = psi_image_generators(c, co);
    r["generators"] = to_json(d);
    if (dump) {
      img = double_cyclic_span(d, cap);
      r["double_cyclic"] = is_double_cyclic(*img, d.r, d.s);
    }
    if (!json) {
      print_table({{"r, s", std::to_string(d.r) + ", " + std::to_string(d.s)},
                   {"(b | 0)", "(" + to_string(d.b) + " | 0)"},
                   {"(l' | a)", "(" + to_string(d.ellp) + " | " + to_string(d.a) + ")"},
                   {"multiplier p", to_string(d.multiplier)}});
    }
  } else if (map == "Phi" || map == "phi") {
    img = gray_image(enumerate(realize(c), cap));
    r["linear"] = img->is_linear();
    if (!json) print_table({{"Gray image linear", yes_no(img->is_linear())}, {"size", std::to_string(img->size())}});
  } else {
    throw DomainError("--map must be Psi or Phi");
  }
  if (dump && img) {
    Json words = Json::array();
    for (std::size_t i = 0; i < img->size(); ++i) words.push_back(format_digits(img->vector(i)));
    r["size"] = img->size();
    r["length"] = img->length();
    r["words"] = words;
    if (!json)
      for (const auto& w : words) std::cout << "  " << w.get<std::string>() << "\n";
  }
  if (json) emit_json("image", Json{{"generators", to_json(c.generators())}, {"map", map}}, r, t);
  return 0;
}

int cmd_search(int alpha, int beta, const std::string& type, bool linear_only, bool oracle, int jobs, bool json,
               std::uint64_t cap) {
  const Timer t;
  TypeFilter tf;
  tf.linear_only = linear_only;
  if (!type.empty()) {
    std::vector<std::optional<int>*> slots{&tf.gamma, &tf.delta, &tf.kappa};
    std::stringstream ss(type);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
      if (i >= slots.size()) throw DomainError("--type takes at most gamma,delta,kappa");
      if (tok != "*" && !tok.empty()) {
        try {
          *slots[i] = std::stoi(tok);
        } catch (const std::exception&) {
          throw DomainError("bad --type entry '" + tok + "'");
        }
      }
      ++i;
    }
  }
  SearchOptions so;
  so.jobs = jobs;
  so.criterion.with_oracle = oracle;
  so.criterion.capacity = cap;
  const auto hits = search_by_type(alpha, beta, tf, so);
  if (json) {
    Json arr = Json::array();
    for (const auto& h : hits)
      arr.push_back(Json{{"generators", to_json(h.code.generators())}, {"type", to_json(h.type)}, {"report", to_json(h.report)}});
    Json in{{"alpha", alpha}, {"beta", beta}, {"type", type}, {"linear_only", linear_only}};
    emit_json("search", in, Json{{"count", hits.size()}, {"codes", arr}}, t);
    return 0;
  }
  std::cout << hits.size() << " code(s)\n";
  if (hits.empty()) return 0;
  std::cout << std::left << std::setw(10) << "type" << std::setw(14) << "b" << std::setw(12) << "l" << std::setw(18) << "f"
            << std::setw(18) << "h" << std::setw(18) << "g" << "linear\n";
  for (const auto& h : hits) {
    const auto& g = h.code.generators();
    std::cout << std::left << std::setw(10)
              << (std::to_string(h.type.gamma) + "," + std::to_string(h.type.delta) + "," + std::to_string(h.type.kappa))
              << std::setw(14) << to_string(g.b) << std::setw(12) << to_string(g.ell) << std::setw(18) << to_string(g.f)
              << std::setw(18) << to_string(g.h) << std::setw(18) << to_string(g.g) << yes_no(h.report.verdict) << "\n";
  }
  return 0;
}

int cmd_reproduce(bool quick, int jobs, bool json, std::uint64_t cap) {
  const Timer t;
  ReproduceOptions o;
  o.quick = quick;
  o.jobs = jobs;
  o.capacity = cap;
  const auto checks = run_reproduction(o);
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (json) {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(Json{{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"details", c.details}});
    emit_json("reproduce", Json{{"quick", quick}, {"capacity", cap}}, Json{{"all_pass", all}, {"checks", arr}}, t);
  } else {
    for (const auto& c : checks) std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << "\n";
    std::cout << (all ? "all checks passed" : "some checks FAILED") << " (" << t.elapsed_ms() << " ms)\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z2Z4-additive cyclic codes: construction, Gray images and linearity"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  bool json = false;
  int jobs = 1;

  auto* factor = app.add_subcommand("factor", "factor x^n-1 over Z2 or Z4");
  int n = 0;
  std::string ring = "z4";
  factor->add_option("--n", n, "odd length")->required();
  factor->add_option("--ring", ring, "z2 or z4")->check(CLI::IsMember({"z2", "z4"}));
  factor->add_flag("--json", json, "machine-readable output");

  auto* analyze = app.add_subcommand("analyze", "type, cyclicity, separability and Gray linearity of a matrix");
  std::string matrix;
  bool full_oracle = false;
  analyze->add_option("--matrix", matrix, "matrix file (JSON or text grid)")->required();
  analyze->add_flag("--exhaustive", full_oracle, "also run the exhaustive pairwise oracle");
  analyze->add_flag("--json", json, "machine-readable output");

  CodeArgs code_args;
  auto* code = app.add_subcommand("code", "validate cyclic generators and derive type and generator forms");
  bool enum_check = false;
  code_args.add_to(code, true);
  code->add_flag("--enumerate", enum_check, "cross-check the size by enumeration");
  code->add_flag("--json", json, "machine-readable output");

  auto* grayc = app.add_subcommand("gray", "apply the Gray or Nechaev-Gray map");
  std::string map, vec;
  bool inv = false;
  int ga = -1, gb = -1;
  grayc->add_option("--map", map, "phi, psi, Phi or Psi")->required();
  grayc->add_flag("--inv", inv, "apply the inverse map");
  grayc->add_option("--alpha", ga, "binary length (Phi, Psi)");
  grayc->add_option("--beta", gb, "quaternary length (Phi, Psi)");
  grayc->add_option("vector", vec, "digits, comma separated; mixed vectors as bits|quats")->required();
  grayc->add_flag("--json", json, "machine-readable output");

  CodeArgs lin_args;
  auto* lin = app.add_subcommand("linearity", "decide linearity of the Gray image of a cyclic code");
  bool oracle = false;
  lin_args.add_to(lin, true);
  lin->add_flag("--oracle", oracle, "cross-check by enumeration");
  lin->add_flag("--json", json, "machine-readable output");

  CodeArgs img_args;
  auto* image = app.add_subcommand("image", "generators of the Nechaev-Gray image (double cyclic code)");
  std::string img_map = "Psi";
  bool dump = false;
  img_args.add_to(image, true);
  image->add_option("--map", img_map, "Psi or Phi");
  image->add_flag("--dump", dump, "list every codeword of the image");
  image->add_flag("--json", json, "machine-readable output");

  auto* search = app.add_subcommand("search", "cyclic codes of given lengths filtered by type");
  int sa = 0, sb = 1;
  std::string type;
  bool linear_only = false, search_oracle = false;
  search->add_option("--alpha", sa, "binary length")->required();
  search->add_option("--beta", sb, "quaternary length (odd)")->required();
  search->add_option("--type", type, "gamma,delta[,kappa]; '*' is a wildcard");
  search->add_flag("--linear-only", linear_only, "keep codes with linear Gray image");
  search->add_flag("--oracle", search_oracle, "cross-check every report by enumeration");
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--json", json, "machine-readable output");

  auto* repro = app.add_subcommand("reproduce", "run the worked-example corpus and the exhaustive sweeps");
  bool quick = false;
  repro->add_flag("--quick", quick, "restricted sweep (alpha <= 2, beta <= 3)");
  repro->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  repro->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const std::uint64_t cap = capacity_from_env();
    if (factor->parsed()) return cmd_factor(n, ring, json);
    if (analyze->parsed()) return cmd_analyze(matrix, json, full_oracle, cap);
    if (code->parsed()) return cmd_code(code_args, json, enum_check, cap);
    if (grayc->parsed()) return cmd_gray(map, inv, ga, gb, vec, json);
    if (lin->parsed()) return cmd_linearity(lin_args, oracle, json, cap);
    if (image->parsed()) return cmd_image(img_args, img_map, dump, json, cap);
    if (search->parsed()) return cmd_search(sa, sb, type, linear_only, search_oracle, jobs, json, cap);
    if (repro->parsed()) return cmd_reproduce(quick, jobs, json, cap);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  }
  return 1;
}
