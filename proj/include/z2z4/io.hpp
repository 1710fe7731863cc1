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

// JSON and text serialization of polynomials, vectors, matrices and reports.

#ifndef Z2Z4_IO_HPP
#define Z2Z4_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "z2z4/additive.hpp"
#include "z2z4/cycliccode.hpp"
#include "z2z4/linimage.hpp"
#include "z2z4/sweep.hpp"

namespace z2z4 {

using Json = nlohmann::ordered_json;

// Polynomials are read from a human string ("x^2+x+3") or an ascending
// coefficient array ([3,1,1]); written as strings.
template <unsigned Mod>
Poly<Mod> poly_from_json(const Json& j);

std::string read_text_file(const std::string& path);

// JSON {"alpha", "beta", "rows": [[bits..., "|", quats...], ...]} (rows may
// also be "1,0|1,2,3" strings), or a text grid with one row per line, digits
// separated by blanks or commas and a "|" between the blocks.
GeneratorMatrix matrix_from_json(const Json& j);
GeneratorMatrix parse_matrix_text(std::string_view text);
// Detects JSON by a leading '{'.
GeneratorMatrix parse_matrix(std::string_view text);

// {"alpha", "beta", "b", "ell", "f", "h", "g"}; absent b defaults to
// x^alpha - 1 (or 1 for alpha = 0), absent ell to 0.
CyclicGenerators generators_from_json(const Json& j);
// Accepts inline JSON or the path of a JSON file.
CyclicGenerators load_generators(const std::string& text_or_path);

Json to_json(const CyclicGenerators& g);
Json to_json(const CodeType& t);
Json to_json(const ResidueWord& w, int alpha, int beta);
Json to_json(const OracleResult& r);
Json to_json(const LinearityReport& r);
Json to_json(const DoubleCyclicGenerators& d);
Json to_json(const SweepStats& s);
Json to_json(const WolfmannStats& s);
Json matrix_to_json(const GeneratorMatrix& m);

std::string format_bits(const BitVec& v);

}  // namespace z2z4

#endif  // Z2Z4_IO_HPP
