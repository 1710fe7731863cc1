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

// Row reduction over Z4 in Howell form.

#ifndef Z2Z4_Z4LINALG_HPP
#define Z2Z4_Z4LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace z2z4 {

using Z4Row = std::vector<std::uint8_t>;

struct HowellForm {
  int ncols = 0;
  std::vector<Z4Row> rows;  // strictly increasing leading columns
  std::vector<int> leads;

  // log2 of the number of elements in the row span.
  int log2_span_size() const;
};

// Entries outside [0, 4) are reduced; all rows must have length ncols.
HowellForm howell_form(std::vector<Z4Row> rows, int ncols);

// Lexicographically smallest element of v + span(H).
Z4Row howell_reduce(Z4Row v, const HowellForm& h);

// Lexicographically smallest x with sum_i x_i M_i = t, or nullopt.
std::optional<Z4Row> solve_lexmin(const std::vector<Z4Row>& m, const Z4Row& t);

// Same answer by scanning all 4^rows candidates; limited to 10 unknowns.
std::optional<Z4Row> solve_lexmin_exhaustive(const std::vector<Z4Row>& m, const Z4Row& t);

}  // namespace z2z4

#endif  // Z2Z4_Z4LINALG_HPP
