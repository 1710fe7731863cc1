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

// Linearity of Gray images of Z2Z4-additive cyclic codes and the
// double-cyclic structure of their Nechaev-Gray images.

#ifndef Z2Z4_LINIMAGE_HPP
#define Z2Z4_LINIMAGE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "z2z4/additive.hpp"
#include "z2z4/cycliccode.hpp"

namespace z2z4 {

// Replaceable tensor-square routine, so callers can inject a faulty one.
using TensorSquareFn = std::function<BinPoly(const BinPoly&, int)>;
BinPoly default_tensor_square(const BinPoly& p, int n);

// Quaternary cyclic <fh + 2f>: gcd(f~, g~ (x) g~) = 1.
bool wolfmann_linear(const QuatPoly& f, const QuatPoly& h, const QuatPoly& g, int n,
                     const TensorSquareFn& tensor = default_tensor_square);

struct LinearityReport {
  BinPoly criterion_poly;  // f~ b / gcd(b, l g~)
  BinPoly tensor_poly;     // g~ (x) g~
  BinPoly gcd_value;
  bool verdict = false;
  std::optional<bool> oracle_verdict;
  std::optional<OracleResult> oracle;
};

struct CriterionOptions {
  bool with_oracle = false;
  std::uint64_t capacity = kDefaultCapacity;
  TensorSquareFn tensor = default_tensor_square;
};

// phi(C) is linear iff gcd(f~ b / gcd(b, l g~), g~ (x) g~) = 1.
LinearityReport gray_linear_criterion(const CyclicCode& c, const CriterionOptions& opts = {});

// g = 1, or g~ = x^s - 1 for a divisor s of beta.
bool in_subgroup_family(const CyclicCode& c);

// Linearity of phi(C) and of phi(C_Y); the first implies the second.
struct ImplicationCheck {
  bool code_linear = false;
  bool y_linear = false;
  bool holds() const { return !code_linear || y_linear; }
};
ImplicationCheck cy_linear_implication_check(const AdditiveCode& c, std::uint64_t capacity = kDefaultCapacity);

// D = <(b | 0), (l' | a)> in Z2[x]/(x^r - 1) x Z2[x]/(x^s - 1).
struct DoubleCyclicGenerators {
  int r = 0;
  int s = 0;
  BinPoly b;
  BinPoly ellp;
  BinPoly a;
  QuatPoly multiplier;  // p with p (fh + 2f) = psi^-1(a)
};

// Lexicographically smallest p with p * c = target in Z4[x]/(x^beta - 1).
std::optional<QuatPoly> solve_multiplier(const QuatPoly& c, const QuatVec& target, int beta);
std::optional<QuatPoly> solve_multiplier_exhaustive(const QuatPoly& c, const QuatVec& target, int beta);

// Generators of the Nechaev-Gray image; a = f~^2 h~. Throws
// PreconditionError when the image is not linear.
DoubleCyclicGenerators psi_image_generators(const CyclicCode& c, const CriterionOptions& opts = {});

BinaryCode double_cyclic_span(const DoubleCyclicGenerators& d, std::uint64_t capacity = kDefaultCapacity);

// Invariance under the simultaneous cyclic shift of both blocks.
bool is_double_cyclic(const BinaryCode& code, int r, int s);

struct TypeFilter {
  std::optional<int> gamma, delta, kappa;
  bool linear_only = false;
  bool matches(const CodeType& t) const {
    return (!gamma || *gamma == t.gamma) && (!delta || *delta == t.delta) && (!kappa || *kappa == t.kappa);
  }
};

struct SearchHit {
  CyclicCode code;
  CodeType type;
  LinearityReport report;
};

struct SearchOptions {
  int jobs = 1;
  CriterionOptions criterion;
};

// Cyclic codes of the given lengths whose type matches, in enumeration order.
std::vector<SearchHit> search_by_type(int alpha, int beta, const TypeFilter& filter, const SearchOptions& opts = {});

// Runs fn(i) for i in [0, n) on up to `jobs` threads, contiguous blocks per thread.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace z2z4

#endif  // Z2Z4_LINIMAGE_HPP
