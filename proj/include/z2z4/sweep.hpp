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

// Exhaustive cross-validation of the structural results on every cyclic code
// of small length.

#ifndef Z2Z4_SWEEP_HPP
#define Z2Z4_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "z2z4/linimage.hpp"

namespace z2z4 {

struct SweepOptions {
  std::vector<int> alphas{1, 2, 3, 4};
  std::vector<int> betas{1, 3, 5, 7};
  int jobs = 1;
  std::uint64_t capacity = kDefaultCapacity;
  // Also run the exhaustive 2u*v oracle when the number of reduction-class
  // pairs is at most this bound.
  std::uint64_t exhaustive_pair_limit = 1U << 15;
  TensorSquareFn tensor = default_tensor_square;
};

struct SweepStats {
  std::size_t codes = 0;
  std::size_t skipped_capacity = 0;
  std::size_t linear = 0;
  std::size_t nonlinear = 0;
  std::size_t criterion_mismatch = 0;  // criterion vs generator-pair oracle
  std::size_t oracle_disagreement = 0; // generator-pair vs exhaustive oracle vs image closure
  std::size_t not_cyclic = 0;
  std::size_t cardinality_mismatch = 0;
  std::size_t type_mismatch = 0;
  std::size_t order_two_mismatch = 0;
  std::size_t three_generator_mismatch = 0;
  std::size_t psi_checked = 0;
  std::size_t psi_not_double_cyclic = 0;
  std::size_t psi_span_mismatch = 0;
  std::size_t multiplier_mismatch = 0;  // elimination vs exhaustive solve
  std::size_t family_members = 0;
  std::size_t family_exceptions = 0;
  std::vector<std::string> failures;  // first few, in enumeration order

  std::size_t total_mismatches() const {
    return criterion_mismatch + oracle_disagreement + not_cyclic + cardinality_mismatch + type_mismatch +
           order_two_mismatch + three_generator_mismatch + psi_not_double_cyclic + psi_span_mismatch +
           multiplier_mismatch + family_exceptions;
  }
  void merge(const SweepStats& o, std::size_t max_failures = 20);
};

// All checks on one validated code.
SweepStats check_cyclic_code(const CyclicCode& c, const SweepOptions& opts);

SweepStats run_sweep(const SweepOptions& opts);

struct WolfmannStats {
  std::size_t codes = 0;
  std::size_t skipped_capacity = 0;
  std::size_t linear = 0;
  std::size_t mismatches = 0;  // Wolfmann, general criterion and oracle must agree
  std::vector<std::string> failures;
};

WolfmannStats run_wolfmann_sweep(const std::vector<int>& lengths, const SweepOptions& opts);

std::string describe(const CyclicGenerators& g);

}  // namespace z2z4

#endif  // Z2Z4_SWEEP_HPP
