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

// Fixed corpus of worked examples plus the exhaustive sweeps, as a checklist.

#ifndef Z2Z4_REPRODUCE_HPP
#define Z2Z4_REPRODUCE_HPP

#include <string>
#include <vector>

#include "z2z4/io.hpp"

namespace z2z4 {

struct ReproduceOptions {
  bool quick = false;  // sweep alpha <= 2, beta <= 3 and short Wolfmann lengths
  int jobs = 1;
  std::uint64_t capacity = kDefaultCapacity;
  TensorSquareFn tensor = default_tensor_square;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  Json details;
};

// Individual checks; each is deterministic.
CheckResult check_factor_x7();
CheckResult check_noncyclic_product(const ReproduceOptions& o);
CheckResult check_gray_nonlinear_linear_y(const ReproduceOptions& o);
CheckResult check_type_without_linear_image(const ReproduceOptions& o);
CheckResult check_nechaev_image_example(const ReproduceOptions& o);
CheckResult check_subgroup_family_spots(const ReproduceOptions& o);
CheckResult check_cyclic_sweep(const ReproduceOptions& o);
CheckResult check_wolfmann_sweep(const ReproduceOptions& o);

std::vector<CheckResult> run_reproduction(const ReproduceOptions& o);

// The matrices and generators of the worked examples.
GeneratorMatrix noncyclic_example_matrix();
GeneratorMatrix gray_nonlinear_example_matrix();
CyclicGenerators nechaev_example_generators();

}  // namespace z2z4

#endif  // Z2Z4_REPRODUCE_HPP
