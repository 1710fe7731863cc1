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

// Gray map phi, Nechaev permutation sigma, Nechaev-Gray map psi = sigma phi,
// and their extensions Phi, Psi to Z2^alpha x Z4^beta.
//
// Images are laid out as (u-hat block | u-tilde + u-hat block): symbol j of
// a length-n quaternary vector contributes bit j and bit n + j.

#ifndef Z2Z4_ZMAPS_HPP
#define Z2Z4_ZMAPS_HPP

#include <vector>

#include "z2z4/vectors.hpp"

namespace z2z4 {

BitVec gray(const QuatVec& u);
BitVec gray_inv(const BitVec& v);

// Coordinate involution tau = (1, n+1)(3, n+3)...(n-2, 2n-2) on 2n positions,
// as an index table. Identity for n = 1.
std::vector<int> nechaev_tau(int n);
BitVec nechaev_perm(const BitVec& v, int n);

BitVec nechaev_gray(const QuatVec& u);
BitVec nechaev_gray_inv(const BitVec& v);

BitVec ext_gray(const MixedVector& w);
BitVec ext_nechaev_gray(const MixedVector& w);
MixedVector ext_gray_inv(const BitVec& v, int alpha, int beta);
MixedVector ext_nechaev_gray_inv(const BitVec& v, int alpha, int beta);

int lee_weight(const QuatVec& u);
int hamming_weight(const BitVec& v);

}  // namespace z2z4

#endif  // Z2Z4_ZMAPS_HPP
