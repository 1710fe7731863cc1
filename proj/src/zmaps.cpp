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

#include "z2z4/zmaps.hpp"

#include <numeric>
#include <string>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

void require_odd(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("Nechaev permutation needs odd length, got " + std::to_string(n));
}

}  // namespace

BitVec gray(const QuatVec& u) {
  const std::size_t n = u.size();
  BitVec out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] > 3) throw DomainError("quaternary entry out of range");
    const std::uint8_t lo = u[i] & 1U, hi = (u[i] >> 1) & 1U;
    out[i] = hi;
    out[n + i] = lo ^ hi;
  }
  return out;
}

BitVec gray_inv(const BitVec& v) {
  if (v.size() % 2) throw DomainError("Gray preimage needs even length, got " + std::to_string(v.size()));
  const std::size_t n = v.size() / 2;
  QuatVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t hi = v[i] & 1U, lo = (v[n + i] ^ v[i]) & 1U;
    out[i] = static_cast<std::uint8_t>(lo + 2 * hi);
  }
  return out;
}

std::vector<int> nechaev_tau(int n) {
  require_odd(n);
  std::vector<int> tau(static_cast<std::size_t>(2 * n));
  std::iota(tau.begin(), tau.end(), 0);
  for (int i = 1; i <= n - 2; i += 2) std::swap(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(n + i)]);
  return tau;
}

BitVec nechaev_perm(const BitVec& v, int n) {
  require_odd(n);
  if (v.size() != static_cast<std::size_t>(2 * n))
    throw DomainError("Nechaev permutation of length " + std::to_string(v.size()) + " for n = " + std::to_string(n));
  const auto tau = nechaev_tau(n);
  BitVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[static_cast<std::size_t>(tau[i])];
  return out;
}

BitVec nechaev_gray(const QuatVec& u) { return nechaev_perm(gray(u), static_cast<int>(u.size())); }

BitVec nechaev_gray_inv(const BitVec& v) {
  if (v.size() % 2) throw DomainError("Nechaev-Gray preimage needs even length");
  return gray_inv(nechaev_perm(v, static_cast<int>(v.size() / 2)));
}

BitVec ext_gray(const MixedVector& w) {
  BitVec out = w.bin;
  const BitVec q = gray(w.quat);
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

BitVec ext_nechaev_gray(const MixedVector& w) {
  BitVec out = w.bin;
  if (!w.quat.empty()) {
    const BitVec q = nechaev_gray(w.quat);
    out.insert(out.end(), q.begin(), q.end());
  }
  return out;
}

namespace {

MixedVector split(const BitVec& v, int alpha, int beta, bool nechaev) {
  if (alpha < 0 || beta < 0 || v.size() != static_cast<std::size_t>(alpha + 2 * beta))
    throw DomainError("binary vector length does not match alpha + 2 beta");
  MixedVector out;
  out.bin.assign(v.begin(), v.begin() + alpha);
  const BitVec tail(v.begin() + alpha, v.end());
  if (beta > 0) out.quat = nechaev ? nechaev_gray_inv(tail) : gray_inv(tail);
  return out;
}

}  // namespace

MixedVector ext_gray_inv(const BitVec& v, int alpha, int beta) { return split(v, alpha, beta, false); }

MixedVector ext_nechaev_gray_inv(const BitVec& v, int alpha, int beta) { return split(v, alpha, beta, true); }

int lee_weight(const QuatVec& u) {
  int w = 0;
  for (auto x : u) w += (x == 0) ? 0 : (x == 2 ? 2 : 1);
  return w;
}

int hamming_weight(const BitVec& v) {
  int w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

}  // namespace z2z4
