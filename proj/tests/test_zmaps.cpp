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

#include "doctest.h"
#include "z2z4/errors.hpp"
#include "z2z4/vectors.hpp"
#include "z2z4/zmaps.hpp"

using namespace z2z4;

namespace {

// All mixed vectors of shape (alpha | beta).
std::vector<MixedVector> all_vectors(int alpha, int beta) {
  std::vector<MixedVector> out;
  const int total = 1 << (alpha + 2 * beta);
  for (int code = 0; code < total; ++code) {
    MixedVector v = MixedVector::zero(alpha, beta);
    int c = code;
    for (auto& b : v.bin) {
      b = static_cast<std::uint8_t>(c & 1);
      c >>= 1;
    }
    for (auto& q : v.quat) {
      q = static_cast<std::uint8_t>(c & 3);
      c >>= 2;
    }
    out.push_back(v);
  }
  return out;
}

BitVec xor_bits(const BitVec& a, const BitVec& b) {
  BitVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

}  // namespace

TEST_CASE("mixed vector arithmetic and text") {
  const MixedVector v = parse_mixed("1,0|1,2,3");
  CHECK(v.bin == BitVec{1, 0});
  CHECK(v.quat == QuatVec{1, 2, 3});
  CHECK(format_mixed(v) == "1,0|1,2,3");
  CHECK((v + v) == parse_mixed("0,0|2,0,2"));
  CHECK(-v == parse_mixed("1,0|3,2,1"));
  CHECK(v.order() == 4);
  CHECK(parse_mixed("1,0|2,0,0").order() == 2);
  CHECK(MixedVector::zero(2, 3).order() == 1);
  CHECK(shift(parse_mixed("1,0|1,0,0")) == parse_mixed("0,1|0,1,0"));
  CHECK(shift(parse_mixed("0,0|0,0,1")) == parse_mixed("0,0|1,0,0"));
  CHECK(shift(MixedVector::zero(3, 3)) == MixedVector::zero(3, 3));
  CHECK(parse_mixed("|1,2") == MixedVector{{}, {1, 2}});
  CHECK(parse_mixed("1,1|") == MixedVector{{1, 1}, {}});
  CHECK_THROWS_AS(parse_mixed("2|1"), DomainError);
  CHECK_THROWS_AS(parse_mixed("1,0"), DomainError);
  CHECK(twice_product(parse_mixed("0,0,0|1,1,0"), parse_mixed("0,0,0|1,0,1")) == parse_mixed("0,0,0|2,0,0"));
  CHECK(componentwise_product(parse_mixed("1,1|3,2"), parse_mixed("1,0|3,3")) == parse_mixed("1,0|1,2"));
}

TEST_CASE("Gray map") {
  CHECK(gray({0}) == BitVec{0, 0});
  CHECK(gray({1}) == BitVec{0, 1});
  CHECK(gray({2}) == BitVec{1, 1});
  CHECK(gray({3}) == BitVec{1, 0});
  CHECK(gray({1, 3, 1}) == BitVec{0, 1, 0, 1, 0, 1});
  CHECK(gray_inv({0, 1, 0, 1, 0, 1}) == QuatVec{1, 3, 1});
  CHECK(gray_inv({1, 1}) == QuatVec{2});
  CHECK(gray_inv({1, 0}) == QuatVec{3});
  CHECK_THROWS_AS(gray_inv({1, 0, 1}), DomainError);
  for (const auto& w : all_vectors(0, 4)) {
    CHECK(gray_inv(gray(w.quat)) == w.quat);
    CHECK(hamming_weight(gray(w.quat)) == lee_weight(w.quat));
  }
  CHECK(lee_weight({0, 1, 2, 3}) == 4);
}

TEST_CASE("Nechaev permutation") {
  CHECK(nechaev_tau(3) == std::vector<int>{0, 4, 2, 3, 1, 5});
  CHECK(nechaev_perm({1, 0, 0, 1, 1, 0}, 3) == BitVec{1, 1, 0, 1, 0, 0});
  CHECK(nechaev_perm({0, 1, 0, 1, 0, 1}, 3) == BitVec{0, 0, 0, 1, 1, 1});
  CHECK(nechaev_perm({1, 0}, 1) == BitVec{1, 0});
  CHECK_THROWS_AS(nechaev_tau(4), DomainError);
  CHECK_THROWS_AS(nechaev_perm({1, 0, 1}, 3), DomainError);
  for (int n : {1, 3, 5, 7, 9}) {
    const auto tau = nechaev_tau(n);
    for (int i = 0; i < 2 * n; ++i) CHECK(tau[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])] == i);
    // Swaps exactly i <-> n + i for odd i < n - 1.
    for (int i = 0; i < 2 * n; ++i) {
      const int base = i < n ? i : i - n;
      const bool moved = base % 2 == 1 && base <= n - 2;
      CHECK(tau[static_cast<std::size_t>(i)] == (moved ? (i < n ? i + n : i - n) : i));
    }
  }
}

TEST_CASE("Nechaev-Gray map") {
  CHECK(nechaev_gray({0, 0, 0}) == BitVec(6, 0));
  CHECK(nechaev_gray({1, 3, 1}) == nechaev_perm(gray({1, 3, 1}), 3));
  CHECK(nechaev_gray_inv({1, 1, 1, 0, 0, 0}) == QuatVec{3, 1, 3});
  CHECK_THROWS_AS(nechaev_gray({1, 2}), DomainError);
  for (const auto& w : all_vectors(0, 3)) CHECK(nechaev_gray_inv(nechaev_gray(w.quat)) == w.quat);
}

TEST_CASE("extended maps") {
  CHECK(ext_gray(parse_mixed("1,0|2")) == BitVec{1, 0, 1, 1});
  CHECK(ext_gray(MixedVector::zero(2, 3)) == BitVec(8, 0));
  CHECK(ext_gray(parse_mixed("0,0,0|1,3,1")) == BitVec{0, 0, 0, 0, 1, 0, 1, 0, 1});
  CHECK(ext_nechaev_gray(parse_mixed("1|1,3,1")) == BitVec{1, 0, 0, 0, 1, 1, 1});
  CHECK_THROWS_AS(ext_nechaev_gray(parse_mixed("1|1,3")), DomainError);
  for (const auto& w : all_vectors(2, 3)) {
    CHECK(ext_gray_inv(ext_gray(w), 2, 3) == w);
    CHECK(ext_nechaev_gray_inv(ext_nechaev_gray(w), 2, 3) == w);
  }
}

TEST_CASE("Gray image of a sum") {
  // Phi(v + w) = Phi(v) + Phi(w) + Phi(2 v * w).
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const auto all = all_vectors(a, b);
      for (const auto& v : all)
        for (const auto& w : all)
          CHECK(ext_gray(v + w) == xor_bits(xor_bits(ext_gray(v), ext_gray(w)), ext_gray(twice_product(v, w))));
    }
}
