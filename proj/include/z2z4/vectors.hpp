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

#ifndef Z2Z4_VECTORS_HPP
#define Z2Z4_VECTORS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace z2z4 {

using BitVec = std::vector<std::uint8_t>;   // entries in {0, 1}
using QuatVec = std::vector<std::uint8_t>;  // entries in {0, 1, 2, 3}

// Codeword (u | u') of Z2^alpha x Z4^beta. Ordering is lexicographic on the
// binary block, then on the quaternary block.
struct MixedVector {
  BitVec bin;
  QuatVec quat;

  static MixedVector zero(int alpha, int beta) {
    return {BitVec(static_cast<std::size_t>(alpha), 0), QuatVec(static_cast<std::size_t>(beta), 0)};
  }

  int alpha() const { return static_cast<int>(bin.size()); }
  int beta() const { return static_cast<int>(quat.size()); }
  bool is_zero() const;
  // Additive order: 1, 2 or 4.
  int order() const;

  MixedVector& operator+=(const MixedVector& o);
  friend MixedVector operator+(MixedVector a, const MixedVector& b) { return a += b; }
  friend MixedVector operator-(const MixedVector& a);
  friend MixedVector operator-(const MixedVector& a, const MixedVector& b) { return a + (-b); }
  // Integer multiple; the binary block sees c mod 2.
  friend MixedVector operator*(unsigned c, const MixedVector& a);

  friend bool operator==(const MixedVector&, const MixedVector&) = default;
  friend auto operator<=>(const MixedVector&, const MixedVector&) = default;
};

// Componentwise product u * v = (u * v | u' * v').
MixedVector componentwise_product(const MixedVector& u, const MixedVector& v);
// 2 u * v; only the reductions of the quaternary blocks matter.
MixedVector twice_product(const MixedVector& u, const MixedVector& v);

// Simultaneous right cyclic shift of both blocks.
MixedVector shift(const MixedVector& v);

// Comma-separated digits; mixed vectors as "bits|quats" (either side may be
// empty). Throws DomainError on malformed input or out-of-range digits.
std::vector<std::uint8_t> parse_digits(std::string_view text, unsigned modulus);
MixedVector parse_mixed(std::string_view text);
std::string format_digits(const std::vector<std::uint8_t>& v);
std::string format_mixed(const MixedVector& v);

}  // namespace z2z4

#endif  // Z2Z4_VECTORS_HPP
