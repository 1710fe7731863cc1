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

#include "z2z4/vectors.hpp"

#include <algorithm>
#include <cctype>

#include "z2z4/errors.hpp"

namespace z2z4 {

bool MixedVector::is_zero() const {
  return std::all_of(bin.begin(), bin.end(), [](auto x) { return x == 0; }) &&
         std::all_of(quat.begin(), quat.end(), [](auto x) { return x == 0; });
}

int MixedVector::order() const {
  if (is_zero()) return 1;
  return std::any_of(quat.begin(), quat.end(), [](auto x) { return x & 1U; }) ? 4 : 2;
}

MixedVector& MixedVector::operator+=(const MixedVector& o) {
  if (o.bin.size() != bin.size() || o.quat.size() != quat.size()) throw DomainError("adding vectors of different shapes");
  for (std::size_t i = 0; i < bin.size(); ++i) bin[i] ^= o.bin[i];
  for (std::size_t i = 0; i < quat.size(); ++i) quat[i] = static_cast<std::uint8_t>((quat[i] + o.quat[i]) & 3U);
  return *this;
}

MixedVector operator-(const MixedVector& a) {
  MixedVector r = a;
  for (auto& x : r.quat) x = static_cast<std::uint8_t>((4 - x) & 3U);
  return r;
}

MixedVector operator*(unsigned c, const MixedVector& a) {
  MixedVector r = a;
  for (auto& x : r.bin) x = static_cast<std::uint8_t>((x * c) & 1U);
  for (auto& x : r.quat) x = static_cast<std::uint8_t>((x * c) & 3U);
  return r;
}

MixedVector componentwise_product(const MixedVector& u, const MixedVector& v) {
  if (u.bin.size() != v.bin.size() || u.quat.size() != v.quat.size())
    throw DomainError("componentwise product of vectors of different shapes");
  MixedVector r = u;
  for (std::size_t i = 0; i < r.bin.size(); ++i) r.bin[i] &= v.bin[i];
  for (std::size_t i = 0; i < r.quat.size(); ++i) r.quat[i] = static_cast<std::uint8_t>((u.quat[i] * v.quat[i]) & 3U);
  return r;
}

MixedVector twice_product(const MixedVector& u, const MixedVector& v) { return 2U * componentwise_product(u, v); }

MixedVector shift(const MixedVector& v) {
  MixedVector r = v;
  if (!r.bin.empty()) std::rotate(r.bin.rbegin(), r.bin.rbegin() + 1, r.bin.rend());
  if (!r.quat.empty()) std::rotate(r.quat.rbegin(), r.quat.rbegin() + 1, r.quat.rend());
  return r;
}

std::vector<std::uint8_t> parse_digits(std::string_view text, unsigned modulus) {
  std::vector<std::uint8_t> out;
  bool expect_digit = true;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (expect_digit) throw DomainError("empty entry in vector '" + std::string(text) + "'");
      expect_digit = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)) || unsigned(c - '0') >= modulus)
      throw DomainError("bad digit '" + std::string(1, c) + "' in vector '" + std::string(text) + "'");
    if (!expect_digit) throw DomainError("entries must be comma separated in '" + std::string(text) + "'");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
    expect_digit = false;
  }
  if (expect_digit && !out.empty()) throw DomainError("trailing comma in vector '" + std::string(text) + "'");
  return out;
}

MixedVector parse_mixed(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw DomainError("mixed vector needs a '|' separator: '" + std::string(text) + "'");
  return {parse_digits(text.substr(0, bar), 2), parse_digits(text.substr(bar + 1), 4)};
}

std::string format_digits(const std::vector<std::uint8_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + v[i]);
  }
  return out;
}

std::string format_mixed(const MixedVector& v) { return format_digits(v.bin) + "|" + format_digits(v.quat); }

}  // namespace z2z4
