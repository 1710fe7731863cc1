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

#include "z2z4/z4linalg.hpp"

#include <algorithm>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

void axpy(Z4Row& y, unsigned k, const Z4Row& x) {
  k &= 3U;
  if (k == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<std::uint8_t>((y[i] + k * x[i]) & 3U);
}

bool is_zero_row(const Z4Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint8_t c) { return c == 0; });
}

}  // namespace

int HowellForm::log2_span_size() const {
  int s = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) s += rows[i][static_cast<std::size_t>(leads[i])] == 1 ? 2 : 1;
  return s;
}

HowellForm howell_form(std::vector<Z4Row> work, int ncols) {
  for (auto& r : work) {
    if (r.size() != static_cast<std::size_t>(ncols)) throw DomainError("row length does not match column count");
    for (auto& c : r) c &= 3U;
  }
  std::erase_if(work, is_zero_row);
  HowellForm h;
  h.ncols = ncols;
  for (int col = 0; col < ncols && !work.empty(); ++col) {
    const auto c = static_cast<std::size_t>(col);
    auto it = std::find_if(work.begin(), work.end(), [c](const Z4Row& r) { return r[c] & 1U; });
    if (it == work.end()) it = std::find_if(work.begin(), work.end(), [c](const Z4Row& r) { return r[c] == 2; });
    if (it == work.end()) continue;
    Z4Row p = std::move(*it);
    work.erase(it);
    if (p[c] == 3) axpy(p, 2, p);  // 3p = p + 2p
    if (p[c] == 1) {
      for (auto& w : work) axpy(w, 4U - w[c], p);
      for (auto& r : h.rows) axpy(r, 4U - r[c], p);
    } else {
      for (auto& w : work)
        if (w[c] == 2) axpy(w, 3, p);
      for (auto& r : h.rows)
        if (r[c] >= 2) axpy(r, 3, p);
      Z4Row twice = p;
      for (auto& x : twice) x = static_cast<std::uint8_t>((2U * x) & 3U);
      if (!is_zero_row(twice)) work.push_back(std::move(twice));
    }
    h.rows.push_back(std::move(p));
    h.leads.push_back(col);
    std::erase_if(work, is_zero_row);
  }
  return h;
}

Z4Row howell_reduce(Z4Row v, const HowellForm& h) {
  for (auto& c : v) c &= 3U;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const auto c = static_cast<std::size_t>(h.leads[i]);
    if (h.rows[i][c] == 1) {
      axpy(v, 4U - v[c], h.rows[i]);
    } else if (v[c] >= 2) {
      axpy(v, 3, h.rows[i]);
    }
  }
  return v;
}

std::optional<Z4Row> solve_lexmin(const std::vector<Z4Row>& m, const Z4Row& t) {
  const std::size_t n = m.size(), k = t.size();
  std::vector<Z4Row> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != k) throw DomainError("matrix rows and target differ in length");
    Z4Row r(k + n, 0);
    std::copy(m[i].begin(), m[i].end(), r.begin());
    r[k + i] = 1;
    aug.push_back(std::move(r));
  }
  const HowellForm h = howell_form(std::move(aug), static_cast<int>(k + n));
  // Eliminate the target: v = (t - xM | -x).
  Z4Row v(k + n, 0);
  for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<std::uint8_t>(t[j] & 3U);
  HowellForm image, kernel;
  image.ncols = kernel.ncols = static_cast<int>(k + n);
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    auto& dst = static_cast<std::size_t>(h.leads[i]) < k ? image : kernel;
    dst.rows.push_back(h.rows[i]);
    dst.leads.push_back(h.leads[i]);
  }
  v = howell_reduce(std::move(v), image);
  if (!std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), [](std::uint8_t c) { return c == 0; }))
    return std::nullopt;
  for (std::size_t j = k; j < k + n; ++j) v[j] = static_cast<std::uint8_t>((4U - v[j]) & 3U);
  // Kernel rows have zero image part, so reduction keeps xM = t.
  v = howell_reduce(std::move(v), kernel);
  return Z4Row(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
}

std::optional<Z4Row> solve_lexmin_exhaustive(const std::vector<Z4Row>& m, const Z4Row& t) {
  const std::size_t n = m.size(), k = t.size();
  if (n > 10) throw CapacityError("exhaustive Z4 solve limited to 10 unknowns");
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Z4Row x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((code >> (2 * (n - 1 - i))) & 3U);
    Z4Row y(k, 0);
    for (std::size_t i = 0; i < n; ++i) axpy(y, x[i], m[i]);
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) ok = y[j] == (t[j] & 3U);
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace z2z4
