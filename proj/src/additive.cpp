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

#include "z2z4/additive.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "z2z4/errors.hpp"
#include "z2z4/z4linalg.hpp"
#include "z2z4/zmaps.hpp"

namespace z2z4 {

namespace {

// LSD radix sort on 16-bit digits for large key sets.
void sort_keys(std::vector<std::uint64_t>& keys) {
  if (keys.size() < (std::size_t{1} << 16)) {
    std::sort(keys.begin(), keys.end());
    return;
  }
  std::uint64_t all = 0;
  for (auto k : keys) all |= k;
  std::vector<std::uint64_t> tmp(keys.size());
  for (int shift = 0; shift < 64 && (all >> shift) != 0; shift += 16) {
    std::vector<std::size_t> count((1U << 16) + 1, 0);
    for (auto k : keys) ++count[((k >> shift) & 0xFFFFU) + 1];
    for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    for (auto k : keys) tmp[count[(k >> shift) & 0xFFFFU]++] = k;
    keys.swap(tmp);
  }
}

}  // namespace

void GeneratorMatrix::check_shape() const {
  if (alpha < 0 || beta < 0) throw DomainError("negative block length");
  for (const auto& r : rows)
    if (r.alpha() != alpha || r.beta() != beta)
      throw DomainError("row " + format_mixed(r) + " does not have shape (" + std::to_string(alpha) + " | " +
                        std::to_string(beta) + ")");
}

CodeLayout::CodeLayout(int alpha, int beta) : alpha_(alpha), beta_(beta) {
  if (alpha < 0 || beta < 0) throw DomainError("negative block length");
  if (alpha + 2 * beta > 64) throw CapacityError("alpha + 2 beta must not exceed 64 for packed enumeration");
  for (int d = 0; d < beta; ++d) {
    lo_ |= std::uint64_t{1} << (2 * d);
    hi_ |= std::uint64_t{1} << (2 * d + 1);
  }
  for (int i = 0; i < alpha; ++i) bin_mask_ |= std::uint64_t{1} << (2 * beta + i);
}

std::uint64_t CodeLayout::encode(const MixedVector& v) const {
  if (v.alpha() != alpha_ || v.beta() != beta_) throw DomainError("vector shape does not match the code");
  std::uint64_t key = 0;
  for (int i = 0; i < alpha_; ++i)
    if (v.bin[static_cast<std::size_t>(i)] & 1U) key |= std::uint64_t{1} << (2 * beta_ + alpha_ - 1 - i);
  for (int j = 0; j < beta_; ++j)
    key |= std::uint64_t{v.quat[static_cast<std::size_t>(j)] & 3U} << (2 * (beta_ - 1 - j));
  return key;
}

MixedVector CodeLayout::decode(std::uint64_t key) const {
  MixedVector v = MixedVector::zero(alpha_, beta_);
  for (int i = 0; i < alpha_; ++i) v.bin[static_cast<std::size_t>(i)] = (key >> (2 * beta_ + alpha_ - 1 - i)) & 1U;
  for (int j = 0; j < beta_; ++j) v.quat[static_cast<std::size_t>(j)] = (key >> (2 * (beta_ - 1 - j))) & 3U;
  return v;
}

std::uint64_t CodeLayout::quat_reduction(std::uint64_t a) const {
  std::uint64_t r = 0;
  for (int j = 0; j < beta_; ++j)
    if ((a >> (2 * (beta_ - 1 - j))) & 1U) r |= std::uint64_t{1} << j;
  return r;
}

AdditiveCode::AdditiveCode(int alpha, int beta, std::vector<std::uint64_t> keys)
    : layout_(alpha, beta), keys_(std::move(keys)) {
  sort_keys(keys_);
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

AdditiveCode AdditiveCode::from_words(int alpha, int beta, const std::vector<MixedVector>& words) {
  const CodeLayout layout(alpha, beta);
  std::vector<std::uint64_t> keys;
  keys.reserve(words.size());
  for (const auto& w : words) keys.push_back(layout.encode(w));
  return AdditiveCode(alpha, beta, std::move(keys));
}

bool AdditiveCode::contains_key(std::uint64_t key) const { return std::binary_search(keys_.begin(), keys_.end(), key); }

bool AdditiveCode::contains(const MixedVector& v) const {
  if (v.alpha() != alpha() || v.beta() != beta()) return false;
  return contains_key(layout_.encode(v));
}

std::vector<MixedVector> AdditiveCode::words() const {
  std::vector<MixedVector> out;
  out.reserve(keys_.size());
  for (auto k : keys_) out.push_back(layout_.decode(k));
  return out;
}

AdditiveCode enumerate(const GeneratorMatrix& m, std::uint64_t capacity) {
  m.check_shape();
  const CodeLayout layout(m.alpha, m.beta);
  // Membership in the span so far is decided on the Z4 embedding (2u | u').
  auto embed = [](const MixedVector& v) {
    Z4Row r;
    r.reserve(v.bin.size() + v.quat.size());
    for (auto c : v.bin) r.push_back(static_cast<std::uint8_t>(2U * (c & 1U)));
    for (auto c : v.quat) r.push_back(c);
    return r;
  };
  auto is_zero = [](const Z4Row& r) { return std::all_of(r.begin(), r.end(), [](std::uint8_t c) { return c == 0; }); };
  const int ncols = m.alpha + m.beta;
  std::vector<Z4Row> accepted;
  HowellForm span = howell_form({}, ncols);
  std::vector<std::uint64_t> set{0};
  for (const auto& row : m.rows) {
    const Z4Row e = embed(row);
    if (is_zero(howell_reduce(e, span))) continue;
    Z4Row e2 = e;
    for (auto& c : e2) c = static_cast<std::uint8_t>((2U * c) & 3U);
    const int index = is_zero(howell_reduce(e2, span)) ? 2 : 4;
    if (set.size() * static_cast<std::uint64_t>(index) > capacity)
      throw CapacityError("code exceeds the enumeration capacity of " + std::to_string(capacity) + " codewords");
    accepted.push_back(e);
    span = howell_form(accepted, ncols);
    const std::uint64_t r = layout.encode(row);
    const std::size_t old = set.size();
    set.reserve(old * static_cast<std::size_t>(index));
    std::uint64_t multiple = 0;
    for (int j = 1; j < index; ++j) {
      multiple = layout.add(multiple, r);
      for (std::size_t i = 0; i < old; ++i) set.push_back(layout.add(set[i], multiple));
    }
  }
  return AdditiveCode(m.alpha, m.beta, std::move(set));
}

namespace {

void sub_multiple(MixedVector& target, unsigned c, const MixedVector& row) {
  target += (4U - (c & 3U)) * row;
}

}  // namespace

StandardForm standard_form(const GeneratorMatrix& m) {
  m.check_shape();
  const int alpha = m.alpha, beta = m.beta;
  std::vector<MixedVector> rows;
  for (const auto& r : m.rows)
    if (!r.is_zero()) rows.push_back(r);

  // Order-four rows: unit pivots in quaternary columns, fully reduced.
  std::vector<char> is_pivot_row(rows.size(), 0), quat_used(static_cast<std::size_t>(beta), 0);
  std::vector<std::pair<std::size_t, int>> four;  // (row, column)
  for (;;) {
    std::size_t pr = rows.size();
    int pc = -1;
    for (std::size_t i = 0; i < rows.size() && pr == rows.size(); ++i) {
      if (is_pivot_row[i]) continue;
      for (int j = beta - 1; j >= 0; --j)
        if (!quat_used[static_cast<std::size_t>(j)] && (rows[i].quat[static_cast<std::size_t>(j)] & 1U)) {
          pr = i;
          pc = j;
          break;
        }
    }
    if (pc < 0) break;
    if (rows[pr].quat[static_cast<std::size_t>(pc)] == 3) rows[pr] = 3U * rows[pr];
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != pr && rows[k].quat[static_cast<std::size_t>(pc)]) sub_multiple(rows[k], rows[k].quat[static_cast<std::size_t>(pc)], rows[pr]);
    is_pivot_row[pr] = 1;
    quat_used[static_cast<std::size_t>(pc)] = 1;
    four.emplace_back(pr, pc);
  }

  std::vector<MixedVector> p4;
  std::vector<int> p4_cols;
  for (auto [r, c] : four) {
    p4.push_back(rows[r]);
    p4_cols.push_back(c);
  }
  std::vector<MixedVector> rest;  // order two, all quaternary entries even
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!is_pivot_row[i] && !rows[i].is_zero()) rest.push_back(rows[i]);

  // Order-two rows with a binary pivot.
  std::vector<char> bin_used(static_cast<std::size_t>(alpha), 0), rest_done(rest.size(), 0);
  std::vector<int> bin_cols;
  std::vector<std::size_t> kappa_idx;
  for (;;) {
    std::size_t pr = rest.size();
    int pc = -1;
    for (std::size_t i = 0; i < rest.size() && pc < 0; ++i) {
      if (rest_done[i]) continue;
      for (int j = 0; j < alpha; ++j)
        if (rest[i].bin[static_cast<std::size_t>(j)]) {
          pr = i;
          pc = j;
          break;
        }
    }
    if (pc < 0) break;
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (k != pr && rest[k].bin[static_cast<std::size_t>(pc)]) rest[k] += rest[pr];
    for (auto& r : p4)
      if (r.bin[static_cast<std::size_t>(pc)]) r += rest[pr];
    rest_done[pr] = 1;
    bin_used[static_cast<std::size_t>(pc)] = 1;
    bin_cols.push_back(pc);
    kappa_idx.push_back(pr);
  }
  std::vector<MixedVector> kappa_rows, two_rows;
  for (auto i : kappa_idx) kappa_rows.push_back(rest[i]);
  for (std::size_t i = 0; i < rest.size(); ++i)
    if (!rest_done[i] && !rest[i].is_zero()) two_rows.push_back(rest[i]);

  // Remaining order-two rows: zero binary part, pivots 2 in quaternary columns.
  std::vector<int> two_cols;
  std::vector<std::size_t> two_idx;
  std::vector<char> two_done(two_rows.size(), 0);
  for (;;) {
    std::size_t pr = two_rows.size();
    int pc = -1;
    for (std::size_t i = 0; i < two_rows.size() && pc < 0; ++i) {
      if (two_done[i]) continue;
      for (int j = beta - 1; j >= 0; --j)
        if (!quat_used[static_cast<std::size_t>(j)] && two_rows[i].quat[static_cast<std::size_t>(j)]) {
          pr = i;
          pc = j;
          break;
        }
    }
    if (pc < 0) break;
    auto clear = [&](MixedVector& r) {
      if (r.quat[static_cast<std::size_t>(pc)] >= 2) r += two_rows[pr];
    };
    for (std::size_t k = 0; k < two_rows.size(); ++k)
      if (k != pr) clear(two_rows[k]);
    for (auto& r : kappa_rows) clear(r);
    for (auto& r : p4) clear(r);
    two_done[pr] = 1;
    quat_used[static_cast<std::size_t>(pc)] = 1;
    two_cols.push_back(pc);
    two_idx.push_back(pr);
  }
  std::vector<MixedVector> gk_rows;
  for (auto i : two_idx) gk_rows.push_back(two_rows[i]);

  StandardForm out;
  for (int c : bin_cols) out.bin_perm.push_back(c);
  for (int j = 0; j < alpha; ++j)
    if (!bin_used[static_cast<std::size_t>(j)]) out.bin_perm.push_back(j);
  std::vector<char> special(static_cast<std::size_t>(beta), 0);
  for (int c : two_cols) special[static_cast<std::size_t>(c)] = 1;
  for (int c : p4_cols) special[static_cast<std::size_t>(c)] = 1;
  for (int j = 0; j < beta; ++j)
    if (!special[static_cast<std::size_t>(j)]) out.quat_perm.push_back(j);
  for (int c : two_cols) out.quat_perm.push_back(c);
  for (int c : p4_cols) out.quat_perm.push_back(c);

  out.matrix.alpha = alpha;
  out.matrix.beta = beta;
  for (const auto& r : kappa_rows) out.matrix.rows.push_back(permute_columns(r, out.bin_perm, out.quat_perm));
  for (const auto& r : gk_rows) out.matrix.rows.push_back(permute_columns(r, out.bin_perm, out.quat_perm));
  for (const auto& r : p4) out.matrix.rows.push_back(permute_columns(r, out.bin_perm, out.quat_perm));

  out.type.alpha = alpha;
  out.type.beta = beta;
  out.type.kappa = static_cast<int>(kappa_rows.size());
  out.type.gamma = static_cast<int>(kappa_rows.size() + gk_rows.size());
  out.type.delta = static_cast<int>(p4.size());
  return out;
}

MixedVector permute_columns(const MixedVector& v, const std::vector<int>& bin_perm, const std::vector<int>& quat_perm) {
  MixedVector out = MixedVector::zero(v.alpha(), v.beta());
  for (std::size_t j = 0; j < bin_perm.size(); ++j) out.bin[j] = v.bin[static_cast<std::size_t>(bin_perm[j])];
  for (std::size_t j = 0; j < quat_perm.size(); ++j) out.quat[j] = v.quat[static_cast<std::size_t>(quat_perm[j])];
  return out;
}

CyclicityCheck check_cyclic(const AdditiveCode& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const MixedVector w = c.word(i);
    if (!c.contains(shift(w))) return {false, w};
  }
  return {};
}

AdditiveCode shift(const AdditiveCode& c) {
  std::vector<std::uint64_t> keys;
  keys.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) keys.push_back(c.layout().encode(shift(c.word(i))));
  return AdditiveCode(c.alpha(), c.beta(), std::move(keys));
}

GeneratorMatrix shift(const GeneratorMatrix& m) {
  GeneratorMatrix out{m.alpha, m.beta, {}};
  for (const auto& r : m.rows) out.rows.push_back(shift(r));
  return out;
}

AdditiveCode puncture_x(const AdditiveCode& c) {
  std::vector<std::uint64_t> keys;
  keys.reserve(c.size());
  for (auto k : c.keys()) keys.push_back(c.beta() == 32 ? 0 : k >> (2 * c.beta()));
  return AdditiveCode(c.alpha(), 0, std::move(keys));
}

AdditiveCode puncture_y(const AdditiveCode& c) {
  const std::uint64_t mask = c.beta() == 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * c.beta())) - 1;
  std::vector<std::uint64_t> keys;
  keys.reserve(c.size());
  for (auto k : c.keys()) keys.push_back(k & mask);
  return AdditiveCode(0, c.beta(), std::move(keys));
}

bool is_separable(const AdditiveCode& c) { return puncture_x(c).size() * puncture_y(c).size() == c.size(); }

AdditiveCode order_two_subcode(const AdditiveCode& c) {
  std::vector<std::uint64_t> keys;
  for (auto k : c.keys())
    if (c.layout().quat_reduction(k) == 0) keys.push_back(k);
  return AdditiveCode(c.alpha(), c.beta(), std::move(keys));
}

SeparableCyclicity separable_cyclicity(const AdditiveCode& c) {
  SeparableCyclicity s;
  s.separable = is_separable(c);
  s.cyclic = is_cyclic(c);
  s.x_cyclic = is_cyclic(puncture_x(c));
  s.y_cyclic = is_cyclic(puncture_y(c));
  return s;
}

OracleResult gray_is_linear_oracle(const AdditiveCode& c, std::uint64_t capacity) {
  const auto& layout = c.layout();
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (seen.emplace(layout.quat_reduction(c.keys()[i]), i).second) reps.push_back(i);
  const std::uint64_t k = reps.size();
  if (k * (k + 1) / 2 > capacity)
    throw CapacityError("exhaustive oracle needs " + std::to_string(k * (k + 1) / 2) + " class pairs");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::uint64_t a = c.keys()[reps[i]];
    for (std::size_t j = i; j < reps.size(); ++j) {
      const std::uint64_t b = c.keys()[reps[j]];
      // 2 (a * b): digit-wise product of the low bits, doubled.
      const std::uint64_t prod = layout.twice(a & b);
      if (!c.contains_key(prod)) return {false, std::pair{c.word(reps[i]), c.word(reps[j])}, layout.decode(prod)};
    }
  }
  return {};
}

OracleResult gray_is_linear_oracle(const AdditiveCode& c, const GeneratorMatrix& gens) {
  gens.check_shape();
  if (gens.alpha != c.alpha() || gens.beta != c.beta()) throw DomainError("generator shape does not match the code");
  for (std::size_t i = 0; i < gens.rows.size(); ++i)
    for (std::size_t j = i; j < gens.rows.size(); ++j) {
      const MixedVector prod = twice_product(gens.rows[i], gens.rows[j]);
      if (!c.contains(prod)) return {false, std::pair{gens.rows[i], gens.rows[j]}, prod};
    }
  return {};
}

BinaryCode::BinaryCode(int length, std::vector<std::uint64_t> words) : length_(length), words_(std::move(words)) {
  if (length < 0 || length > 64) throw CapacityError("binary codes are limited to length 64");
  sort_keys(words_);
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

std::uint64_t BinaryCode::pack(const BitVec& v) const {
  if (v.size() != static_cast<std::size_t>(length_)) throw DomainError("binary vector length mismatch");
  std::uint64_t w = 0;
  for (int i = 0; i < length_; ++i)
    if (v[static_cast<std::size_t>(i)] & 1U) w |= std::uint64_t{1} << (length_ - 1 - i);
  return w;
}

BitVec BinaryCode::vector(std::size_t i) const {
  BitVec v(static_cast<std::size_t>(length_));
  for (int j = 0; j < length_; ++j) v[static_cast<std::size_t>(j)] = (words_[i] >> (length_ - 1 - j)) & 1U;
  return v;
}

BinaryCode BinaryCode::from_vectors(int length, const std::vector<BitVec>& words) {
  BinaryCode tmp(length, {});
  std::vector<std::uint64_t> packed;
  packed.reserve(words.size());
  for (const auto& w : words) packed.push_back(tmp.pack(w));
  return BinaryCode(length, std::move(packed));
}

namespace {

// Reduced XOR basis keyed by leading bit.
std::vector<std::uint64_t> xor_basis(const std::vector<std::uint64_t>& words) {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t w : words) {
    for (std::uint64_t b : basis) w = std::min(w, w ^ b);
    if (w) {
      basis.push_back(w);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return basis;
}

}  // namespace

BinaryCode BinaryCode::span(int length, const std::vector<BitVec>& gens, std::uint64_t capacity) {
  const BinaryCode packer(length, {});
  std::vector<std::uint64_t> packed;
  for (const auto& g : gens) packed.push_back(packer.pack(g));
  const auto basis = xor_basis(packed);
  if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > capacity)
    throw CapacityError("binary span exceeds the enumeration capacity");
  std::vector<std::uint64_t> words{0};
  for (std::uint64_t b : basis) {
    const std::size_t old = words.size();
    for (std::size_t i = 0; i < old; ++i) words.push_back(words[i] ^ b);
  }
  return BinaryCode(length, std::move(words));
}

bool BinaryCode::contains(std::uint64_t w) const { return std::binary_search(words_.begin(), words_.end(), w); }

int BinaryCode::rank() const { return static_cast<int>(xor_basis(words_).size()); }

bool BinaryCode::is_linear() const {
  const int r = rank();
  return contains(0) && r < 63 && words_.size() == (std::size_t{1} << r);
}

BinaryCode gray_image(const AdditiveCode& c) {
  const int n = c.alpha() + 2 * c.beta();
  const BinaryCode packer(n, {});
  std::vector<std::uint64_t> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(packer.pack(ext_gray(c.word(i))));
  return BinaryCode(n, std::move(out));
}

BinaryCode nechaev_gray_image(const AdditiveCode& c) {
  const int n = c.alpha() + 2 * c.beta();
  const BinaryCode packer(n, {});
  std::vector<std::uint64_t> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(packer.pack(ext_nechaev_gray(c.word(i))));
  return BinaryCode(n, std::move(out));
}

}  // namespace z2z4
