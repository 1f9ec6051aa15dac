// Copyright 2026 The Chaoslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chaoslab/seqspace.hpp"

#include <algorithm>

#include "chaoslab/errors.hpp"
#include "chaoslab/schedule.hpp"

namespace chaoslab {

sparse_vec sparse_vec::basis(std::int64_t index, dyadic coeff) {
  sparse_vec v;
  v.set(index, std::move(coeff));
  return v;
}

std::optional<std::int64_t> sparse_vec::max_index() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.rbegin()->first;
}

dyadic sparse_vec::coeff(std::int64_t index) const {
  const auto it = entries_.find(index);
  return it == entries_.end() ? dyadic() : it->second;
}

void sparse_vec::set(std::int64_t index, dyadic value) {
  if (index < 0) throw malformed_input("sequence indices are non-negative");
  if (value.is_zero()) {
    entries_.erase(index);
  } else {
    entries_[index] = std::move(value);
  }
}

void sparse_vec::accumulate(std::int64_t index, const dyadic& delta) {
  if (index < 0) throw malformed_input("sequence indices are non-negative");
  if (delta.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(index, delta);
  if (!inserted) {
    it->second = it->second + delta;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

sparse_vec sparse_vec::scaled(const dyadic& factor) const {
  sparse_vec out;
  if (factor.is_zero()) return out;
  for (const auto& [k, c] : entries_) out.entries_.emplace(k, c * factor);
  return out;
}

sparse_vec sparse_vec::operator-() const {
  sparse_vec out;
  for (const auto& [k, c] : entries_) out.entries_.emplace(k, -c);
  return out;
}

sparse_vec operator+(const sparse_vec& a, const sparse_vec& b) {
  sparse_vec out = a;
  for (const auto& [k, c] : b.entries_) out.accumulate(k, c);
  return out;
}

sparse_vec operator-(const sparse_vec& a, const sparse_vec& b) {
  sparse_vec out = a;
  for (const auto& [k, c] : b.entries_) out.accumulate(k, -c);
  return out;
}

norm_kind norm_kind::lp(int p) {
  if (p < 1) throw malformed_input("lp norms need p >= 1");
  return {tag_t::lp, p};
}

dyadic norm_l1(const sparse_vec& v) {
  dyadic sum;
  for (const auto& [k, c] : v.entries()) sum = sum + abs(c);
  return sum;
}

dyadic norm_sup(const sparse_vec& v) {
  dyadic best;
  for (const auto& [k, c] : v.entries()) {
    dyadic a = abs(c);
    if (a > best) best = std::move(a);
  }
  return best;
}

norm_value norm(const sparse_vec& v, const norm_kind& kind) {
  switch (kind.tag) {
    case norm_kind::tag_t::l1:
      return {norm_l1(v), 1};
    case norm_kind::tag_t::sup:
      return {norm_sup(v), 1};
    case norm_kind::tag_t::lp: {
      if (kind.p == 1) return {norm_l1(v), 1};
      dyadic sum;
      for (const auto& [k, c] : v.entries()) {
        sum = sum + abs(c).pow(static_cast<unsigned>(kind.p));
      }
      return {sum, kind.p};
    }
  }
  throw malformed_input("unknown norm kind");
}

int compare(const norm_value& a, const norm_value& b) {
  if (a.power != b.power) {
    throw malformed_input("norm values of different powers are not comparable");
  }
  return dyadic::compare(a.value, b.value);
}

int compare_scaled(const norm_value& a, const dyadic& c, const norm_value& b) {
  if (a.power != b.power) {
    throw malformed_input("norm values of different powers are not comparable");
  }
  if (c.sign() < 0) throw malformed_input("scale factor must be non-negative");
  const dyadic cp = a.power == 1 ? c : c.pow(static_cast<unsigned>(a.power));
  return dyadic::compare(a.value, cp * b.value);
}

std::vector<dyadic> abs_terms_desc(const sparse_vec& v) {
  std::vector<dyadic> terms;
  terms.reserve(v.support_size());
  for (const auto& [k, c] : v.entries()) terms.push_back(abs(c));
  std::sort(terms.begin(), terms.end(),
            [](const dyadic& a, const dyadic& b) { return b < a; });
  return terms;
}

int compare_sum_to(const std::vector<dyadic>& terms_desc, const dyadic& bound) {
  // Invariant: remaining = bound - (sum of processed terms), kept exact.
  // Terms are non-negative and descending, so once the pending tail is
  // provably below `remaining` the answer is decided without ever adding
  // terms whose scales are separated by millions of bits.
  dyadic remaining = bound;
  const std::size_t n = terms_desc.size();
  for (std::size_t i = 0; i < n; ++i) {
    const dyadic& t = terms_desc[i];
    if (t.sign() < 0) throw malformed_input("sum terms must be non-negative");
    if (t.is_zero()) break;  // descending: the rest are zero too
    if (remaining.sign() <= 0) return 1;  // a positive term remains
    const dyadic tail_bound = t * dyadic(static_cast<long long>(n - i));
    if (tail_bound < remaining) return -1;
    remaining = remaining - t;
  }
  return -remaining.sign();
}

int compare_abs_sum(const sparse_vec& v, const dyadic& bound) {
  return compare_sum_to(abs_terms_desc(v), bound);
}

std::optional<dyadic> try_sum(const std::vector<dyadic>& terms_desc,
                              std::int64_t max_spread_bits) {
  dyadic sum;
  if (terms_desc.empty()) return sum;
  std::optional<std::int64_t> top;
  for (const auto& t : terms_desc) {
    if (t.is_zero()) continue;
    if (!top) top = t.position();
    const std::int64_t width =
        detail::checked_sub_i64(*top, t.exponent());
    if (width > max_spread_bits) return std::nullopt;
    sum = sum + t;
  }
  return sum;
}

std::string sum_string(const std::vector<dyadic>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i].str();
  }
  return out;
}

std::string exact_sum_repr(const std::vector<dyadic>& terms_desc) {
  constexpr std::int64_t kMaterializeSpreadBits = std::int64_t{1} << 20;
  if (auto s = try_sum(terms_desc, kMaterializeSpreadBits)) return s->str();
  return sum_string(terms_desc);
}

sparse_vec project(const sparse_vec& v, int block, const schedule& s) {
  const std::int64_t lo = s.b(block);
  const std::int64_t hi = s.b(block + 1);
  sparse_vec out;
  auto it = v.entries().lower_bound(lo);
  for (; it != v.entries().end() && it->first < hi; ++it) {
    out.set(it->first, it->second);
  }
  return out;
}

sparse_vec weighted_x(const sparse_vec& v, int block, const schedule& s) {
  const std::int64_t lo = s.b(block);
  const std::int64_t hi = s.b(block + 1);
  const std::int64_t d = s.delta(block);
  sparse_vec out;
  auto it = v.entries().lower_bound(lo);
  for (; it != v.entries().end() && it->first < hi; ++it) {
    const std::int64_t off = it->first - lo;
    const std::int64_t w = off < d ? d - off : 0;
    out.set(it->first, it->second * dyadic::pow2(w));
  }
  return out;
}

}  // namespace chaoslab
