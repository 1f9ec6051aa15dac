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

#include "chaoslab/density.hpp"

#include <algorithm>
#include <numeric>

#include "chaoslab/dyadic.hpp"
#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace mp = boost::multiprecision;

index_set::index_set(std::vector<std::int64_t> elements, std::int64_t horizon)
    : elements_(std::move(elements)), horizon_(horizon) {
  if (horizon_ < 0) throw malformed_input("horizon must be non-negative");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() &&
      (elements_.front() < 0 || elements_.back() > horizon_)) {
    throw malformed_input("index set elements must lie in [0, horizon]");
  }
}

index_set index_set::from_progressions(
    std::vector<std::pair<std::int64_t, std::int64_t>> progressions,
    std::int64_t horizon) {
  if (horizon < 0) throw malformed_input("horizon must be non-negative");
  std::vector<std::int64_t> elems;
  for (const auto& [a, d] : progressions) {
    if (a < 0 || d < 1) {
      throw malformed_input("progressions need offset >= 0 and step >= 1");
    }
    for (std::int64_t x = a; x <= horizon; x += d) elems.push_back(x);
  }
  index_set out(std::move(elems), horizon);
  out.progressions_ = std::move(progressions);
  return out;
}

std::int64_t index_set::count_upto(std::int64_t N) const {
  return count_in(0, N);
}

std::int64_t index_set::count_in(std::int64_t lo, std::int64_t hi) const {
  if (hi < lo) return 0;
  const auto first = std::lower_bound(elements_.begin(), elements_.end(), lo);
  const auto last = std::upper_bound(elements_.begin(), elements_.end(), hi);
  return static_cast<std::int64_t>(last - first);
}

std::vector<rational> density_profile(const index_set& a) {
  const std::int64_t H = a.horizon();
  std::vector<rational> out;
  out.reserve(static_cast<std::size_t>(H) + 1);
  std::size_t used = 0;
  const auto& elems = a.elements();
  std::int64_t count = 0;
  for (std::int64_t N = 0; N <= H; ++N) {
    while (used < elems.size() && elems[used] <= N) {
      ++count;
      ++used;
    }
    out.emplace_back(count, N + 1);
  }
  return out;
}

density_estimate empirical_density(const index_set& a,
                                   std::optional<std::int64_t> tail_begin) {
  const std::int64_t H = a.horizon();
  std::int64_t from = tail_begin.value_or((H + 1) / 2);
  if (from < 0 || from > H) {
    throw malformed_input("tail window must start inside [0, horizon]");
  }
  density_estimate est;
  est.tail_begin = from;
  bool first = true;
  for (std::int64_t N = from; N <= H; ++N) {
    rational r(a.count_upto(N), N + 1);
    if (first || r < est.lower) est.lower = r;
    if (first || r > est.upper) est.upper = r;
    first = false;
  }
  return est;
}

banach_result banach_window(const index_set& a, std::int64_t N) {
  const std::int64_t H = a.horizon();
  if (N < 1 || N > H + 1) {
    throw malformed_input("window length must lie in [1, horizon + 1]");
  }
  banach_result best;
  best.ratio = rational(0, 1);
  // The best window of N consecutive integers starts at an element (clamped
  // so the window stays inside [0, H]); sliding right to the next element
  // never loses a counted point.
  const std::int64_t max_start = H - N + 1;
  for (const std::int64_t e : a.elements()) {
    const std::int64_t start = std::min(e, max_start);
    const std::int64_t c = a.count_in(start, start + N - 1);
    if (c > best.count) {
      best.count = c;
      best.window_start = start;
    }
  }
  best.ratio = rational(best.count, N);
  return best;
}

rational exact_ap_density(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& progressions) {
  if (progressions.size() > 16) {
    throw malformed_input("inclusion-exclusion is capped at 16 progressions");
  }
  for (const auto& [a, d] : progressions) {
    if (a < 0 || d < 1) {
      throw malformed_input("progressions need offset >= 0 and step >= 1");
    }
  }
  const std::size_t m = progressions.size();
  rational density(0, 1);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    // Intersection of the selected congruences: non-empty exactly when every
    // pair is compatible modulo the gcd of its steps, in which case it is a
    // single residue class modulo the lcm.
    bigint l(1);
    bool compatible = true;
    for (std::size_t i = 0; i < m && compatible; ++i) {
      if (!(mask & (1u << i))) continue;
      for (std::size_t j = i + 1; j < m && compatible; ++j) {
        if (!(mask & (1u << j))) continue;
        const std::int64_t g = std::gcd(progressions[i].second, progressions[j].second);
        if ((progressions[i].first - progressions[j].first) % g != 0) {
          compatible = false;
        }
      }
      if (compatible) l = mp::lcm(l, bigint(progressions[i].second));
    }
    if (!compatible) continue;
    const int bits = __builtin_popcount(mask);
    const rational term(bigint(1), l);
    if (bits % 2 == 1) {
      density += term;
    } else {
      density -= term;
    }
  }
  return density;
}

}  // namespace chaoslab
