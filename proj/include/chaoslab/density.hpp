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

#ifndef CHAOSLAB_DENSITY_HPP
#define CHAOSLAB_DENSITY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace chaoslab {

using rational = boost::multiprecision::cpp_rational;

/// A finite set of non-negative integers inside an explicit horizon [0, H].
/// Optionally remembers the arithmetic-progression structure it was built
/// from, so exact density statements stay available next to the counts.
class index_set {
 public:
  /// Sorts, deduplicates and range-checks the elements.
  index_set(std::vector<std::int64_t> elements, std::int64_t horizon);

  /// Materializes the union of progressions {a + j d : j >= 0} clipped to
  /// [0, horizon], keeping the progression structure.
  static index_set from_progressions(
      std::vector<std::pair<std::int64_t, std::int64_t>> progressions,
      std::int64_t horizon);

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::int64_t horizon() const noexcept { return horizon_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>>&
  progressions() const noexcept {
    return progressions_;
  }

  /// #(A ∩ [0, N]).
  std::int64_t count_upto(std::int64_t N) const;
  /// #(A ∩ [lo, hi]).
  std::int64_t count_in(std::int64_t lo, std::int64_t hi) const;

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t horizon_ = 0;
  std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> progressions_;
};

/// Exact prefix ratios #(A ∩ [0, N]) / (N + 1) for N = 0..H.
std::vector<rational> density_profile(const index_set& a);

/// Smallest and largest prefix ratio over a tail window of the horizon
/// (default: the last half), bracketing the asymptotic density of whatever
/// the finite set samples.
struct density_estimate {
  rational lower;
  rational upper;
  std::int64_t tail_begin = 0;
};
density_estimate empirical_density(const index_set& a,
                                   std::optional<std::int64_t> tail_begin = std::nullopt);

/// Best window count a_N = max_k #(A ∩ [k+1, k+N]) over windows of N
/// consecutive integers inside [0, H], plus the ratio a_N / N and a window
/// start realizing the maximum.
struct banach_result {
  std::int64_t count = 0;
  rational ratio;
  std::int64_t window_start = 0;
};
banach_result banach_window(const index_set& a, std::int64_t N);

/// Exact natural density of a finite union of arithmetic progressions
/// {a + j d : j >= 0}, by inclusion-exclusion over compatible congruences
/// (at most 16 progressions).
rational exact_ap_density(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& progressions);

}  // namespace chaoslab

#endif  // CHAOSLAB_DENSITY_HPP
