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

#ifndef CHAOSLAB_OPERATOR_T_HPP
#define CHAOSLAB_OPERATOR_T_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "chaoslab/schedule.hpp"
#include "chaoslab/seqspace.hpp"

namespace chaoslab {

/// The block shift with dyadic feedback. On basis vectors, with block n
/// spanning [b_n, b_{n+1}):
///
///   k in [b_n, b_n + delta_n)      ->  2 e_{k+1}          (doubling segment)
///   k in [b_n + delta_n, b_{n+1}-1) ->  e_{k+1}           (plain shift)
///   k = b_{n+1} - 1, n >= 1        ->  2^{-tau_n} e_{b_{phi(n)}}
///                                       - 2^{-delta_n} e_{b_n}
///   k = b_1 - 1                    ->  -e_0
///
/// and extended linearly. Every basis vector of block n is periodic with
/// period 2 (b_{n+1} - b_n), which is what makes the closed-form fast power
/// possible for astronomically large iteration counts.
class operator_t {
 public:
  explicit operator_t(schedule s);

  operator_t(const operator_t&) = delete;
  operator_t& operator=(const operator_t&) = delete;

  const schedule& sched() const noexcept { return sched_; }

  /// One application of the operator. Throws prefix_exceeded when the
  /// support of v reaches past the generated blocks.
  sparse_vec apply(const sparse_vec& v) const;

  /// j-fold application by literal iteration; the independent slow route
  /// kept for cross-checking. j must be >= 0 and moderate.
  sparse_vec apply_power_naive(const sparse_vec& v, std::int64_t j) const;

  /// j-fold application via per-entry period reduction and the closed-form
  /// in-block traversal, with memoized expansion of wrap events. j may be an
  /// arbitrary non-negative integer (far beyond 64 bits).
  sparse_vec apply_power(const sparse_vec& v, const bigint& j) const;

  /// Caps the support size any single result may reach (default 10^6).
  void set_support_cap(std::size_t cap) noexcept { support_cap_ = cap; }

 private:
  sparse_vec basis_power(std::int64_t k, std::int64_t j) const;
  void guard_support(const sparse_vec& v) const;

  schedule sched_;
  std::size_t support_cap_ = 1'000'000;
  std::size_t memo_cap_ = std::size_t{1} << 17;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::int64_t, std::int64_t>, sparse_vec> memo_;
};

/// Exact orbit period of a finitely supported vector: 1 for the zero vector
/// (a fixed point), otherwise the period of its top block,
/// 2 (b_{n+1} - b_n) for the smallest n with supp(v) inside [0, b_{n+1}).
std::int64_t period_of(const sparse_vec& v, const schedule& s);

}  // namespace chaoslab

#endif  // CHAOSLAB_OPERATOR_T_HPP
