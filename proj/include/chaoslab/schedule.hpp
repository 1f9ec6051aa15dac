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

#ifndef CHAOSLAB_SCHEDULE_HPP
#define CHAOSLAB_SCHEDULE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chaoslab {

/// Outcome of one validity condition on a schedule.
struct condition_entry {
  std::string name;
  bool pass = false;
  /// Smallest index witnessing a violation, when one exists.
  std::optional<std::int64_t> first_violation;
  std::string note;
};

struct condition_report {
  std::vector<condition_entry> entries;
  bool all_pass() const;
};

/// Finite prefix of the block data that drives the operator: block starts
/// b_0 < b_1 < ... < b_{prefix+1}, doubling-segment lengths delta_n,
/// wrap weights tau_n, block-growth multipliers N_n and the feedback map
/// varphi. A prefix of P exposes blocks 0..P, i.e. indices [0, b_{P+1}).
///
/// The stored varphi table is deliberately longer than the prefix so that
/// every block below the prefix has at least one preimage inside the table;
/// validation checks surjectivity against that table.
class schedule {
 public:
  /// Fast-growing preset: tau_n = 4^{n+1}, delta_n = 2 tau_n, block gaps
  /// 4^{2n+1} (multiplier 8). Valid for prefix in [1, 14]; beyond that the
  /// indices leave 64 bits.
  static schedule canonical(int prefix);

  /// Desk-sized preset: b_1 = 32, tau_n = delta_{n-1} + 2(n+1),
  /// delta_n = tau_n + 5*2^n, and the smallest multiplier that keeps the
  /// room and ratio conditions. Valid for prefix in [1, 48].
  static schedule small2(int prefix);

  /// The diagonal enumeration 0; 0; 0,1; 0,1,2; ... that visits every value
  /// infinitely often while staying strictly below its argument.
  static std::int64_t phi_diagonal(std::int64_t n);

  /// Assembles a schedule from raw arrays. Throws malformed_input when the
  /// array lengths are inconsistent (delta: prefix+1, tau: prefix indexed
  /// from 1, b: prefix+2, multipliers: prefix, phi: at least prefix+1).
  /// Structural consistency only; run validate() for the math.
  static schedule from_parts(std::vector<std::int64_t> phi,
                             std::vector<std::int64_t> delta,
                             std::vector<std::int64_t> tau,
                             std::vector<std::int64_t> b,
                             std::vector<std::int64_t> multipliers);

  int prefix() const noexcept { return prefix_; }

  /// b_n for n in [0, prefix+1].
  std::int64_t b(int n) const;
  /// delta_n for n in [0, prefix].
  std::int64_t delta(int n) const;
  /// tau_n for n in [1, prefix].
  std::int64_t tau(int n) const;
  /// multiplier N_n for n in [1, prefix].
  std::int64_t multiplier(int n) const;
  /// varphi(n) for any n covered by the stored table.
  std::int64_t phi(std::int64_t n) const;
  std::int64_t phi_table_size() const noexcept;

  /// Block containing index k; throws prefix_exceeded past b_{prefix+1}.
  int block_of(std::int64_t k) const;
  /// 2 * (b_{n+1} - b_n), the orbit period of block n's basis vectors.
  std::int64_t block_period(int n) const;
  /// First index beyond the generated blocks, b_{prefix+1}.
  std::int64_t index_limit() const;

  /// Checks the six defining conditions (plus base monotonicity), one entry
  /// each, with the first violating index when a check fails.
  condition_report validate() const;

  /// The summability strengthening used for the c0 / lp variants:
  /// 2^{delta_{n-1}} (b_{n+1} - b_n) <= 2^{tau_n - 2(n+1)}.
  condition_report validate_41() const;

  const std::vector<std::int64_t>& phi_table() const noexcept { return phi_; }
  const std::vector<std::int64_t>& delta_table() const noexcept { return delta_; }
  const std::vector<std::int64_t>& tau_table() const noexcept { return tau_; }
  const std::vector<std::int64_t>& b_table() const noexcept { return b_; }
  const std::vector<std::int64_t>& multiplier_table() const noexcept { return mult_; }

  friend bool operator==(const schedule& a, const schedule& b) = default;

 private:
  schedule() = default;

  int prefix_ = 0;
  std::vector<std::int64_t> phi_;    // indices 0..(table size - 1)
  std::vector<std::int64_t> delta_;  // indices 0..prefix
  std::vector<std::int64_t> tau_;    // indices 1..prefix (slot 0 unused = 0)
  std::vector<std::int64_t> b_;      // indices 0..prefix+1
  std::vector<std::int64_t> mult_;   // indices 1..prefix (slot 0 unused = 0)
};

}  // namespace chaoslab

#endif  // CHAOSLAB_SCHEDULE_HPP
