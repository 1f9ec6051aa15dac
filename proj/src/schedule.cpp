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

#include "chaoslab/schedule.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "chaoslab/dyadic.hpp"
#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

using detail::checked_add_i64;
using detail::checked_mul_i64;

// First table index at which phi_diagonal takes the value v.
std::int64_t first_preimage(std::int64_t v) {
  return 1 + v * (v + 1) / 2 + v;
}

std::vector<std::int64_t> build_phi_table(int prefix) {
  const std::int64_t len =
      std::max<std::int64_t>(prefix + 2, first_preimage(prefix - 1) + 1);
  std::vector<std::int64_t> phi(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) phi[static_cast<std::size_t>(i)] = schedule::phi_diagonal(i);
  return phi;
}

}  // namespace

bool condition_report::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const condition_entry& e) { return e.pass; });
}

std::int64_t schedule::phi_diagonal(std::int64_t n) {
  if (n < 0) throw malformed_input("phi_diagonal domain is n >= 0");
  if (n == 0) return 0;
  const std::int64_t idx = n - 1;  // 0-based position across rows 1, 2, 3, ...
  // Row r (length r) starts at r(r-1)/2; locate it by inverting the triangle.
  auto start = [](std::int64_t r) { return r * (r - 1) / 2; };
  auto r = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(idx) + 1.0) - 1.0) / 2.0) + 1;
  if (r < 1) r = 1;
  while (start(r) > idx) --r;
  while (start(r) + r <= idx) ++r;
  return idx - start(r);
}

schedule schedule::canonical(int prefix) {
  if (prefix < 1 || prefix > 14) {
    throw malformed_input("canonical preset supports prefix in [1, 14]");
  }
  schedule s;
  s.prefix_ = prefix;
  s.delta_.assign(static_cast<std::size_t>(prefix) + 1, 0);
  s.tau_.assign(static_cast<std::size_t>(prefix) + 1, 0);
  s.mult_.assign(static_cast<std::size_t>(prefix) + 1, 0);
  s.b_.assign(static_cast<std::size_t>(prefix) + 2, 0);
  for (int n = 1; n <= prefix; ++n) {
    s.tau_[static_cast<std::size_t>(n)] = std::int64_t{1} << (2 * (n + 1));
    s.delta_[static_cast<std::size_t>(n)] = std::int64_t{2} << (2 * (n + 1));
    s.mult_[static_cast<std::size_t>(n)] = 8;
  }
  for (int n = 1; n <= prefix + 1; ++n) {
    const std::int64_t gap = std::int64_t{1} << (4 * n + 2);
    s.b_[static_cast<std::size_t>(n)] =
        checked_add_i64(s.b_[static_cast<std::size_t>(n) - 1], gap);
  }
  s.phi_ = build_phi_table(prefix);
  return s;
}

schedule schedule::small2(int prefix) {
  if (prefix < 1 || prefix > 48) {
    throw malformed_input("small-2 preset supports prefix in [1, 48]");
  }
  schedule s;
  s.prefix_ = prefix;
  s.delta_.assign(static_cast<std::size_t>(prefix) + 1, 0);
  s.tau_.assign(static_cast<std::size_t>(prefix) + 1, 0);
  s.mult_.assign(static_cast<std::size_t>(prefix) + 1, 0);
  s.b_.assign(static_cast<std::size_t>(prefix) + 2, 0);
  s.b_[1] = 32;
  for (int n = 1; n <= prefix; ++n) {
    const auto un = static_cast<std::size_t>(n);
    s.tau_[un] = checked_add_i64(s.delta_[un - 1], 2 * (std::int64_t{n} + 1));
    s.delta_[un] = checked_add_i64(s.tau_[un], std::int64_t{5} << n);
  }
  for (int n = 1; n <= prefix; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::int64_t gap_prev = s.b_[un] - s.b_[un - 1];
    std::int64_t mult = 1;
    for (;; ++mult) {
      if (mult > (std::int64_t{1} << 20)) {
        throw resource_limit("small-2 multiplier search failed to terminate");
      }
      const std::int64_t gap = checked_mul_i64(2 * mult, gap_prev);
      const bool room = 2 * s.delta_[un] < gap;
      // Strict ratio decrease delta_n / gap_{n+1} < delta_{n-1} / gap_n,
      // checked in cross-multiplied exact integers (only binding for n >= 2).
      const bool ratio =
          n == 1 || bigint(s.delta_[un]) * bigint(gap_prev) <
                        bigint(s.delta_[un - 1]) * bigint(gap);
      if (room && ratio) {
        s.mult_[un] = mult;
        s.b_[un + 1] = checked_add_i64(s.b_[un], gap);
        break;
      }
    }
  }
  s.phi_ = build_phi_table(prefix);
  return s;
}

schedule schedule::from_parts(std::vector<std::int64_t> phi,
                              std::vector<std::int64_t> delta,
                              std::vector<std::int64_t> tau,
                              std::vector<std::int64_t> b,
                              std::vector<std::int64_t> multipliers) {
  if (delta.empty() || b.size() != delta.size() + 1 ||
      tau.size() + 1 != delta.size() || multipliers.size() != tau.size()) {
    throw malformed_input(
        "schedule arrays inconsistent: need |delta| = prefix+1, |tau| = |N| = "
        "prefix, |b| = prefix+2");
  }
  const int prefix = static_cast<int>(delta.size()) - 1;
  if (prefix < 1) throw malformed_input("schedule prefix must be at least 1");
  if (static_cast<std::int64_t>(phi.size()) < prefix + 1) {
    throw malformed_input("phi table must cover indices 0..prefix");
  }
  schedule s;
  s.prefix_ = prefix;
  s.phi_ = std::move(phi);
  s.delta_ = std::move(delta);
  s.tau_.assign(1, 0);
  s.tau_.insert(s.tau_.end(), tau.begin(), tau.end());
  s.mult_.assign(1, 0);
  s.mult_.insert(s.mult_.end(), multipliers.begin(), multipliers.end());
  s.b_ = std::move(b);
  return s;
}

std::int64_t schedule::b(int n) const {
  if (n < 0 || n > prefix_ + 1) throw prefix_exceeded("b_n index outside stored prefix");
  return b_[static_cast<std::size_t>(n)];
}

std::int64_t schedule::delta(int n) const {
  if (n < 0 || n > prefix_) throw prefix_exceeded("delta_n index outside stored prefix");
  return delta_[static_cast<std::size_t>(n)];
}

std::int64_t schedule::tau(int n) const {
  if (n < 1 || n > prefix_) throw prefix_exceeded("tau_n index outside stored prefix");
  return tau_[static_cast<std::size_t>(n)];
}

std::int64_t schedule::multiplier(int n) const {
  if (n < 1 || n > prefix_) throw prefix_exceeded("multiplier index outside stored prefix");
  return mult_[static_cast<std::size_t>(n)];
}

std::int64_t schedule::phi(std::int64_t n) const {
  if (n < 0 || n >= static_cast<std::int64_t>(phi_.size())) {
    throw prefix_exceeded("phi index outside stored table");
  }
  return phi_[static_cast<std::size_t>(n)];
}

std::int64_t schedule::phi_table_size() const noexcept {
  return static_cast<std::int64_t>(phi_.size());
}

int schedule::block_of(std::int64_t k) const {
  if (k < 0) throw malformed_input("sequence indices are non-negative");
  if (k >= b_.back()) {
    throw prefix_exceeded("index beyond the generated schedule prefix");
  }
  const auto it = std::upper_bound(b_.begin(), b_.end(), k);
  return static_cast<int>(it - b_.begin()) - 1;
}

std::int64_t schedule::block_period(int n) const {
  return checked_mul_i64(2, b(n + 1) - b(n));
}

std::int64_t schedule::index_limit() const { return b_.back(); }

condition_report schedule::validate() const {
  condition_report report;
  const int P = prefix_;

  {
    condition_entry e{"monotone-base", true, std::nullopt,
                      "b_0 = 0, delta_0 = 0, b/delta/tau strictly increasing, "
                      "multipliers >= 1"};
    if (b_[0] != 0) { e.pass = false; e.first_violation = 0; }
    if (e.pass && delta_[0] != 0) { e.pass = false; e.first_violation = 0; }
    for (int n = 1; e.pass && n <= P + 1; ++n) {
      if (b_[static_cast<std::size_t>(n)] <= b_[static_cast<std::size_t>(n) - 1]) {
        e.pass = false;
        e.first_violation = n;
      }
    }
    for (int n = 1; e.pass && n <= P; ++n) {
      const auto un = static_cast<std::size_t>(n);
      if (delta_[un] <= delta_[un - 1] || tau_[un] <= 0 ||
          (n >= 2 && tau_[un] <= tau_[un - 1]) || mult_[un] < 1) {
        e.pass = false;
        e.first_violation = n;
      }
    }
    report.entries.push_back(std::move(e));
  }

  {
    condition_entry e{"(1) feedback-map", true, std::nullopt,
                      "phi(0) = 0, phi(m) < m, and every block below the "
                      "prefix has a preimage in the stored table"};
    if (phi_.empty() || phi_[0] != 0) { e.pass = false; e.first_violation = 0; }
    for (std::int64_t m = 1; e.pass && m < static_cast<std::int64_t>(phi_.size()); ++m) {
      if (phi_[static_cast<std::size_t>(m)] < 0 || phi_[static_cast<std::size_t>(m)] >= m) {
        e.pass = false;
        e.first_violation = m;
      }
    }
    if (e.pass) {
      std::vector<bool> seen(static_cast<std::size_t>(P), false);
      for (std::int64_t m = 1; m < static_cast<std::int64_t>(phi_.size()); ++m) {
        const std::int64_t v = phi_[static_cast<std::size_t>(m)];
        if (v < P) seen[static_cast<std::size_t>(v)] = true;
      }
      for (std::int64_t v = 0; v < P; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) {
          e.pass = false;
          e.first_violation = v;
          e.note += "; missing preimage";
          break;
        }
      }
    }
    report.entries.push_back(std::move(e));
  }

  {
    condition_entry e{"(2) wrap-margin-increasing", true, std::nullopt,
                      "delta_n - tau_n strictly increasing (finite proxy for "
                      "divergence)"};
    for (int n = 1; n <= P; ++n) {
      const auto un = static_cast<std::size_t>(n);
      if (delta_[un] - tau_[un] <= 0 ||
          (n >= 2 && delta_[un] - tau_[un] <= delta_[un - 1] - tau_[un - 1])) {
        e.pass = false;
        e.first_violation = n;
        break;
      }
    }
    report.entries.push_back(std::move(e));
  }

  {
    condition_entry e{"(3) wrap-weight-floor", true, std::nullopt,
                      "tau_n >= delta_{n-1} + 2(n+1)"};
    for (int n = 1; n <= P; ++n) {
      const auto un = static_cast<std::size_t>(n);
      if (tau_[un] < delta_[un - 1] + 2 * (std::int64_t{n} + 1)) {
        e.pass = false;
        e.first_violation = n;
        break;
      }
    }
    report.entries.push_back(std::move(e));
  }

  {
    condition_entry e{"(4) block-gap-multiple", true, std::nullopt,
                      "b_{n+1} - b_n = 2 N_n (b_n - b_{n-1}) with integer N_n"};
    for (int n = 1; n <= P; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const bigint lhs = bigint(b_[un + 1]) - b_[un];
      const bigint rhs = bigint(2) * mult_[un] * (bigint(b_[un]) - b_[un - 1]);
      if (lhs != rhs) {
        e.pass = false;
        e.first_violation = n;
        break;
      }
    }
    report.entries.push_back(std::move(e));
  }

  {
    condition_entry e{"(5) doubling-room", true, std::nullopt,
                      "2 delta_n < b_{n+1} - b_n"};
    for (int n = 1; n <= P; ++n) {
      const auto un = static_cast<std::size_t>(n);
      if (bigint(2) * delta_[un] >= bigint(b_[un + 1]) - b_[un]) {
        e.pass = false;
        e.first_violation = n;
        break;
      }
    }
    report.entries.push_back(std::move(e));
  }

  {
    condition_entry e{"(6) ratio-decreasing", true, std::nullopt,
                      "delta_n / (b_{n+1} - b_n) strictly decreasing (finite "
                      "proxy for convergence to 0)"};
    for (int n = 2; n <= P; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const bigint lhs = bigint(delta_[un]) * (bigint(b_[un]) - b_[un - 1]);
      const bigint rhs = bigint(delta_[un - 1]) * (bigint(b_[un + 1]) - b_[un]);
      if (lhs >= rhs) {
        e.pass = false;
        e.first_violation = n;
        break;
      }
    }
    report.entries.push_back(std::move(e));
  }

  return report;
}

condition_report schedule::validate_41() const {
  condition_report report;
  condition_entry e{"(41) summable-wrap", true, std::nullopt,
                    "2^{delta_{n-1}} (b_{n+1} - b_n) <= 2^{tau_n - 2(n+1)}"};
  for (int n = 1; n <= prefix_; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::int64_t gap = b_[un + 1] - b_[un];
    const std::int64_t margin =
        tau_[un] - 2 * (std::int64_t{n} + 1) - delta_[un - 1];
    const bool ok =
        margin >= 0 && (margin >= 63 || gap <= (std::int64_t{1} << margin));
    if (!ok) {
      e.pass = false;
      e.first_violation = n;
      break;
    }
  }
  report.entries.push_back(std::move(e));
  return report;
}

}  // namespace chaoslab
