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

#include <cmath>
#include <doctest.h>
#include <vector>

#include "chaoslab/errors.hpp"
#include "chaoslab/schedule.hpp"

using namespace chaoslab;

TEST_CASE("fast preset tables") {
  const schedule s = schedule::canonical(3);
  CHECK(s.b_table() == std::vector<std::int64_t>{0, 64, 1088, 17472, 279616});
  CHECK(s.prefix() == 3);
  CHECK(s.index_limit() == 279616);

  const schedule s2 = schedule::canonical(2);
  CHECK(s2.tau_table() == std::vector<std::int64_t>{0, 16, 64});
  CHECK(s2.delta_table() == std::vector<std::int64_t>{0, 32, 128});
  CHECK(s2.multiplier_table() == std::vector<std::int64_t>{0, 8, 8});
  CHECK(s2.validate().all_pass());
}

TEST_CASE("desk-sized preset tables") {
  const schedule s = schedule::small2(8);
  CHECK(s.b_table() == std::vector<std::int64_t>{0, 32, 96, 352, 1376, 5472, 13664,
                                                 30048, 62816, 128352});
  CHECK(s.tau_table() ==
        std::vector<std::int64_t>{0, 4, 20, 48, 98, 190, 364, 700, 1358});
  CHECK(s.delta_table() ==
        std::vector<std::int64_t>{0, 14, 40, 88, 178, 350, 684, 1340, 2638});
  CHECK(s.multiplier_table() == std::vector<std::int64_t>{0, 1, 2, 2, 2, 1, 1, 1, 1});
  CHECK(s.validate().all_pass());

  const schedule s4 = schedule::small2(4);
  CHECK(s4.b_table() == std::vector<std::int64_t>{0, 32, 96, 352, 1376, 5472});
  CHECK(s4.validate().all_pass());
}

TEST_CASE("preset prefix ranges are enforced") {
  CHECK_THROWS_AS((void)schedule::canonical(0), malformed_input);
  CHECK_THROWS_AS((void)schedule::canonical(15), malformed_input);
  CHECK_THROWS_AS((void)schedule::small2(0), malformed_input);
  CHECK_THROWS_AS((void)schedule::small2(49), malformed_input);
  CHECK(schedule::canonical(14).validate().all_pass());
  CHECK(schedule::small2(48).validate().all_pass());
}

TEST_CASE("feedback map walks the diagonals") {
  const std::vector<std::int64_t> expect{0, 0, 0, 1, 0, 1, 2};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(schedule::phi_diagonal(static_cast<std::int64_t>(i)) == expect[i]);
  }
  CHECK(schedule::phi_diagonal(7) == 0);
  CHECK(schedule::phi_diagonal(8) == 1);
  CHECK(schedule::phi_diagonal(16) == 0);
  CHECK(schedule::phi_diagonal(17) == 1);
  CHECK(schedule::phi_diagonal(29) == 0);
  CHECK(schedule::phi_diagonal(30) == 1);

  // Strictly below the argument (except at 0), so feedback always lands on
  // an earlier block.
  for (std::int64_t n = 1; n <= 1000; ++n) {
    CHECK(schedule::phi_diagonal(n) < n);
    CHECK(schedule::phi_diagonal(n) >= 0);
  }
}

TEST_CASE("every value recurs along the diagonals at the expected rate") {
  // Value v appears once per diagonal of length > v; among 0..L-1 that is
  // floor((sqrt(8L) - 1) / 2) - v appearances, give or take the partial
  // last diagonal, plus one extra hit of 0 from the origin itself.
  constexpr std::int64_t L = 5000;
  std::vector<std::int64_t> counts(80, 0);
  for (std::int64_t n = 0; n < L; ++n) {
    const std::int64_t v = schedule::phi_diagonal(n);
    if (v < static_cast<std::int64_t>(counts.size())) ++counts[v];
  }
  const auto full_diagonals =
      static_cast<std::int64_t>((std::sqrt(8.0 * L) - 1.0) / 2.0);
  for (std::int64_t v = 0; v < 40; ++v) {
    CHECK(counts[v] >= full_diagonals - v - 1);
    CHECK(counts[v] <= full_diagonals - v + (v == 0 ? 2 : 1));
  }
}

TEST_CASE("block arithmetic") {
  const schedule s = schedule::small2(8);
  CHECK(s.block_of(0) == 0);
  CHECK(s.block_of(31) == 0);
  CHECK(s.block_of(32) == 1);
  CHECK(s.block_of(95) == 1);
  CHECK(s.block_of(96) == 2);
  CHECK(s.block_of(1454) == 4);
  CHECK(s.block_period(0) == 64);
  CHECK(s.block_period(1) == 128);
  CHECK(s.block_period(4) == 8192);
  CHECK_THROWS_AS((void)s.block_of(128352), prefix_exceeded);
  CHECK_THROWS_AS((void)s.block_of(-1), malformed_input);
  CHECK_THROWS_AS((void)s.b(99), prefix_exceeded);
}

TEST_CASE("stored feedback table agrees with the diagonal enumeration") {
  const schedule s = schedule::small2(8);
  CHECK(s.phi(4) == 0);
  CHECK(s.phi(7) == 0);
  for (std::int64_t n = 0; n < s.phi_table_size(); ++n) {
    CHECK(s.phi(n) == schedule::phi_diagonal(n));
  }
  // The table is long enough that every block below the prefix has a
  // preimage (the witness searches rely on this).
  for (int v = 0; v < s.prefix(); ++v) {
    bool found = false;
    for (std::int64_t n = 1; n < s.phi_table_size(); ++n) {
      if (s.phi(n) == v) found = true;
    }
    CHECK(found);
  }
}

namespace {

// from_parts takes tau and the multipliers without the unused slot 0 that
// the table accessors include.
std::vector<std::int64_t> strip_slot0(const std::vector<std::int64_t>& table) {
  return {table.begin() + 1, table.end()};
}

}  // namespace

TEST_CASE("each defining condition can fail individually") {
  const schedule good = schedule::small2(4);
  const auto phi = good.phi_table();
  const auto delta = good.delta_table();
  const auto tau = strip_slot0(good.tau_table());
  const auto b = good.b_table();
  const auto mult = strip_slot0(good.multiplier_table());

  // Weakening tau_2 breaks the wrap-weight floor condition at n = 2.
  auto tau2 = tau;
  tau2[1] = 19;  // entry for n = 2
  const schedule bad = schedule::from_parts(phi, delta, tau2, b, mult);
  const condition_report rep = bad.validate();
  CHECK_FALSE(rep.all_pass());
  for (const auto& e : rep.entries) {
    if (e.name == "(3) wrap-weight-floor") {
      CHECK_FALSE(e.pass);
      REQUIRE(e.first_violation.has_value());
      CHECK(*e.first_violation == 2);
    } else {
      CHECK(e.pass);
    }
  }

  // Breaking monotonicity of the block starts is caught too.
  auto b2 = b;
  b2[3] = b2[2];
  CHECK_FALSE(schedule::from_parts(phi, delta, tau, b2, mult).validate().all_pass());
}

TEST_CASE("summability strengthening separates the presets") {
  CHECK(schedule::canonical(8).validate_41().all_pass());
  const condition_report rep = schedule::small2(5).validate_41();
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].first_violation.has_value());
  CHECK(*rep.entries[0].first_violation == 1);
}

TEST_CASE("raw assembly validates the array shapes") {
  const schedule good = schedule::small2(2);
  const auto phi = good.phi_table();
  const auto delta = good.delta_table();
  const auto tau = strip_slot0(good.tau_table());
  const auto b = good.b_table();
  const auto mult = strip_slot0(good.multiplier_table());

  const schedule rebuilt = schedule::from_parts(phi, delta, tau, b, mult);
  CHECK(rebuilt.validate().all_pass());
  CHECK(rebuilt == good);

  auto short_b = b;
  short_b.pop_back();
  CHECK_THROWS_AS(
      (void)schedule::from_parts(phi, delta, tau, short_b, mult),
      malformed_input);

  auto short_phi = std::vector<std::int64_t>{0};
  CHECK_THROWS_AS(
      (void)schedule::from_parts(short_phi, delta, tau, b, mult),
      malformed_input);
}
