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

#include <algorithm>
#include <doctest.h>
#include <numeric>
#include <random>
#include <vector>

#include "chaoslab/density.hpp"
#include "chaoslab/errors.hpp"

using namespace chaoslab;

namespace {

index_set random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> hd(20, 300);
  const std::int64_t H = hd(rng);
  std::uniform_int_distribution<std::int64_t> ed(0, H);
  std::uniform_int_distribution<std::int64_t> sized(0, H / 2);
  std::vector<std::int64_t> elems;
  const std::int64_t size = sized(rng);
  for (std::int64_t i = 0; i < size; ++i) elems.push_back(ed(rng));
  return index_set(std::move(elems), H);
}

}  // namespace

TEST_CASE("index sets sort, deduplicate and range-check") {
  const index_set a({5, 1, 5, 3}, 10);
  CHECK(a.elements() == std::vector<std::int64_t>{1, 3, 5});
  CHECK(a.size() == 3);
  CHECK(a.count_upto(4) == 2);
  CHECK(a.count_in(3, 5) == 2);
  CHECK(a.count_in(6, 2) == 0);
  CHECK_THROWS_AS((void)index_set({11}, 10), malformed_input);
  CHECK_THROWS_AS((void)index_set({-1}, 10), malformed_input);
  CHECK_THROWS_AS((void)index_set({}, -1), malformed_input);
}

TEST_CASE("progression materialization keeps the structure") {
  const index_set a = index_set::from_progressions({{0, 3}}, 99);
  CHECK(a.size() == 34);
  REQUIRE(a.progressions().has_value());
  CHECK(density_profile(a).back() == rational(34, 100));
  CHECK(density_profile(a).front() == rational(1, 1));  // 0 is a member

  CHECK_THROWS_AS((void)index_set::from_progressions({{0, 0}}, 10),
                  malformed_input);
  CHECK_THROWS_AS((void)index_set::from_progressions({{-2, 3}}, 10),
                  malformed_input);
}

TEST_CASE("density profile matches direct counting") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const index_set a = random_set(rng);
    const std::vector<rational> prof = density_profile(a);
    REQUIRE(static_cast<std::int64_t>(prof.size()) == a.horizon() + 1);
    for (std::int64_t N = 0; N <= a.horizon(); ++N) {
      CHECK(prof[static_cast<std::size_t>(N)] == rational(a.count_upto(N), N + 1));
    }
  }
}

TEST_CASE("best-window counts against brute force") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 40; ++i) {
    const index_set a = random_set(rng);
    std::uniform_int_distribution<std::int64_t> nd(1, a.horizon() + 1);
    const std::int64_t N = nd(rng);
    const banach_result got = banach_window(a, N);
    std::int64_t want = 0;
    for (std::int64_t start = 0; start + N - 1 <= a.horizon(); ++start) {
      want = std::max(want, a.count_in(start, start + N - 1));
    }
    CHECK(got.count == want);
    CHECK(got.ratio == rational(want, N));
    if (got.count > 0) {
      CHECK(a.count_in(got.window_start, got.window_start + N - 1) == got.count);
    }
  }
}

TEST_CASE("best-window pinned examples") {
  // Ten consecutive hits fill a length-10 window completely.
  std::vector<std::int64_t> run;
  for (std::int64_t x = 100; x <= 109; ++x) run.push_back(x);
  const banach_result full = banach_window(index_set(run, 150), 10);
  CHECK(full.count == 10);
  CHECK(full.ratio == rational(1));

  // Multiples of five: a window of 100 consecutive integers holds 20.
  const index_set fives = index_set::from_progressions({{0, 5}}, 499);
  const banach_result bw = banach_window(fives, 100);
  CHECK(bw.count == 20);
  CHECK(bw.ratio == rational(1, 5));

  CHECK_THROWS_AS((void)banach_window(fives, 0), malformed_input);
  CHECK_THROWS_AS((void)banach_window(fives, 501), malformed_input);
}

TEST_CASE("empirical density brackets the exact density of a progression") {
  const std::int64_t H = 1000;
  for (std::int64_t d = 1; d <= 8; ++d) {
    for (std::int64_t a0 = 0; a0 <= 5; ++a0) {
      const index_set a = index_set::from_progressions({{a0, d}}, H);
      const density_estimate est = empirical_density(a);
      CHECK(est.lower <= est.upper);
      const rational exact(1, d);
      const rational slack(16, H + 1);
      CHECK(est.lower >= exact - slack);
      CHECK(est.upper <= exact + slack);
    }
  }
  CHECK_THROWS_AS((void)empirical_density(index_set({1}, 10), 11),
                  malformed_input);
}

TEST_CASE("exact progression densities") {
  CHECK(exact_ap_density({{0, 4}, {0, 6}}) == rational(1, 3));
  CHECK(exact_ap_density({{0, 2}, {1, 2}}) == rational(1));
  CHECK(exact_ap_density({{3, 7}}) == rational(1, 7));
  CHECK(exact_ap_density({}) == rational(0));
  // Nested progressions add nothing.
  CHECK(exact_ap_density({{0, 3}, {0, 6}}) == rational(1, 3));
  CHECK_THROWS_AS((void)exact_ap_density({{0, 0}}), malformed_input);
  CHECK_THROWS_AS(
      (void)exact_ap_density(std::vector<std::pair<std::int64_t, std::int64_t>>(
          17, {0, 2})),
      malformed_input);
}

TEST_CASE("inclusion-exclusion agrees with one full cycle") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> dd(1, 9);
  std::uniform_int_distribution<int> md(1, 4);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::pair<std::int64_t, std::int64_t>> ps;
    const int m = md(rng);
    std::int64_t L = 1;
    std::int64_t maxa = 0;
    for (int j = 0; j < m; ++j) {
      const std::int64_t d = dd(rng);
      std::uniform_int_distribution<std::int64_t> ad(0, d - 1 + 6);
      const std::int64_t a = ad(rng);
      ps.emplace_back(a, d);
      L = std::lcm(L, d);
      maxa = std::max(maxa, a);
    }
    // Count one aligned full cycle beyond every offset.
    std::int64_t count = 0;
    for (std::int64_t x = maxa; x < maxa + L; ++x) {
      bool member = false;
      for (const auto& [a, d] : ps) {
        if (x >= a && (x - a) % d == 0) member = true;
      }
      if (member) ++count;
    }
    CHECK(exact_ap_density(ps) == rational(count, L));
  }
}

TEST_CASE("prefix ratios never exceed the best window") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    const index_set a = random_set(rng);
    const density_estimate est = empirical_density(a);
    CHECK(est.lower <= est.upper);
    // Locate a prefix length realizing the upper estimate; the window of
    // the same length starting at 0 is available to the window scan, so the
    // best-window ratio dominates.
    const std::vector<rational> prof = density_profile(a);
    std::int64_t arg = est.tail_begin;
    for (std::int64_t N = est.tail_begin; N <= a.horizon(); ++N) {
      if (prof[static_cast<std::size_t>(N)] == est.upper) {
        arg = N;
        break;
      }
    }
    const banach_result bw = banach_window(a, arg + 1);
    CHECK(est.upper <= bw.ratio);
  }
}
