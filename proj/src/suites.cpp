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

#include "chaoslab/suites.hpp"

#include <algorithm>
#include <set>

#include "chaoslab/errors.hpp"
#include "chaoslab/operator_t.hpp"
#include "chaoslab/verify.hpp"

namespace chaoslab {

namespace {

std::string block_vec_tag(int block, int trial) {
  return "block " + std::to_string(block) + ", trial " + std::to_string(trial);
}

}  // namespace

dyadic random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> mant(0, 255);
  std::uniform_int_distribution<std::int64_t> expd(-6, 6);
  std::uniform_int_distribution<int> signd(0, 1);
  const bigint m = 2 * mant(rng) + 1;
  return dyadic::from_parts(signd(rng) == 0 ? 1 : -1, m, expd(rng));
}

sparse_vec random_vec_in_block(std::mt19937_64& rng, const schedule& s, int block,
                               int max_support) {
  if (max_support < 1) throw malformed_input("support bound must be positive");
  std::uniform_int_distribution<std::int64_t> idx(s.b(block), s.b(block + 1) - 1);
  std::uniform_int_distribution<int> size(1, max_support);
  std::set<std::int64_t> indices;
  const int want = size(rng);
  while (static_cast<int>(indices.size()) < want) indices.insert(idx(rng));
  sparse_vec v;
  for (const std::int64_t k : indices) v.set(k, random_dyadic(rng));
  return v;
}

sparse_vec random_vec_below(std::mt19937_64& rng, std::int64_t index_bound,
                            int max_support) {
  if (index_bound < 1) throw malformed_input("index bound must be positive");
  if (max_support < 1) throw malformed_input("support bound must be positive");
  std::uniform_int_distribution<std::int64_t> idx(0, index_bound - 1);
  std::uniform_int_distribution<int> size(1, max_support);
  std::set<std::int64_t> indices;
  const int want = size(rng);
  while (static_cast<int>(indices.size()) < want) indices.insert(idx(rng));
  sparse_vec v;
  for (const std::int64_t k : indices) v.set(k, random_dyadic(rng));
  return v;
}

suite_result periodicity_suite(const schedule& s, std::uint64_t seed,
                               int samples_per_block) {
  suite_result res;
  res.name = "periodicity";
  operator_t op(s);
  std::mt19937_64 rng(seed);

  // apply_power reduces exponents modulo the period, so feeding it the
  // period itself would prove nothing. Going to period - 1 by the closed
  // form and taking the last step literally walks the whole loop.
  const auto returns_after_period = [&op](std::int64_t k, std::int64_t period) {
    const sparse_vec e = sparse_vec::basis(k);
    return op.apply(op.apply_power(e, bigint(period - 1))) == e;
  };

  int full = 1;
  while (full < s.prefix() && s.b(full + 1) <= 2048) ++full;

  std::int64_t exhaustive = 0;
  for (std::int64_t k = 0; k < s.b(full) && res.pass; ++k) {
    const std::int64_t period = s.block_period(s.block_of(k));
    if (!returns_after_period(k, period)) {
      res.pass = false;
      res.detail = "basis " + std::to_string(k) + " failed to return after " +
                   std::to_string(period) + " steps";
    }
    ++res.cases;
    ++exhaustive;
  }

  std::int64_t sampled = 0;
  for (int n = full; n < s.prefix() && res.pass; ++n) {
    std::uniform_int_distribution<std::int64_t> idx(s.b(n), s.b(n + 1) - 1);
    const std::int64_t period = s.block_period(n);
    for (int t = 0; t < samples_per_block && res.pass; ++t) {
      const std::int64_t k = idx(rng);
      if (!returns_after_period(k, period)) {
        res.pass = false;
        res.detail = "sampled basis " + std::to_string(k) +
                     " failed to return after " + std::to_string(period) + " steps";
      }
      ++res.cases;
      ++sampled;
    }
  }

  // Half-period sign flip across block 0.
  for (std::int64_t k = 0; k < s.b(1) && res.pass; ++k) {
    if (op.apply_power(sparse_vec::basis(k), bigint(s.b(1))) !=
        sparse_vec::basis(k, dyadic(-1))) {
      res.pass = false;
      res.detail = "basis " + std::to_string(k) + " missed the half-period sign flip";
    }
    ++res.cases;
  }

  if (res.pass) {
    res.detail = std::to_string(exhaustive) + " basis vectors exhaustive below b_" +
                 std::to_string(full) + ", " + std::to_string(sampled) +
                 " sampled above, " + std::to_string(s.b(1)) +
                 " half-period sign checks";
  }
  return res;
}

suite_result power_oracle_suite(const schedule& s, std::uint64_t seed, int trials,
                                std::int64_t max_exp) {
  suite_result res;
  res.name = "power-oracle";
  operator_t op(s);
  std::mt19937_64 rng(seed);
  const std::int64_t bound = s.b(std::min(4, s.prefix()));

  for (int t = 0; t < trials && res.pass; ++t) {
    const sparse_vec v = random_vec_below(rng, bound, 8);
    sparse_vec slow = v;
    for (std::int64_t j = 0; j <= max_exp && res.pass; ++j) {
      if (op.apply_power(v, bigint(j)) != slow) {
        res.pass = false;
        res.detail = "trial " + std::to_string(t) + ": fast power diverged from " +
                     "literal iteration at exponent " + std::to_string(j);
      }
      ++res.cases;
      if (j < max_exp) slow = op.apply(slow);
    }
  }
  if (res.pass) {
    res.detail = std::to_string(trials) + " random vectors, every exponent up to " +
                 std::to_string(max_exp);
  }
  return res;
}

suite_result operator_norm_suite(const schedule& s, std::int64_t index_bound) {
  suite_result res;
  res.name = "operator-norm";
  operator_t op(s);
  dyadic best;
  for (std::int64_t k = 0; k < index_bound && res.pass; ++k) {
    const dyadic n = norm_l1(op.apply(sparse_vec::basis(k)));
    if (n > dyadic(2)) {
      res.pass = false;
      res.detail = "basis " + std::to_string(k) + " maps to norm " + n.str() + " > 2";
    }
    if (n > best) best = n;
    ++res.cases;
  }
  if (res.pass && best != dyadic(2)) {
    res.pass = false;
    res.detail = "norm 2 was never attained below " + std::to_string(index_bound);
  }
  if (res.pass) {
    res.detail = "max basis image norm is exactly 2 over " +
                 std::to_string(index_bound) + " indices";
  }
  return res;
}

suite_result fhc0_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block) {
  suite_result res;
  res.name = "fhc0";
  std::mt19937_64 rng(seed);
  for (int l = 1; l <= max_block && res.pass; ++l) {
    for (int t = 0; t < trials && res.pass; ++t) {
      const sparse_vec x = random_vec_in_block(rng, s, l, 6);
      for (int n = 0; n < l && res.pass; ++n) {
        const witness_report rep = fhc0_check(x, n, l, s);
        if (!rep.all_hold()) {
          res.pass = false;
          res.detail = "leakage bound failed at pair (" + std::to_string(n) + ", " +
                       std::to_string(l) + "), " + block_vec_tag(l, t);
        }
        ++res.cases;
      }
    }
  }
  if (res.pass) {
    res.detail = std::to_string(res.cases) + " (n, l) scans over random block vectors";
  }
  return res;
}

suite_result fhc1_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block) {
  suite_result res;
  res.name = "fhc1";
  std::mt19937_64 rng(seed);
  for (int l = 1; l <= max_block && res.pass; ++l) {
    for (int t = 0; t < trials && res.pass; ++t) {
      const sparse_vec x = random_vec_in_block(rng, s, l, 6);
      for (int n = 0; n < l && res.pass; ++n) {
        const witness_report rep = fhc1_check(x, n, l, s);
        if (!rep.all_hold()) {
          res.pass = false;
          res.detail = "early-window bound failed at pair (" + std::to_string(n) +
                       ", " + std::to_string(l) + "), " + block_vec_tag(l, t);
        }
        ++res.cases;
      }
    }
  }
  if (res.pass) {
    res.detail = std::to_string(res.cases) + " (n, l) scans over random block vectors";
  }
  return res;
}

suite_result fhc2_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block) {
  suite_result res;
  res.name = "fhc2";
  std::mt19937_64 rng(seed);
  operator_t op(s);

  for (int l = 0; l <= max_block && res.pass; ++l) {
    const std::int64_t gap = s.b(l + 1) - s.b(l);
    const std::int64_t dl = s.delta(l);
    const std::int64_t last = 4 * s.block_period(l);
    for (int t = 0; t < trials && res.pass; ++t) {
      const sparse_vec x = random_vec_in_block(rng, s, l, 6);
      const dyadic threshold = norm_l1(weighted_x(x, l, s)) * dyadic::pow2(-1);

      // One orbit pass; the fraction inequality is then checked for every
      // scan end k <= last. In integers:
      //   count * gap >= (k+1)(gap - 2 delta) - 2 delta * gap.
      sparse_vec y = project(x, l, s);
      std::int64_t count = 0;
      for (std::int64_t j = 0; j <= last && res.pass; ++j) {
        if (norm_l1(project(y, l, s)) >= threshold) ++count;
        if (count * gap < (j + 1) * (gap - 2 * dl) - 2 * dl * gap) {
          res.pass = false;
          res.detail = "recurrence fraction broke the bound at scan end " +
                       std::to_string(j) + ", " + block_vec_tag(l, t);
        }
        ++res.cases;
        if (j < last) y = op.apply(y);
      }

      // The reported form at the final scan end must agree.
      if (res.pass) {
        const witness_report rep = fhc2_fraction(x, l, last, s);
        if (!rep.all_hold()) {
          res.pass = false;
          res.detail = "report disagreed with the exhaustive scan, " +
                       block_vec_tag(l, t);
        }
      }
    }
  }
  if (res.pass) {
    res.detail = std::to_string(res.cases) + " scan ends, exhaustive per orbit";
  }
  return res;
}

suite_result cool_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block) {
  suite_result res;
  res.name = "cool";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> blockd(0, max_block);

  for (int t = 0; t < trials && res.pass; ++t) {
    const int top = blockd(rng);
    // Anchor one entry in the top block, then sprinkle lower indices.
    sparse_vec x = random_vec_in_block(rng, s, top, 3);
    if (top > 0) {
      const sparse_vec lower = random_vec_below(rng, s.b(top), 3);
      for (const auto& [k, c] : lower.entries()) x.accumulate(k, c);
    }
    if (x.is_zero()) continue;

    const std::int64_t horizon = 8 * s.block_period(s.block_of(*x.max_index()));
    const cool_result cr = cool_certificate(x, horizon, s);
    if (!cr.report.all_hold()) {
      res.pass = false;
      res.detail = "certificate failed on trial " + std::to_string(t) +
                   " (top block " + std::to_string(cr.top_block) + ")";
    }
    ++res.cases;
  }
  if (res.pass) {
    res.detail = std::to_string(res.cases) +
                 " random vectors at horizon 8x the top-block period";
  }
  return res;
}

std::vector<suite_result> run_claim_suites(const schedule& s, const std::string& claim,
                                           std::uint64_t seed, int trials) {
  const int top = std::min(3, s.prefix() - 1);
  std::vector<suite_result> out;
  const bool all = claim == "all";
  if (all || claim == "periodicity") {
    out.push_back(periodicity_suite(s, seed + 1, std::max(1, trials / 5)));
  }
  if (all) {
    out.push_back(power_oracle_suite(s, seed + 2, std::max(1, trials / 10), 512));
    out.push_back(operator_norm_suite(s, s.b(std::min(4, s.prefix()))));
  }
  if (all || claim == "fhc0") out.push_back(fhc0_suite(s, seed + 3, trials, top));
  if (all || claim == "fhc1") out.push_back(fhc1_suite(s, seed + 4, trials, top));
  if (all || claim == "fhc2") {
    out.push_back(fhc2_suite(s, seed + 5, trials, std::min(2, top)));
  }
  if (all || claim == "cool") {
    out.push_back(cool_suite(s, seed + 6, trials, std::min(2, top)));
  }
  if (out.empty()) {
    throw malformed_input(
        "unknown claim \"" + claim +
        "\"; expected periodicity, fhc0, fhc1, fhc2, cool or all");
  }
  return out;
}

}  // namespace chaoslab
