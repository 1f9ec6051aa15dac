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

#include "chaoslab/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "chaoslab/errors.hpp"
#include "chaoslab/serialize.hpp"

namespace chaoslab {

namespace mp = boost::multiprecision;

namespace {

using detail::checked_add_i64;
using detail::checked_mul_i64;
using detail::checked_sub_i64;

std::int64_t to_i64_checked(const bigint& v, const char* what) {
  if (v < 0 || v > bigint(std::numeric_limits<std::int64_t>::max())) {
    throw resource_limit(std::string(what) + " does not fit in 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

// Smallest s >= 1 with |xk| < eps * 2^s.
std::int64_t minimal_shift(const dyadic& eps, const dyadic& xk) {
  if (xk.is_zero()) return 1;
  const dyadic ax = abs(xk);
  std::int64_t s = std::max<std::int64_t>(
      1, checked_sub_i64(ax.position(), eps.position()));
  while (!(ax < eps * dyadic::pow2(s))) ++s;
  while (s > 1 && ax < eps * dyadic::pow2(s - 1)) --s;
  return s;
}

std::string rational_str(const rational& r) { return r.str(); }

nlohmann::json hyp0_objects(const hyp0_result& h, std::int64_t k,
                            const dyadic& xk, std::int64_t N, std::int64_t M) {
  return nlohmann::json{{"target_index", k},
                        {"target_coeff", dyadic_to_json(xk)},
                        {"modulus", N},
                        {"residue", M},
                        {"witness_index", h.m},
                        {"witness_block", h.t},
                        {"shift", h.s_exp},
                        {"residue_correction", h.r},
                        {"quotient", h.l},
                        {"absorbed_doublings", h.j_weight},
                        {"exponent", h.exponent},
                        {"coefficient", dyadic_to_json(h.z)},
                        {"residual", dyadic_to_json(h.residual)}};
}

}  // namespace

bool witness_report::all_hold() const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const checked_inequality& q) { return q.holds; });
}

void witness_report::require(std::string description, std::string lhs,
                             std::string relation, std::string rhs, bool holds) {
  inequalities.push_back(checked_inequality{std::move(description), std::move(lhs),
                                            std::move(relation), std::move(rhs),
                                            holds});
}

hyp0_result hyp0_witness(const dyadic& eps, std::int64_t k, std::int64_t N,
                         std::int64_t M, const dyadic& xk, const schedule& s) {
  if (eps.sign() <= 0) throw malformed_input("eps must be positive");
  if (N < 1) throw malformed_input("modulus N must be at least 1");
  if (M < 0 || M >= N) throw malformed_input("residue M must lie in [0, N)");

  const int n = s.block_of(k);
  const std::int64_t bn = s.b(n);
  const std::int64_t gap_n = s.b(n + 1) - bn;

  hyp0_result h;
  h.s_exp = minimal_shift(eps, xk);

  // Witness block: the first feedback preimage of n whose wrap margin
  // absorbs the smallness shift, the modulus and a full landing run.
  const std::int64_t margin_needed =
      checked_add_i64(checked_add_i64(h.s_exp, N), gap_n);
  std::int64_t t = -1;
  for (std::int64_t cand = 1; cand <= s.prefix(); ++cand) {
    if (s.phi(cand) == n &&
        s.delta(static_cast<int>(cand)) - s.tau(static_cast<int>(cand)) >=
            margin_needed) {
      t = cand;
      break;
    }
  }
  if (t < 0) {
    throw prefix_too_short(
        "no stored block feeds back to the target with wrap margin >= " +
        std::to_string(margin_needed) + "; extend the schedule prefix");
  }
  h.t = t;

  const auto ti = static_cast<int>(t);
  const std::int64_t base =
      checked_sub_i64(checked_add_i64(s.b(ti), s.delta(ti) - s.tau(ti)), h.s_exp);
  const std::int64_t exp_at_base =
      checked_add_i64(checked_sub_i64(s.b(ti + 1), base), k - bn);
  h.r = ((M - exp_at_base) % N + N) % N;
  h.m = base - h.r;
  h.exponent = checked_add_i64(exp_at_base, h.r);
  h.l = (h.exponent - M) / N;
  h.j_weight = std::min(k - bn, s.delta(n));
  h.z = xk * dyadic::pow2(-(h.s_exp + h.r + h.j_weight));

  // Exact replay of the construction.
  operator_t op(s);
  const sparse_vec witness = sparse_vec::basis(h.m, h.z);
  const sparse_vec reached = op.apply_power(witness, bigint(h.exponent));
  const sparse_vec diff = reached - sparse_vec::basis(k, xk);
  const dyadic distance = norm_l1(diff);  // at most one residual entry
  h.residual =
      abs(xk) * dyadic::pow2(checked_sub_i64(
                    checked_add_i64(k - bn, s.tau(ti) - s.delta(ti)), h.j_weight));

  witness_report& rep = h.report;
  rep.claim = "single-coordinate approximation";
  rep.objects = hyp0_objects(h, k, xk, N, M);
  rep.require("witness coefficient below eps", abs(h.z).str(), "<", eps.str(),
              abs(h.z) < eps);
  rep.require("iterate lies in the admissible class",
              std::to_string(h.exponent) + " mod " + std::to_string(N),
              "==", std::to_string(M),
              h.exponent >= 0 && h.exponent % N == M && h.l >= 0);
  rep.require("iterate reaches the target coordinate within eps",
              distance.str(), "<", eps.str(), distance < eps);
  rep.require("computed distance equals the closed-form residual",
              distance.str(), "==", h.residual.str(), distance == h.residual);
  rep.require("witness sits inside the doubling segment of its block",
              std::to_string(h.m),
              "in", "(" + std::to_string(s.b(ti)) + ", " +
                        std::to_string(s.b(ti) + s.delta(ti)) + "]",
              h.m > s.b(ti) && h.m <= s.b(ti) + s.delta(ti));
  return h;
}

transitivity_result transitivity_witness(const sparse_vec& y, const sparse_vec& x,
                                         const dyadic& eps, const schedule& s) {
  if (eps.sign() <= 0) throw malformed_input("eps must be positive");

  transitivity_result res;
  witness_report& rep = res.report;
  rep.claim = "topological transitivity witness";

  const sparse_vec diff = x - y;
  const std::int64_t base_period = period_of(y, s);
  bigint admissible(base_period);

  if (diff.is_zero()) {
    res.n = bigint(base_period);
  } else {
    const std::int64_t d = *diff.max_index();
    const int split_bits =
        std::bit_width(static_cast<std::uint64_t>(d));  // 2^bits >= d+1
    const dyadic eps_step = eps * dyadic::pow2(-split_bits);
    rep.objects["per_coordinate_eps"] = dyadic_to_json(eps_step);

    bigint acc(0);
    bigint freeze = admissible;
    for (const auto& [k, c] : diff.entries()) {
      const bigint modulus_big = freeze * (acc / freeze + 1);
      const std::int64_t modulus = to_i64_checked(modulus_big, "chained modulus");
      const std::int64_t residue = to_i64_checked(acc, "chained residue");
      hyp0_result step = hyp0_witness(eps_step, k, modulus, residue, c, s);
      res.z.accumulate(step.m, step.z);
      acc = bigint(step.exponent);
      freeze = mp::lcm(freeze,
                       bigint(s.block_period(s.block_of(step.m))));
      res.steps.push_back(std::move(step));
    }
    res.n = acc;
  }

  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& st : res.steps) {
    steps_json.push_back(nlohmann::json{{"witness_index", st.m},
                                        {"exponent", st.exponent},
                                        {"coefficient", dyadic_to_json(st.z)},
                                        {"residual", dyadic_to_json(st.residual)}});
  }
  rep.objects["perturbation"] = sparse_vec_to_json(res.z);
  rep.objects["iterate"] = res.n.str();
  rep.objects["base_period"] = base_period;
  rep.objects["steps"] = std::move(steps_json);

  for (std::size_t i = 0; i < res.steps.size(); ++i) {
    rep.require("coordinate step " + std::to_string(i) + " verified",
                res.steps[i].report.all_hold() ? "all sub-checks" : "failed sub-check",
                "==", "hold", res.steps[i].report.all_hold());
  }

  rep.require("perturbation is small", exact_sum_repr(abs_terms_desc(res.z)), "<",
              eps.str(), compare_abs_sum(res.z, eps) < 0);
  rep.require("iterate respects the source period",
              res.n.str() + " mod " + std::to_string(base_period), "==", "0",
              res.n % bigint(base_period) == 0);

  operator_t op(s);
  const sparse_vec reached = op.apply_power(y + res.z, res.n);
  const sparse_vec distance_vec = reached - x;
  rep.require("iterate lands inside the target ball",
              exact_sum_repr(abs_terms_desc(distance_vec)), "<", eps.str(),
              compare_abs_sum(distance_vec, eps) < 0);
  return res;
}

reiterative_result reiterative_witness(const sparse_vec& center, const dyadic& radius,
                                       int depth, const schedule& s) {
  if (radius.sign() <= 0) throw malformed_input("radius must be positive");
  if (depth < 0) throw malformed_input("depth must be non-negative");

  reiterative_result res;
  witness_report& rep = res.report;
  rep.claim = "recurrent return-time witness";

  res.step = period_of(center, s);
  const std::int64_t total_shift =
      checked_mul_i64(static_cast<std::int64_t>(depth), res.step);
  const dyadic inner_eps = radius * dyadic::pow2(-total_shift);

  transitivity_result trans = transitivity_witness(sparse_vec(), center, inner_eps, s);
  res.y = trans.z;
  res.kstar = trans.n;
  const std::int64_t kstar64 = to_i64_checked(res.kstar, "return-time base");

  rep.objects["perturbation"] = sparse_vec_to_json(res.y);
  rep.objects["base_iterate"] = res.kstar.str();
  rep.objects["step"] = res.step;
  rep.objects["depth"] = depth;
  rep.objects["inner_eps"] = dyadic_to_json(inner_eps);
  rep.require("seed approximation verified",
              trans.report.all_hold() ? "all sub-checks" : "failed sub-check",
              "==", "hold", trans.report.all_hold());

  operator_t op(s);
  for (int l = 0; l <= depth; ++l) {
    const std::int64_t hit = checked_add_i64(
        kstar64, checked_mul_i64(static_cast<std::int64_t>(l), res.step));
    res.hits.push_back(hit);
    const sparse_vec at = op.apply_power(res.y, bigint(hit));
    const sparse_vec dist = at - center;
    rep.require("orbit point " + std::to_string(l) + " stays inside the ball",
                exact_sum_repr(abs_terms_desc(dist)), "<=", radius.str(),
                compare_abs_sum(dist, radius) <= 0);
  }

  const std::int64_t horizon = res.hits.back();
  const index_set hits_set(res.hits, horizon);
  rep.objects["hits"] = index_set_to_json(hits_set);
  const std::int64_t window = checked_add_i64(total_shift, 1);
  const banach_result bw = banach_window(hits_set, window);
  rep.objects["window_count"] = bw.count;
  rep.objects["window_ratio"] = rational_str(bw.ratio);
  const rational expected(depth + 1, window);
  const rational floor_ratio(1, res.step);
  rep.require("best window carries all hits",
              rational_str(bw.ratio), ">=", rational_str(expected),
              bw.ratio >= expected);
  rep.require("window density meets the reciprocal period",
              rational_str(bw.ratio), ">=", rational_str(floor_ratio),
              bw.ratio >= floor_ratio);
  if (depth >= 1 && res.step > 1) {
    rep.require("window density strictly beats the reciprocal period",
                rational_str(expected), ">", rational_str(floor_ratio),
                expected > floor_ratio);
  }
  return res;
}

witness_report fhc0_check(const sparse_vec& x, int n, int l, const schedule& s) {
  if (n < 0 || n >= l) throw malformed_input("fhc0 needs 0 <= n < l");
  witness_report rep;
  rep.claim = "cross-block leakage bound";

  const sparse_vec pl = project(x, l, s);
  const dyadic bound =
      norm_l1(weighted_x(x, l, s)) * dyadic::pow2(-2 * (std::int64_t{l} + 1));

  dyadic sup;
  std::int64_t arg = 0;
  const std::int64_t period = s.block_period(l);
  if (!pl.is_zero()) {
    operator_t op(s);
    sparse_vec y = pl;
    for (std::int64_t j = 0; j < period; ++j) {
      const dyadic val = norm_l1(project(y, n, s));
      if (val > sup) {
        sup = val;
        arg = j;
      }
      y = op.apply(y);
    }
  }

  rep.objects = nlohmann::json{{"low_block", n},
                               {"high_block", l},
                               {"sup", dyadic_to_json(sup)},
                               {"bound", dyadic_to_json(bound)},
                               {"arg_j", arg},
                               {"period", period}};
  rep.require("leakage into the low block never exceeds the weighted bound",
              sup.str(), "<=", bound.str(), sup <= bound);
  return rep;
}

witness_report fhc1_check(const sparse_vec& x, int n, int l, const schedule& s) {
  if (n < 0 || n >= l) throw malformed_input("fhc1 needs 0 <= n < l");
  witness_report rep;
  rep.claim = "early-window leakage bound";

  const sparse_vec pl = project(x, l, s);
  const dyadic bound = norm_l1(pl) * dyadic::pow2(-2 * (std::int64_t{l} + 1));
  const std::int64_t j_max = (s.b(l + 1) - s.b(l)) - s.delta(l);

  dyadic best;
  std::int64_t arg = 0;
  if (!pl.is_zero()) {
    operator_t op(s);
    sparse_vec y = pl;
    for (std::int64_t j = 0; j <= j_max; ++j) {
      const dyadic val = norm_l1(project(y, n, s));
      if (val > best) {
        best = val;
        arg = j;
      }
      if (j < j_max) y = op.apply(y);
    }
  }

  rep.objects = nlohmann::json{{"low_block", n},
                               {"high_block", l},
                               {"max", dyadic_to_json(best)},
                               {"bound", dyadic_to_json(bound)},
                               {"arg_j", arg},
                               {"window_end", j_max}};
  rep.require("early-window leakage stays below the block-mass bound",
              best.str(), "<=", bound.str(), best <= bound);
  return rep;
}

std::int64_t exclusion_set::total_length() const {
  std::int64_t sum = 0;
  for (const auto& [lo, hi] : intervals) sum += hi - lo;
  return sum;
}

exclusion_set exclusion_intervals(int l, std::int64_t i, const schedule& s) {
  const std::int64_t gap = s.b(l + 1) - s.b(l);
  if (i < 0 || i >= gap) {
    throw malformed_input("offset must lie in [0, block gap)");
  }
  const std::int64_t dl = s.delta(l);
  exclusion_set out;
  out.block = l;
  out.offset = i;
  auto push = [&out](std::int64_t lo, std::int64_t hi) {
    if (lo < hi) out.intervals.emplace_back(lo, hi);
  };
  if (i >= dl) {
    push(s.b(l + 1) - i, s.b(l + 1) - i + dl);
  } else {
    push(s.b(l + 1) - i, s.b(l + 1));
    push(s.b(l), s.b(l) + dl - i);
  }
  return out;
}

witness_report fhc2_fraction(const sparse_vec& x, int l, std::int64_t k,
                             const schedule& s) {
  if (k < 0) throw malformed_input("scan end must be non-negative");
  witness_report rep;
  rep.claim = "in-block recurrence fraction";

  const sparse_vec pl = project(x, l, s);
  const dyadic threshold = norm_l1(weighted_x(x, l, s)) * dyadic::pow2(-1);
  const std::int64_t gap = s.b(l + 1) - s.b(l);
  const std::int64_t dl = s.delta(l);

  std::int64_t count = 0;
  std::vector<std::int64_t> quiet_offsets;
  if (!pl.is_zero()) {
    operator_t op(s);
    sparse_vec y = pl;
    for (std::int64_t j = 0; j <= k; ++j) {
      const dyadic val = norm_l1(project(y, l, s));
      if (val >= threshold) {
        ++count;
      } else if (quiet_offsets.size() < 16) {
        const std::int64_t off = j % gap;
        if (std::find(quiet_offsets.begin(), quiet_offsets.end(), off) ==
            quiet_offsets.end()) {
          quiet_offsets.push_back(off);
        }
      }
      if (j < k) y = op.apply(y);
    }
  }

  const rational fraction(count, k + 1);
  const rational bound = rational(1) - rational(2 * dl, k + 1) - rational(2 * dl, gap);

  nlohmann::json quiet = nlohmann::json::array();
  for (const std::int64_t off : quiet_offsets) {
    const exclusion_set ex = exclusion_intervals(l, off, s);
    nlohmann::json ivals = nlohmann::json::array();
    for (const auto& [lo, hi] : ex.intervals) {
      ivals.push_back(nlohmann::json::array({lo, hi}));
    }
    quiet.push_back(nlohmann::json{{"offset", off}, {"intervals", std::move(ivals)}});
  }
  rep.objects = nlohmann::json{{"block", l},
                               {"scan_end", k},
                               {"count", count},
                               {"threshold", dyadic_to_json(threshold)},
                               {"fraction", rational_str(fraction)},
                               {"bound", rational_str(bound)},
                               {"quiet_offsets", std::move(quiet)}};
  rep.require("recurrence fraction beats the exclusion bound",
              rational_str(fraction), ">=", rational_str(bound), fraction >= bound);
  return rep;
}

prelim_result prelim_scan(const sparse_vec& x, std::int64_t horizon,
                          const schedule& s) {
  if (x.is_zero()) throw malformed_input("the scan needs a non-zero vector");
  if (horizon < 0) throw malformed_input("horizon must be non-negative");

  prelim_result res;
  witness_report& rep = res.report;
  rep.claim = "escalation scan";

  const int top = s.block_of(*x.max_index());
  const dyadic total = norm_l1(x);

  int l0 = -1;
  for (int l = 0; l <= top; ++l) {
    if (norm_l1(project(x, l, s)) >= dyadic::pow2(-(std::int64_t{l} + 1)) * total) {
      l0 = l;
      break;
    }
  }
  // Existence is forced: the geometric weights sum below 1.
  res.l0 = l0;
  rep.require("some block carries its geometric share of the mass",
              "block " + std::to_string(l0), ">=",
              "2^-(l+1) of ||x||", l0 >= 0);

  operator_t op(s);
  int current = l0;
  while (true) {
    std::vector<int> higher;
    for (int l = current + 1; l <= top; ++l) {
      if (!project(x, l, s).is_zero()) higher.push_back(l);
    }
    if (higher.empty()) {
      res.certified = true;
      res.certificate =
          "no block above " + std::to_string(current) +
          " carries mass; the leak series is identically zero";
      break;
    }

    const dyadic x_mass = norm_l1(weighted_x(x, current, s));
    const dyadic leak_threshold = x_mass * dyadic::pow2(-2);

    // The leak statistic adds the per-block norms (no cross-block
    // cancellation), so each high block's orbit is tracked separately.
    std::vector<sparse_vec> orbits;
    orbits.reserve(higher.size());
    for (const int l : higher) orbits.push_back(project(x, l, s));

    std::int64_t first_leak = -1;
    int next = -1;
    for (std::int64_t j = 0; j <= horizon && first_leak < 0; ++j) {
      dyadic leak;
      for (const sparse_vec& y : orbits) {
        leak = leak + norm_l1(project(y, current, s));
      }
      if (leak > leak_threshold) {
        first_leak = j;
        for (std::size_t i = 0; i < orbits.size(); ++i) {
          const dyadic contribution = norm_l1(project(orbits[i], current, s));
          const dyadic slice =
              x_mass * dyadic::pow2(std::int64_t{current} - higher[i] - 2);
          if (contribution > slice) {
            next = higher[i];
            break;
          }
        }
        break;
      }
      if (j < horizon) {
        for (sparse_vec& y : orbits) y = op.apply(y);
      }
    }
    if (first_leak < 0) {
      res.certified = true;
      res.certificate = "leakage into block " + std::to_string(current) +
                        " stayed at or below a quarter of the weighted mass "
                        "for the whole horizon";
      break;
    }

    rep.require("leak at step " + std::to_string(first_leak) +
                    " is pinned to a responsible block",
                next < 0 ? "none" : "block " + std::to_string(next), ">",
                "its geometric slice", next > current);
    if (next < 0) break;  // cannot happen; the pigeonhole above is exact
    res.escalation.emplace_back(first_leak, next);
    current = next;
  }

  nlohmann::json esc = nlohmann::json::array();
  for (const auto& [j, l] : res.escalation) {
    esc.push_back(nlohmann::json::array({j, l}));
  }
  rep.objects = nlohmann::json{{"l0", res.l0},
                               {"top_block", top},
                               {"escalation", std::move(esc)},
                               {"certified", res.certified},
                               {"certificate", res.certificate},
                               {"horizon", horizon}};
  rep.require("escalation terminates with a certificate", res.certificate,
              "!=", "", res.certified);
  return res;
}

cool_result cool_certificate(const sparse_vec& x, std::int64_t horizon,
                             const schedule& s) {
  if (x.is_zero()) throw malformed_input("the certificate needs a non-zero vector");
  if (horizon < 0) throw malformed_input("horizon must be non-negative");

  cool_result res;
  witness_report& rep = res.report;
  rep.claim = "per-vector recurrence certificate";

  res.top_block = s.block_of(*x.max_index());
  res.threshold = norm_l1(weighted_x(x, res.top_block, s)) * dyadic::pow2(-2);
  const std::int64_t gap = s.b(res.top_block + 1) - s.b(res.top_block);
  const std::int64_t dl = s.delta(res.top_block);

  operator_t op(s);
  sparse_vec y = x;
  for (std::int64_t j = 0; j <= horizon; ++j) {
    if (norm_l1(y) >= res.threshold) ++res.count;
    if (j < horizon) y = op.apply(y);
  }
  res.fraction = rational(res.count, horizon + 1);
  res.bound = rational(1) - rational(2 * dl, horizon + 1) - rational(2 * dl, gap);

  rep.objects = nlohmann::json{{"top_block", res.top_block},
                               {"threshold", dyadic_to_json(res.threshold)},
                               {"count", res.count},
                               {"horizon", horizon},
                               {"fraction", rational_str(res.fraction)},
                               {"bound", rational_str(res.bound)}};
  rep.require(
      "orbit clears a quarter of the weighted mass on the exclusion-bound fraction",
      rational_str(res.fraction), ">=", rational_str(res.bound),
      res.fraction >= res.bound);
  return res;
}

}  // namespace chaoslab
