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

#ifndef CHAOSLAB_VERIFY_HPP
#define CHAOSLAB_VERIFY_HPP

#include <cstdint>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "chaoslab/density.hpp"
#include "chaoslab/dyadic.hpp"
#include "chaoslab/operator_t.hpp"
#include "chaoslab/schedule.hpp"
#include "chaoslab/seqspace.hpp"

namespace chaoslab {

/// One exactly evaluated inequality (or equality) inside a report. The two
/// sides are exact scalar renderings; `holds` is the verdict of the exact
/// comparison, never of the rendered strings.
struct checked_inequality {
  std::string description;
  std::string lhs;
  std::string relation;
  std::string rhs;
  bool holds = false;
};

/// Everything a checker did: the constructed objects (exact, JSON-ready) and
/// every inequality it claims, individually evaluated.
struct witness_report {
  std::string claim;
  nlohmann::json objects = nlohmann::json::object();
  std::vector<checked_inequality> inequalities;

  bool all_hold() const;
  void require(std::string description, std::string lhs, std::string relation,
               std::string rhs, bool holds);
};

/// Single-coordinate approximation witness: a scaled far-block basis vector
/// that an admissible iterate maps onto the target coordinate with an
/// exponentially small residue, the iterate being constrained to a residue
/// class M mod N.
struct hyp0_result {
  std::int64_t m = 0;         // witness basis index
  std::int64_t t = 0;         // witness block
  std::int64_t s_exp = 0;     // smallness exponent: |x_k| < eps 2^{-s}... (see report)
  std::int64_t r = 0;         // residue correction inside [0, N)
  std::int64_t l = 0;         // exponent = l N + M
  std::int64_t j_weight = 0;  // doublings absorbed between b_n and k
  std::int64_t exponent = 0;  // the admissible iterate
  dyadic z;                   // witness coefficient
  dyadic residual;            // exact l1 distance after the iterate
  witness_report report;
};

hyp0_result hyp0_witness(const dyadic& eps, std::int64_t k, std::int64_t N,
                         std::int64_t M, const dyadic& xk, const schedule& s);

/// Chained approximation: perturbation z and iterate count n with
/// T^n(y + z) within eps of x while n is a multiple of y's period.
struct transitivity_result {
  sparse_vec z;
  bigint n;
  std::vector<hyp0_result> steps;
  witness_report report;
};

transitivity_result transitivity_witness(const sparse_vec& y, const sparse_vec& x,
                                         const dyadic& eps, const schedule& s);

/// Return-time witness: a single perturbation whose orbit re-enters the
/// radius-ball around the center along an arithmetic progression of depth+1
/// iterates, step = the center's period.
struct reiterative_result {
  sparse_vec y;
  bigint kstar;
  std::int64_t step = 0;
  std::vector<std::int64_t> hits;
  witness_report report;
};

reiterative_result reiterative_witness(const sparse_vec& center, const dyadic& radius,
                                       int depth, const schedule& s);

/// Leakage bound: sup_j ||P_n T^j P_l x|| <= 2^{-2(l+1)} ||X_l|| for n < l,
/// the sup scanned exactly over one period.
witness_report fhc0_check(const sparse_vec& x, int n, int l, const schedule& s);

/// Early-window bound: max_{0 <= j <= (b_{l+1}-b_l) - delta_l}
/// ||P_n T^j P_l x|| <= 2^{-2(l+1)} ||P_l x|| for n < l.
witness_report fhc1_check(const sparse_vec& x, int n, int l, const schedule& s);

/// In-block recurrence count: the fraction of j in [0, k] with
/// ||P_l T^j P_l x|| >= ||X_l|| / 2 against the exclusion bound
/// 1 - 2 delta_l/(k+1) - 2 delta_l/(b_{l+1}-b_l).
witness_report fhc2_fraction(const sparse_vec& x, int l, std::int64_t k,
                             const schedule& s);

/// The sub-threshold instants of block l with offset i, as explicit
/// half-open intervals (wrapping at the block boundary splits them in two).
struct exclusion_set {
  int block = 0;
  std::int64_t offset = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> intervals;  // [begin, end)
  std::int64_t total_length() const;
};

exclusion_set exclusion_intervals(int l, std::int64_t i, const schedule& s);

/// Escalation scan: starting from the first block carrying at least
/// 2^{-(l+1)} of the mass, finds when higher-block content leaks back,
/// escalates to the responsible block, and certifies termination when
/// nothing leaks (empty range or quiet horizon).
struct prelim_result {
  int l0 = 0;
  std::vector<std::pair<std::int64_t, int>> escalation;  // (first leak j, next block)
  bool certified = false;
  std::string certificate;
  witness_report report;
};

prelim_result prelim_scan(const sparse_vec& x, std::int64_t horizon, const schedule& s);

/// Per-vector recurrence certificate: the orbit of x clears the threshold
/// ||X_n|| / 4 on at least the exclusion-bound fraction of any scan window,
/// which is what rules out the vanishing-frequency half of distributional
/// chaos for this vector.
struct cool_result {
  int top_block = 0;
  dyadic threshold;
  std::int64_t count = 0;
  rational fraction;
  rational bound;
  witness_report report;
};

cool_result cool_certificate(const sparse_vec& x, std::int64_t horizon,
                             const schedule& s);

}  // namespace chaoslab

#endif  // CHAOSLAB_VERIFY_HPP
