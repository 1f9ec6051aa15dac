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

#ifndef CHAOSLAB_SUITES_HPP
#define CHAOSLAB_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chaoslab/dyadic.hpp"
#include "chaoslab/schedule.hpp"
#include "chaoslab/seqspace.hpp"

namespace chaoslab {

/// Outcome of one property suite: how many cases ran, whether all held, and
/// either a summary or the first failing case.
struct suite_result {
  std::string name;
  std::int64_t cases = 0;
  bool pass = true;
  std::string detail;
};

/// Random non-zero dyadic with an odd mantissa in [1, 511], an exponent in
/// [-6, 6] and a random sign.
dyadic random_dyadic(std::mt19937_64& rng);

/// Random vector with 1..max_support entries at indices inside block `block`.
sparse_vec random_vec_in_block(std::mt19937_64& rng, const schedule& s, int block,
                               int max_support);

/// Random vector with 1..max_support entries at indices in [0, index_bound).
sparse_vec random_vec_below(std::mt19937_64& rng, std::int64_t index_bound,
                            int max_support);

/// Exact periodicity of basis orbits: apply_power(e_k, block period) == e_k,
/// exhaustively for k below the largest block start <= 2048 (capped by the
/// prefix), plus `samples_per_block` sampled k in each remaining block below
/// the prefix. Also checks the half-period sign flip in block 0.
suite_result periodicity_suite(const schedule& s, std::uint64_t seed,
                               int samples_per_block);

/// Fast power against literal iteration: `trials` random vectors (support
/// <= 8, indices below block 4 or the prefix end), every exponent j in
/// [0, max_exp], exact equality.
suite_result power_oracle_suite(const schedule& s, std::uint64_t seed, int trials,
                                std::int64_t max_exp);

/// max_k ||T e_k||_1 over k < index_bound is exactly 2.
suite_result operator_norm_suite(const schedule& s, std::int64_t index_bound);

/// Cross-block leakage bound on random block-l vectors, all pairs n < l for
/// l in [1, max_block].
suite_result fhc0_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block);

/// Early-window leakage bound, same corpus shape as fhc0_suite.
suite_result fhc1_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block);

/// In-block recurrence fraction, exhaustive over every scan end
/// k in [0, 4 * period], for random block-l vectors, l in [0, max_block].
suite_result fhc2_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block);

/// Orbit-threshold certificate on random vectors with top block <= max_block
/// at horizon 8 * period of the top block.
suite_result cool_suite(const schedule& s, std::uint64_t seed, int trials,
                        int max_block);

/// Runs the named claim suite ("periodicity", "fhc0", "fhc1", "fhc2",
/// "cool") or every suite ("all"); throws malformed_input for unknown names.
std::vector<suite_result> run_claim_suites(const schedule& s, const std::string& claim,
                                           std::uint64_t seed, int trials);

}  // namespace chaoslab

#endif  // CHAOSLAB_SUITES_HPP
