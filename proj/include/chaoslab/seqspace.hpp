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

#ifndef CHAOSLAB_SEQSPACE_HPP
#define CHAOSLAB_SEQSPACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chaoslab/dyadic.hpp"

namespace chaoslab {

class schedule;

/// Finitely supported sequence with exact dyadic coefficients. Stored
/// coefficients are never zero and indices are non-negative; equality is
/// entry-wise.
class sparse_vec {
 public:
  sparse_vec() = default;

  static sparse_vec basis(std::int64_t index, dyadic coeff = dyadic(1));

  const std::map<std::int64_t, dyadic>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t support_size() const noexcept { return entries_.size(); }
  std::optional<std::int64_t> max_index() const;

  dyadic coeff(std::int64_t index) const;
  void set(std::int64_t index, dyadic value);
  void accumulate(std::int64_t index, const dyadic& delta);

  sparse_vec scaled(const dyadic& factor) const;
  sparse_vec operator-() const;

  friend sparse_vec operator+(const sparse_vec& a, const sparse_vec& b);
  friend sparse_vec operator-(const sparse_vec& a, const sparse_vec& b);
  friend bool operator==(const sparse_vec& a, const sparse_vec& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const sparse_vec& a, const sparse_vec& b) {
    return !(a == b);
  }

 private:
  std::map<std::int64_t, dyadic> entries_;
};

/// Norm selector: l1, lp (p >= 1) or sup.
struct norm_kind {
  enum class tag_t { l1, lp, sup };
  tag_t tag = tag_t::l1;
  int p = 1;

  static norm_kind l1() noexcept { return {tag_t::l1, 1}; }
  static norm_kind lp(int p);
  static norm_kind sup() noexcept { return {tag_t::sup, 1}; }
};

/// Exact norm result. For lp the stored value is the p-th power of the norm
/// (the p-th root is generally irrational) and `power` records p; l1 and sup
/// carry power = 1. Comparisons are only defined between equal powers.
struct norm_value {
  dyadic value;
  int power = 1;
};

norm_value norm(const sparse_vec& v, const norm_kind& kind);
dyadic norm_l1(const sparse_vec& v);
dyadic norm_sup(const sparse_vec& v);

/// Total order on norm values of equal power; throws malformed_input when
/// the powers disagree.
int compare(const norm_value& a, const norm_value& b);
/// Compares a with c * b, raising the scalar to the shared power.
int compare_scaled(const norm_value& a, const dyadic& c, const norm_value& b);

/// |coefficients| of v in decreasing order of magnitude.
std::vector<dyadic> abs_terms_desc(const sparse_vec& v);

/// Exact trichotomy of sum(terms) against `bound` for non-negative terms,
/// without materializing sums whose binary scales are astronomically far
/// apart. `terms` must be sorted in decreasing order of magnitude.
int compare_sum_to(const std::vector<dyadic>& terms_desc, const dyadic& bound);
/// Same, for the l1 norm of v.
int compare_abs_sum(const sparse_vec& v, const dyadic& bound);

/// Materializes sum(terms) when the binary spread of the terms stays below
/// max_spread_bits; otherwise returns nullopt.
std::optional<dyadic> try_sum(const std::vector<dyadic>& terms_desc,
                              std::int64_t max_spread_bits);

/// "a + b + c" rendering of an exact sum (terms in the given order).
std::string sum_string(const std::vector<dyadic>& terms);

/// Exact scalar for reports: a materialized single value when cheap, an
/// explicit sum of dyadic terms otherwise.
std::string exact_sum_repr(const std::vector<dyadic>& terms_desc);

/// Restriction of v to block n, i.e. to indices in [b_n, b_{n+1}).
sparse_vec project(const sparse_vec& v, int block, const schedule& s);

/// Block-n coordinates scaled by their remaining doubling factors
/// 2^{max(0, delta_n - (k - b_n))}; the weighted block vector that the
/// lower-bound arguments run on.
sparse_vec weighted_x(const sparse_vec& v, int block, const schedule& s);

}  // namespace chaoslab

#endif  // CHAOSLAB_SEQSPACE_HPP
