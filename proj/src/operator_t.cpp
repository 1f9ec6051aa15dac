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

#include "chaoslab/operator_t.hpp"

#include <algorithm>
#include <vector>

#include "chaoslab/errors.hpp"

namespace chaoslab {

operator_t::operator_t(schedule s) : sched_(std::move(s)) {
  if (!sched_.validate().all_pass()) {
    throw malformed_input(
        "schedule fails its validity conditions; refusing to build the operator");
  }
}

void operator_t::guard_support(const sparse_vec& v) const {
  if (v.support_size() > support_cap_) {
    throw resource_limit("vector support exceeded the configured cap");
  }
}

sparse_vec operator_t::apply(const sparse_vec& v) const {
  sparse_vec out;
  for (const auto& [k, c] : v.entries()) {
    const int n = sched_.block_of(k);
    const std::int64_t bn = sched_.b(n);
    const std::int64_t bn1 = sched_.b(n + 1);
    if (k < bn + sched_.delta(n)) {
      out.accumulate(k + 1, c * dyadic(2));
    } else if (k < bn1 - 1) {
      out.accumulate(k + 1, c);
    } else if (n == 0) {
      out.accumulate(0, -c);
    } else {
      out.accumulate(sched_.b(static_cast<int>(sched_.phi(n))),
                     c * dyadic::pow2(-sched_.tau(n)));
      out.accumulate(bn, -(c * dyadic::pow2(-sched_.delta(n))));
    }
  }
  guard_support(out);
  return out;
}

sparse_vec operator_t::apply_power_naive(const sparse_vec& v, std::int64_t j) const {
  if (j < 0) throw malformed_input("iteration count must be non-negative");
  sparse_vec out = v;
  for (std::int64_t i = 0; i < j; ++i) out = apply(out);
  return out;
}

sparse_vec operator_t::apply_power(const sparse_vec& v, const bigint& j) const {
  if (j < 0) throw malformed_input("iteration count must be non-negative");
  sparse_vec out;
  for (const auto& [k, c] : v.entries()) {
    const int n = sched_.block_of(k);
    const bigint period(sched_.block_period(n));
    const auto jr = static_cast<std::int64_t>(j % period);
    const sparse_vec part = basis_power(k, jr);
    for (const auto& [i, w] : part.entries()) out.accumulate(i, w * c);
    guard_support(out);
  }
  return out;
}

sparse_vec operator_t::basis_power(std::int64_t k, std::int64_t j) const {
  using key_t = std::pair<std::int64_t, std::int64_t>;
  const key_t root{k, j};
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (auto it = memo_.find(root); it != memo_.end()) return it->second;
  }

  // Overflow storage once the shared memo is full; lookups consult both.
  std::map<key_t, sparse_vec> local;
  auto lookup = [&](const key_t& key) -> const sparse_vec* {
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return &it->second;
    }
    if (auto it = local.find(key); it != local.end()) return &it->second;
    return nullptr;
  };
  auto store = [&](const key_t& key, sparse_vec value) {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_.size() < memo_cap_) {
      memo_.emplace(key, std::move(value));
    } else {
      local.emplace(key, std::move(value));
    }
  };

  // Iterative post-order resolution: a frame is computable once the frames
  // it wraps into are done. Children always have a strictly smaller
  // (block, reduced exponent) measure, so this terminates.
  std::vector<key_t> stack{root};
  while (!stack.empty()) {
    const auto [k0, j0] = stack.back();
    if (lookup({k0, j0}) != nullptr) {
      stack.pop_back();
      continue;
    }
    const int n = sched_.block_of(k0);
    const std::int64_t bn = sched_.b(n);
    const std::int64_t wrap_distance = sched_.b(n + 1) - k0;

    if (j0 < wrap_distance) {
      // Stays inside the block: a single shifted entry, doubled once for
      // each traversed index of the doubling segment.
      const std::int64_t off = k0 - bn;
      const std::int64_t dn = sched_.delta(n);
      const std::int64_t w = off >= dn ? 0 : std::min(j0, dn - off);
      store({k0, j0}, sparse_vec::basis(k0 + j0, dyadic::pow2(w)));
      stack.pop_back();
      continue;
    }

    const std::int64_t j_rem = j0 - wrap_distance;
    if (n == 0) {
      const key_t child{0, j_rem};
      if (const sparse_vec* cv = lookup(child)) {
        store({k0, j0}, -(*cv));
        stack.pop_back();
      } else {
        stack.push_back(child);
      }
      continue;
    }

    const std::int64_t dn = sched_.delta(n);
    const std::int64_t off = k0 - bn;
    const std::int64_t jk = off >= dn ? 0 : dn - off;  // doublings before the wrap
    const int target = static_cast<int>(sched_.phi(n));
    const key_t c1{sched_.b(target), j_rem % sched_.block_period(target)};
    const key_t c2{bn, j_rem};
    const sparse_vec* v1 = lookup(c1);
    const sparse_vec* v2 = lookup(c2);
    if (v1 != nullptr && v2 != nullptr) {
      sparse_vec value = v1->scaled(dyadic::pow2(jk - sched_.tau(n))) +
                         v2->scaled(-dyadic::pow2(jk - dn));
      guard_support(value);
      store({k0, j0}, std::move(value));
      stack.pop_back();
    } else {
      if (v1 == nullptr) stack.push_back(c1);
      if (v2 == nullptr) stack.push_back(c2);
    }
  }

  const sparse_vec* result = lookup(root);
  return *result;
}

std::int64_t period_of(const sparse_vec& v, const schedule& s) {
  const auto top = v.max_index();
  if (!top) return 1;  // the zero vector is a fixed point
  return s.block_period(s.block_of(*top));
}

}  // namespace chaoslab
