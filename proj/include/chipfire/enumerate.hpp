// Copyright 2026 The chipfire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHIPFIRE_ENUMERATE_HPP_
#define CHIPFIRE_ENUMERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chipfire/checked.hpp"

namespace chipfire {

// Number of effective divisors of degree k on n vertices: C(n + k - 1, k).
inline std::uint64_t effective_count(std::size_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  return saturating_binomial(n + static_cast<std::uint64_t>(k) - 1,
                             static_cast<std::uint64_t>(k));
}

namespace detail {

template <typename Fn>
bool enumerate_from(std::vector<std::int64_t>& e, std::size_t pos,
                    std::int64_t remaining, Fn& fn) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    const bool go_on = fn(static_cast<const std::vector<std::int64_t>&>(e));
    e[pos] = 0;
    return go_on;
  }
  for (std::int64_t x = 0; x <= remaining; ++x) {
    e[pos] = x;
    if (!enumerate_from(e, pos + 1, remaining - x, fn)) {
      e[pos] = 0;
      return false;
    }
  }
  e[pos] = 0;
  return true;
}

}  // namespace detail

// Visits every effective vector of length n and sum k in ascending
// lexicographic order: (0,..,0,k) first, (k,0,..,0) last. Stops early when
// `fn` returns false; returns false in that case.
template <typename Fn>
bool for_each_effective(std::size_t n, std::int64_t k, Fn fn) {
  if (k < 0) return true;
  if (n == 0) {
    if (k != 0) return true;
    std::vector<std::int64_t> empty;
    return fn(static_cast<const std::vector<std::int64_t>&>(empty));
  }
  std::vector<std::int64_t> e(n, 0);
  return detail::enumerate_from(e, 0, k, fn);
}

}  // namespace chipfire

#endif  // CHIPFIRE_ENUMERATE_HPP_
