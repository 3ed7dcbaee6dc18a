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

#ifndef CHIPFIRE_RANK_HPP_
#define CHIPFIRE_RANK_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chipfire/checked.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/enumerate.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

enum class RankMethod { kExhaustive, kRankExplicit, kReducedNegative, kFormula };

inline std::string_view to_string(RankMethod m) {
  switch (m) {
    case RankMethod::kExhaustive:
      return "exhaustive";
    case RankMethod::kRankExplicit:
      return "rank-explicit";
    case RankMethod::kReducedNegative:
      return "reduced-negative";
    case RankMethod::kFormula:
      return "formula";
  }
  return "unknown";
}

// `witness` is an effective divisor on the hat graph (the graph itself when it
// is weightless and loopless) of degree rank + 1 whose removal leaves a class
// with no effective representative.
struct RankResult {
  std::int64_t rank = -1;
  std::optional<Divisor> witness;
  RankMethod method = RankMethod::kExhaustive;
};

inline constexpr std::uint64_t kDefaultRankBudget = 10'000'000;

struct RankOptions {
  // Maximum number of reductions the search may perform.
  std::uint64_t budget = kDefaultRankBudget;
  bool fast_paths = true;
  // Lets the search accept r(d) >= |d| - g without enumerating.
  bool degree_bound = true;
};

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace detail

// Memoized rank search on a weightless loopless graph.
//
// Uses r(d) >= k  <=>  r(d - v) >= k - 1 for every vertex v (k >= 1), which
// is the definition unrolled one chip at a time. States are base-reduced
// representatives, so equivalent divisors share one memo entry.
//
// Bounds seeded on every new state:
//   r(d) <= (v-reduced d)(v) for every v, since subtracting one more chip
//     than that at v leaves a v-reduced divisor negative at v;
//   r(d) >= |d| - g when `degree_bound` is set, since every divisor of
//     degree >= g is equivalent to an effective one.
// The second bound only shortcuts the "holds" side; every "fails" answer
// still comes from an explicit chain of subtractions.
//
// `twins` lists groups of vertices that are interchangeable by a graph
// automorphism fixing the base (the midpoint vertices of one rose in a hat
// graph). States are canonicalized by sorting each group.
class RankSearch {
 public:
  RankSearch(Graph g, std::vector<std::vector<VertexIndex>> twins,
             std::uint64_t budget, bool degree_bound = true)
      : genus_(genus(g)),
        twins_(std::move(twins)),
        budget_(budget),
        degree_bound_(degree_bound) {
    std::vector<char> skip(g.vertex_count(), 0);
    for (const auto& group : twins_) {
      for (std::size_t i = 1; i < group.size(); ++i) skip[group[i]] = 1;
    }
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (!skip[v]) reducers_.emplace_back(g, v);
    }
  }

  const Graph& graph() const { return reducers_.front().graph(); }
  std::uint64_t evaluations() const { return evaluations_; }

  std::int64_t rank(std::vector<std::int64_t> d) {
    reduce(d);
    canonicalize(d);
    std::int64_t k = bounds(d).lo;
    while (at_least(d, k + 1)) ++k;
    return k;
  }

  // Greedy failing divisor: repeatedly subtract the first vertex that drops
  // the rank by one.
  std::vector<std::int64_t> witness(std::vector<std::int64_t> d) {
    const std::size_t n = graph().vertex_count();
    std::vector<std::int64_t> e(n, 0);
    reduce(d);
    std::int64_t r = rank(d);
    while (r >= 0) {
      bool stepped = false;
      for (VertexIndex v = 0; v < n && !stepped; ++v) {
        std::vector<std::int64_t> child = d;
        child[v] = checked_sub(child[v], 1);
        reduce(child);
        if (rank(child) == r - 1) {
          e[v] += 1;
          d = std::move(child);
          --r;
          stepped = true;
        }
      }
      if (!stepped) throw InternalError("rank witness: no vertex lowers the rank");
    }
    return e;
  }

 private:
  struct Bounds {
    std::int64_t lo;
    std::int64_t hi;
  };

  void count() {
    if (++evaluations_ > budget_) {
      throw BudgetExceededError("rank search", evaluations_, budget_);
    }
  }

  void reduce(std::vector<std::int64_t>& d) {
    count();
    reducers_.front().reduce_in_place(d, nullptr);
  }

  void canonicalize(std::vector<std::int64_t>& d) const {
    for (const auto& group : twins_) {
      std::vector<std::int64_t> vals;
      vals.reserve(group.size());
      for (VertexIndex z : group) vals.push_back(d[z]);
      std::sort(vals.begin(), vals.end(), std::greater<>());
      for (std::size_t i = 0; i < group.size(); ++i) d[group[i]] = vals[i];
    }
  }

  Bounds& bounds(const std::vector<std::int64_t>& state) {
    auto it = memo_.find(state);
    if (it != memo_.end()) return it->second;
    Bounds b{-1, -1};
    if (state[0] >= 0) {
      b = {0, state[0]};
      for (std::size_t i = 1; i < reducers_.size() && b.hi > 0; ++i) {
        std::vector<std::int64_t> other = state;
        count();
        reducers_[i].reduce_in_place(other, nullptr);
        b.hi = std::min(b.hi, other[reducers_[i].base()]);
      }
      if (degree_bound_) {
        std::int64_t degree = 0;
        for (std::int64_t x : state) degree = checked_add(degree, x);
        b.lo = std::max(b.lo, degree - genus_);
      }
      if (b.lo > b.hi) throw InternalError("rank search: inconsistent bounds");
    }
    return memo_.emplace(state, b).first->second;
  }

  bool at_least(const std::vector<std::int64_t>& state, std::int64_t k) {
    {
      const Bounds& b = bounds(state);
      if (k <= b.lo) return true;
      if (k > b.hi) return false;
    }
    // Here 1 <= k <= state[0]. Seed every child first so a child whose upper
    // bound already fails ends the scan before any deep recursion.
    // Children closest to failing go first.
    const std::size_t n = state.size();
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> open;
    for (VertexIndex v = 0; v < n; ++v) {
      std::vector<std::int64_t> child = state;
      child[v] = checked_sub(child[v], 1);
      reduce(child);
      canonicalize(child);
      const Bounds& cb = bounds(child);
      if (k - 1 > cb.hi) {
        bounds(state).hi = k - 1;
        return false;
      }
      if (k - 1 > cb.lo) open.emplace_back(cb.hi, std::move(child));
    }
    std::stable_sort(open.begin(), open.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [hi, child] : open) {
      if (!at_least(child, k - 1)) {
        bounds(state).hi = k - 1;
        return false;
      }
    }
    bounds(state).lo = k;
    return true;
  }

  std::int64_t genus_;
  std::vector<Reducer> reducers_;
  std::vector<std::vector<VertexIndex>> twins_;
  std::uint64_t budget_;
  bool degree_bound_;
  std::uint64_t evaluations_ = 0;
  std::unordered_map<std::vector<std::int64_t>, Bounds, detail::VectorHash> memo_;
};

namespace detail {

inline void require_connected_nonempty(const Graph& g, const char* op) {
  if (!g.is_connected()) throw DisconnectedGraphError(op);
  if (g.vertex_count() == 0) throw InvalidArgumentError(std::string(op) + ": empty graph");
}

inline void require_simple_weights(const Graph& g, const char* op) {
  if (!g.is_weightless() || !g.is_loopless()) {
    throw InvalidArgumentError(std::string(op) +
                               ": graph must be weightless and loopless");
  }
}

// True when `e` (on the hat graph) certifies rank(d) < |e|.
inline bool certifies(const Graph& hat, const Divisor& hat_d, const Divisor& e) {
  if (!e.is_effective()) return false;
  std::vector<std::int64_t> rest = (hat_d - e).values();
  Reducer(hat, 0).reduce_in_place(rest, nullptr);
  return rest[0] < 0;
}

}  // namespace detail

struct RankGeq {
  bool holds = true;
  std::optional<Divisor> witness;

  explicit operator bool() const { return holds; }
};

// Does every effective e of degree k leave d - e equivalent to an effective
// divisor? Enumerates e in ascending lexicographic order and reports the
// first failure. One reduction per e at the first vertex decides it.
inline RankGeq rank_geq(const Graph& g, const Divisor& d, std::int64_t k,
                        std::uint64_t budget = kDefaultRankBudget) {
  detail::require_connected_nonempty(g, "rank_geq");
  detail::require_simple_weights(g, "rank_geq");
  if (!d.bound_to(g)) throw GraphMismatchError("rank_geq");
  if (k < 0) throw InvalidArgumentError("rank_geq: negative degree");
  const std::uint64_t count = effective_count(g.vertex_count(), k);
  if (count > budget) throw BudgetExceededError("rank_geq", count, budget);
  Reducer reducer(g, 0);
  RankGeq out;
  for_each_effective(g.vertex_count(), k, [&](const std::vector<std::int64_t>& e) {
    std::vector<std::int64_t> rest = d.values();
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = checked_sub(rest[i], e[i]);
    reducer.reduce_in_place(rest, nullptr);
    if (rest[0] >= 0) return true;
    out.holds = false;
    out.witness = Divisor(g, e);
    return false;
  });
  return out;
}

// Whether d is u-reduced at a vertex u with d_rk(u) = ell(d); returns the
// first such u. Non-effective divisors qualify only when reduced and negative
// at u (rank -1 read off directly).
inline std::optional<VertexIndex> is_rank_explicit(const Graph& g, const Divisor& d) {
  detail::require_connected_nonempty(g, "is_rank_explicit");
  if (!d.bound_to(g)) throw GraphMismatchError("is_rank_explicit");
  if (!d.is_effective()) {
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
      if (d[u] < 0 && is_reduced(g, d, u)) return u;
    }
    return std::nullopt;
  }
  const std::int64_t lower = ell(g, d);
  const Divisor rk = d_rk(g, d);
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    if (rk[u] == lower && is_reduced(g, d, u)) return u;
  }
  return std::nullopt;
}

namespace detail {

inline RankSearch make_search(const HatEmbedding& emb, const RankOptions& opts) {
  return RankSearch(emb.target, emb.added_vertices, opts.budget, opts.degree_bound);
}

// Failing divisor for a rank-explicit d at u: j midpoints of R_u and the rest
// of the degree at u itself, j = min(g(u), ell + 1).
inline Divisor explicit_witness(const HatEmbedding& emb, VertexIndex u,
                                std::int64_t lower) {
  Divisor e(emb.target);
  const auto& zs = emb.added_vertices[u];
  const std::int64_t j = std::min<std::int64_t>(
      static_cast<std::int64_t>(zs.size()), lower + 1);
  for (std::int64_t k = 0; k < j; ++k) e[zs[static_cast<std::size_t>(k)]] = 1;
  e[u] = lower + 1 - j;
  return e;
}

}  // namespace detail

// Combinatorial rank of d, computed on the hat graph.
inline RankResult rank(const Graph& g, const Divisor& d, const RankOptions& opts = {}) {
  detail::require_connected_nonempty(g, "rank");
  if (!d.bound_to(g)) throw GraphMismatchError("rank");
  const HatEmbedding emb = hat_graph(g);
  const Divisor hat_d = hat_divisor(emb, d);
  RankResult out;

  if (opts.fast_paths) {
    std::vector<std::int64_t> reduced = hat_d.values();
    Reducer(emb.target, 0).reduce_in_place(reduced, nullptr);
    if (reduced[0] < 0) {
      out = {-1, Divisor(emb.target), RankMethod::kReducedNegative};
    } else if (d.is_effective()) {
      if (auto u = is_rank_explicit(g, d)) {
        const std::int64_t lower = ell(g, d);
        Divisor e = detail::explicit_witness(emb, *u, lower);
        if (!detail::certifies(emb.target, hat_d, e)) {
          auto search = detail::make_search(emb, opts);
          e = Divisor(emb.target, search.witness(hat_d.values()));
        }
        out = {lower, std::move(e), RankMethod::kRankExplicit};
      }
    }
  }

  if (!out.witness) {
    auto search = detail::make_search(emb, opts);
    const std::int64_t r = search.rank(hat_d.values());
    out = {r, Divisor(emb.target, search.witness(hat_d.values())),
           RankMethod::kExhaustive};
  }

  if (out.witness->degree() != out.rank + 1 ||
      !detail::certifies(emb.target, hat_d, *out.witness)) {
    throw InternalError("rank: witness failed certification");
  }
  return out;
}

// Rank by the literal definition on the hat graph: largest k for which
// rank_geq holds, scanning k = 0, 1, ... up to |d|.
inline RankResult rank_by_enumeration(const Graph& g, const Divisor& d,
                                      std::uint64_t budget = kDefaultRankBudget) {
  detail::require_connected_nonempty(g, "rank_by_enumeration");
  if (!d.bound_to(g)) throw GraphMismatchError("rank_by_enumeration");
  const HatEmbedding emb = hat_graph(g);
  const Divisor hat_d = hat_divisor(emb, d);
  RankResult out{-1, std::nullopt, RankMethod::kExhaustive};
  const std::int64_t cap = std::max<std::int64_t>(0, d.degree()) + 1;
  for (std::int64_t k = 0; k <= cap; ++k) {
    RankGeq step = rank_geq(emb.target, hat_d, k, budget);
    if (!step) {
      out.witness = std::move(step.witness);
      return out;
    }
    out.rank = k;
  }
  throw InternalError("rank_by_enumeration: rank exceeds degree");
}

// For every effective e of degree r on V(G), is d - e^deg equivalent to an
// effective divisor? A true answer implies rank(d) >= r.
inline bool rank_lower_bound_certified(const Graph& g, const Divisor& d,
                                       std::int64_t r,
                                       std::uint64_t budget = kDefaultRankBudget) {
  detail::require_connected_nonempty(g, "rank_lower_bound_certified");
  if (!d.bound_to(g)) throw GraphMismatchError("rank_lower_bound_certified");
  if (r < 0) throw InvalidArgumentError("rank_lower_bound_certified: negative r");
  const std::uint64_t count = effective_count(g.vertex_count(), r);
  if (count > budget) throw BudgetExceededError("rank_lower_bound_certified", count, budget);
  Reducer reducer(g, 0);
  return for_each_effective(g.vertex_count(), r, [&](const std::vector<std::int64_t>& e) {
    const Divisor inflated = e_deg(g, Divisor(g, e));
    std::vector<std::int64_t> rest = (d - inflated).values();
    reducer.reduce_in_place(rest, nullptr);
    return rest[0] >= 0;
  });
}

namespace detail {

inline void check_saturation_preconditions(const Graph& g, const Divisor& d,
                                           VertexIndex u) {
  require_connected_nonempty(g, "saturation_bound");
  require_simple_weights(g, "saturation_bound");
  if (!d.bound_to(g)) throw GraphMismatchError("saturation_bound");
  if (!d.is_effective()) throw InvalidArgumentError("saturation_bound: divisor is not effective");
  if (d[u] != ell(g, d)) {
    throw InvalidArgumentError("saturation_bound: d(" + g.id(u) +
                               ") is not the minimum value of d");
  }
}

}  // namespace detail

// ell(d) + m for the recipe saturation at u; an upper bound for rank(d).
inline std::int64_t saturation_bound(const Graph& g, const Divisor& d, VertexIndex u) {
  detail::check_saturation_preconditions(g, d, u);
  return checked_add(ell(g, d), saturate(g, d, u).added_edges);
}

// Same bound with a caller-supplied saturation.
inline std::int64_t saturation_bound(const Graph& g, const Divisor& d, VertexIndex u,
                                     const Graph& saturation) {
  detail::check_saturation_preconditions(g, d, u);
  const std::int64_t m = saturation_edges(g, saturation, d, u);
  if (m < 0) throw InvalidArgumentError("saturation_bound: not a saturation of the graph");
  return checked_add(ell(g, d), m);
}

// r(d) - r(K - d) - (|d| - g + 1). Zero on every connected graph.
inline std::int64_t riemann_roch_residual(const Graph& g, const Divisor& d,
                                          const RankOptions& opts = {}) {
  detail::require_connected_nonempty(g, "riemann_roch_residual");
  const Divisor k = canonical_divisor(g);
  const std::int64_t r = rank(g, d, opts).rank;
  const std::int64_t r_dual = rank(g, k - d, opts).rank;
  return r - r_dual - (d.degree() - genus(g) + 1);
}

// r(d) <= floor(|d| / 2) whenever 0 <= |d| <= 2g - 2 and r(d) >= 0.
inline bool clifford_check(const Graph& g, const Divisor& d, const RankOptions& opts = {}) {
  detail::require_connected_nonempty(g, "clifford_check");
  const std::int64_t deg = d.degree();
  if (deg < 0 || deg > 2 * genus(g) - 2) return true;
  const std::int64_t r = rank(g, d, opts).rank;
  return r < 0 || r <= deg / 2;
}

// Rank of the class of (a, b) on two vertices joined by g + 1 edges.
// The class is {(a - n(g+1), b + n(g+1))}; it has an effective member iff the
// one with first entry in [0, g] does. Normalizing that member to x <= y:
// r = x when y <= g, and r = x + y - g otherwise.
inline std::int64_t binary_rank(std::int64_t g, std::int64_t a, std::int64_t b) {
  if (g < 0) throw InvalidArgumentError("binary_rank: negative genus");
  const std::int64_t period = checked_add(g, 1);
  const std::int64_t degree = checked_add(a, b);
  if (degree < 0) return -1;
  const std::int64_t first = ((a % period) + period) % period;
  const std::int64_t second = degree - first;
  if (second < 0) return -1;
  const std::int64_t x = std::min(first, second);
  const std::int64_t y = std::max(first, second);
  if (y <= g) return x;
  return x + y - g;
}

// (rank on G0, rank on G).
inline std::pair<std::int64_t, std::int64_t> g0_comparison(const Graph& g, const Divisor& d,
                                                           const RankOptions& opts = {}) {
  detail::require_connected_nonempty(g, "g0_comparison");
  const Graph g0 = simplify_g0(g);
  return {rank(g0, Divisor(g0, d.values()), opts).rank, rank(g, d, opts).rank};
}

// rank on G against rank of the extension by zero on G with loops subdivided.
inline bool bullet_rank_identity(const Graph& g, const Divisor& d,
                                 const RankOptions& opts = {}) {
  detail::require_connected_nonempty(g, "bullet_rank_identity");
  const BulletEmbedding emb = bullet_graph(g);
  Divisor lifted(emb.target);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) lifted[emb.correspondence[v]] = d[v];
  return rank(g, d, opts).rank == rank(emb.target, lifted, opts).rank;
}

}  // namespace chipfire

#endif  // CHIPFIRE_RANK_HPP_
