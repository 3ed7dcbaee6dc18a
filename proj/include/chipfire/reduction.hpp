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

#ifndef CHIPFIRE_REDUCTION_HPP_
#define CHIPFIRE_REDUCTION_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/checked.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"

// Reduced divisors and Dhar burning.
//
// Every routine here only looks at non-loop edges and ignores weights, so on a
// weighted or looped graph G the answers are those for G0. Prin(G) = Prin(G0),
// so reduced representatives are shared as well.

namespace chipfire {

// V = Y_0 ⊔ Y_1 ⊔ ... ⊔ Y_l ⊔ W, with Y_0 = {u}. Y_j is the set of vertices
// burned on day j of a fire started at u; W is what never burns.
struct DharDecomposition {
  std::vector<VertexSet> layers;
  VertexSet unburned;

  bool reduced() const { return unburned.empty(); }
};

namespace detail {

inline void require_connected(const Graph& g, const char* op) {
  if (!g.is_connected()) throw DisconnectedGraphError(op);
}

inline void require_effective_off(const Graph& g,
                                  const std::vector<std::int64_t>& d,
                                  VertexIndex u, const char* op) {
  for (VertexIndex v = 0; v < d.size(); ++v) {
    if (v != u && d[v] < 0) {
      throw InvalidArgumentError(std::string(op) + ": negative value at vertex '" +
                                 g.id(v) + "' away from the base vertex");
    }
  }
}

// Burns from u. `burned_edges[v]` counts edges from v into the burned region;
// a vertex burns on the day its chip count drops below that number.
inline DharDecomposition burn(const Graph& g, const std::vector<std::int64_t>& d,
                              VertexIndex u) {
  const std::size_t n = g.vertex_count();
  DharDecomposition out;
  VertexSet burned(n);
  std::vector<std::int64_t> burned_edges(n, 0);
  std::vector<VertexIndex> today{u};
  burned.insert(u);
  while (!today.empty()) {
    VertexSet layer(n);
    for (VertexIndex v : today) layer.insert(v);
    out.layers.push_back(std::move(layer));
    std::vector<VertexIndex> tomorrow;
    for (VertexIndex v : today) {
      for (auto [w, m] : g.neighbors(v)) {
        if (!burned.contains(w)) burned_edges[w] = checked_add(burned_edges[w], m);
      }
    }
    for (VertexIndex v : today) {
      for (auto [w, m] : g.neighbors(v)) {
        if (!burned.contains(w) && d[w] < burned_edges[w]) {
          burned.insert(w);
          tomorrow.push_back(w);
        }
      }
    }
    std::sort(tomorrow.begin(), tomorrow.end());
    today = std::move(tomorrow);
  }
  out.unburned = burned.complement();
  return out;
}

}  // namespace detail

inline DharDecomposition dhar(const Graph& g, const Divisor& d, VertexIndex u) {
  if (!d.bound_to(g)) throw GraphMismatchError("dhar");
  detail::require_connected(g, "dhar");
  if (u >= g.vertex_count()) throw InvalidArgumentError("dhar: base vertex out of range");
  detail::require_effective_off(g, d.values(), u, "dhar");
  return detail::burn(g, d.values(), u);
}

inline DharDecomposition dhar(const Graph& g, const Divisor& d, std::string_view u) {
  return dhar(g, d, g.index_of(u));
}

inline bool is_reduced(const Graph& g, const Divisor& d, VertexIndex u) {
  if (!d.bound_to(g)) throw GraphMismatchError("is_reduced");
  detail::require_connected(g, "is_reduced");
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (v != u && d[v] < 0) return false;
  }
  return detail::burn(g, d.values(), u).reduced();
}

inline bool is_reduced(const Graph& g, const Divisor& d, std::string_view u) {
  return is_reduced(g, d, g.index_of(u));
}

// Computes u-reduced representatives on one fixed graph. Holds the BFS
// distance classes from u so repeated reductions skip the setup.
class Reducer {
 public:
  Reducer(Graph g, VertexIndex u) : g_(std::move(g)), u_(u) {
    detail::require_connected(g_, "reduce");
    const std::size_t n = g_.vertex_count();
    if (u_ >= n) throw InvalidArgumentError("reduce: base vertex out of range");
    std::vector<std::int64_t> dist(n, -1);
    dist[u_] = 0;
    std::vector<VertexIndex> queue{u_};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexIndex v = queue[head];
      for (auto [w, m] : g_.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (VertexIndex v : queue) {
      const auto k = static_cast<std::size_t>(dist[v]);
      if (classes_.size() <= k) classes_.resize(k + 1);
      classes_[k].push_back(v);
    }
    distance_ = std::move(dist);
  }

  const Graph& graph() const { return g_; }
  VertexIndex base() const { return u_; }

  // Reduces `d` in place; accumulates the firings into `script` when given.
  void reduce_in_place(std::vector<std::int64_t>& d,
                       std::vector<std::int64_t>* script) const {
    const std::size_t n = g_.vertex_count();
    if (d.size() != n) throw InvalidArgumentError("reduce: size mismatch");

    // Phase 1: make d effective away from u. Firing D_0 ∪ ... ∪ D_{i-1}
    // raises each v in D_i by v.D_{i-1} >= 1 and leaves D_{i+1}.. untouched.
    for (std::size_t i = classes_.size(); i-- > 1;) {
      std::int64_t times = 0;
      for (VertexIndex v : classes_[i]) {
        if (d[v] >= 0) continue;
        const std::int64_t gain = edges_to_class(v, i - 1);
        const std::int64_t need = (checked_neg(d[v]) + gain - 1) / gain;
        times = std::max(times, need);
      }
      if (times == 0) continue;
      fire_ball(d, script, i - 1, times);
    }

    // Phase 2: fire the unburned set until everything burns. Firing W keeps
    // W effective because each surviving v has d(v) >= v.W^c; W is fired as
    // many times in a row as that bound allows.
    const std::uint64_t guard = step_guard(d);
    std::uint64_t steps = 0;
    std::vector<char> burned(n);
    std::vector<std::int64_t> to_burned(n);
    std::vector<VertexIndex> stack;
    for (;;) {
      // Burning order does not change the final burned set, so a stack will do.
      std::fill(burned.begin(), burned.end(), 0);
      std::fill(to_burned.begin(), to_burned.end(), 0);
      burned[u_] = 1;
      stack.assign(1, u_);
      std::size_t burned_count = 1;
      while (!stack.empty()) {
        const VertexIndex v = stack.back();
        stack.pop_back();
        for (auto [w, m] : g_.neighbors(v)) {
          if (burned[w]) continue;
          to_burned[w] += m;
          if (d[w] < to_burned[w]) {
            burned[w] = 1;
            ++burned_count;
            stack.push_back(w);
          }
        }
      }
      if (burned_count == n) break;
      if (++steps > guard) {
        throw InternalError("reduce: step guard exceeded (" +
                            std::to_string(guard) + " steps)");
      }
      // Unburned v has d(v) >= v.W^c = to_burned[v].
      std::int64_t times = -1;
      for (VertexIndex v = 0; v < n; ++v) {
        if (burned[v] || to_burned[v] == 0) continue;
        const std::int64_t k = d[v] / to_burned[v];
        times = times < 0 ? k : std::min(times, k);
      }
      if (times < 1) throw InternalError("reduce: unburned set cannot fire");
      for (VertexIndex v = 0; v < n; ++v) {
        if (burned[v]) continue;
        for (auto [w, m] : g_.neighbors(v)) {
          if (!burned[w]) continue;
          const std::int64_t delta = checked_mul(m, times);
          d[v] = checked_sub(d[v], delta);
          d[w] = checked_add(d[w], delta);
        }
        if (script) (*script)[v] = checked_add((*script)[v], times);
      }
    }
  }

  std::pair<Divisor, FiringScript> reduce(const Divisor& d) const {
    if (!d.bound_to(g_)) throw GraphMismatchError("reduce");
    std::vector<std::int64_t> values = d.values();
    std::vector<std::int64_t> script(g_.vertex_count(), 0);
    reduce_in_place(values, &script);
    return {Divisor(g_, std::move(values)),
            FiringScript(g_, std::move(script)).canonical()};
  }

 private:
  std::int64_t edges_to_class(VertexIndex v, std::size_t k) const {
    std::int64_t total = 0;
    for (auto [w, m] : g_.neighbors(v)) {
      if (distance_[w] == static_cast<std::int64_t>(k)) total += m;
    }
    return total;
  }

  void fire_ball(std::vector<std::int64_t>& d, std::vector<std::int64_t>* script,
                 std::size_t radius, std::int64_t times) const {
    VertexSet ball(g_.vertex_count());
    for (std::size_t k = 0; k <= radius; ++k) {
      for (VertexIndex v : classes_[k]) ball.insert(v);
    }
    fire_set(d, script, ball, times);
  }

  // d += times * t_S.
  void fire_set(std::vector<std::int64_t>& d, std::vector<std::int64_t>* script,
                const VertexSet& s, std::int64_t times) const {
    for (VertexIndex v = 0; v < g_.vertex_count(); ++v) {
      for (auto [w, m] : g_.neighbors(v)) {
        if (s.contains(v) == s.contains(w)) continue;
        const std::int64_t delta = checked_mul(m, times);
        d[v] = s.contains(v) ? checked_sub(d[v], delta) : checked_add(d[v], delta);
      }
    }
    if (script) {
      for (VertexIndex v : s.members()) (*script)[v] = checked_add((*script)[v], times);
    }
  }

  // |V| * (|d| + 2|E| + sum |d(v)|)^2, saturating.
  std::uint64_t step_guard(const std::vector<std::int64_t>& d) const {
    std::uint64_t mass = 0;
    std::int64_t degree = 0;
    for (std::int64_t v : d) {
      mass = saturating_add(mass, static_cast<std::uint64_t>(std::llabs(v)));
      degree = checked_add(degree, v);
    }
    mass = saturating_add(mass, static_cast<std::uint64_t>(std::llabs(degree)));
    mass = saturating_add(mass, 2 * static_cast<std::uint64_t>(g_.edge_count()));
    return saturating_mul(g_.vertex_count(), saturating_mul(mass, mass)) + 1;
  }

  Graph g_;
  VertexIndex u_;
  std::vector<std::vector<VertexIndex>> classes_;
  std::vector<std::int64_t> distance_;
};

// The unique u-reduced d' ~ d and the canonical script x with d' = d + L x.
inline std::pair<Divisor, FiringScript> reduce(const Graph& g, const Divisor& d,
                                               VertexIndex u) {
  return Reducer(g, u).reduce(d);
}

inline std::pair<Divisor, FiringScript> reduce(const Graph& g, const Divisor& d,
                                               std::string_view u) {
  return reduce(g, d, g.index_of(u));
}

// Adds `extra[w]` edges between u and each w.
inline Graph add_edges_at(const Graph& g, VertexIndex u,
                          const std::vector<std::int64_t>& extra) {
  std::vector<Graph::Edge> edges = g.edges();
  for (VertexIndex w = 0; w < extra.size(); ++w) {
    if (extra[w] > 0 && w != u) edges.push_back({u, w, extra[w]});
  }
  return Graph(g.vertices(), edges);
}

struct Saturation {
  Graph graph;
  std::int64_t added_edges = 0;
};

// Saturation by the recipe: for each unburned w add d(w) edges w-u, repeated
// until d is u-reduced on the result.
inline Saturation saturate(const Graph& g, const Divisor& d, VertexIndex u) {
  if (!d.bound_to(g)) throw GraphMismatchError("saturate");
  detail::require_connected(g, "saturate");
  detail::require_effective_off(g, d.values(), u, "saturate");
  Saturation out{g, 0};
  for (std::size_t round = 0; round <= g.vertex_count(); ++round) {
    DharDecomposition dec = detail::burn(out.graph, d.values(), u);
    if (dec.reduced()) return out;
    std::vector<std::int64_t> extra(g.vertex_count(), 0);
    std::int64_t added = 0;
    for (VertexIndex w : dec.unburned.members()) {
      extra[w] = d[w];
      added = checked_add(added, extra[w]);
    }
    if (added == 0) throw InternalError("saturate: recipe adds no edges");
    out.graph = add_edges_at(out.graph, u, extra);
    out.added_edges = checked_add(out.added_edges, added);
  }
  throw InternalError("saturate: did not converge");
}

inline Saturation saturate(const Graph& g, const Divisor& d, std::string_view u) {
  return saturate(g, d, g.index_of(u));
}

// Checks that `candidate` is a saturation of g for d and u: same vertices, g a
// spanning subgraph, every new edge at u, d u-reduced on it. Returns the
// number of added edges, or -1 if any condition fails.
inline std::int64_t saturation_edges(const Graph& g, const Graph& candidate,
                                     const Divisor& d, VertexIndex u) {
  const std::size_t n = g.vertex_count();
  if (candidate.vertex_count() != n) return -1;
  for (VertexIndex v = 0; v < n; ++v) {
    if (candidate.id(v) != g.id(v)) return -1;
  }
  std::int64_t added = 0;
  for (VertexIndex a = 0; a < n; ++a) {
    for (VertexIndex b = a; b < n; ++b) {
      const std::int64_t diff = candidate.multiplicity(a, b) - g.multiplicity(a, b);
      if (diff < 0) return -1;
      if (diff > 0 && a != u && b != u) return -1;
      added = checked_add(added, diff);
    }
  }
  if (!is_reduced(candidate, Divisor(candidate, d.values()), u)) return -1;
  return added;
}

}  // namespace chipfire

#endif  // CHIPFIRE_REDUCTION_HPP_
