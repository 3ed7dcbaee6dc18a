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

#ifndef CHIPFIRE_ORACLE_HPP_
#define CHIPFIRE_ORACLE_HPP_

// Brute-force reference implementations and pinned example graphs.
//
// Nothing in this header uses reduced divisors or Dhar burning: equivalence is
// decided by the exact Laplacian solver only, and reducedness by enumerating
// every vertex subset.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/enumerate.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/linear.hpp"

namespace chipfire::oracle {

inline constexpr std::size_t kBruteRankMaxVertices = 6;
inline constexpr std::int64_t kBruteRankMaxDegree = 8;
inline constexpr std::size_t kBruteReducedMaxVertices = 12;

// Rank straight from the definition: d - e must be equivalent to some
// effective f of degree |d| - k, tested against every such f.
inline std::int64_t brute_rank(const Graph& g, const Divisor& d) {
  if (!g.is_weightless() || !g.is_loopless()) {
    throw InvalidArgumentError("brute_rank: graph must be weightless and loopless");
  }
  if (!g.is_connected()) throw DisconnectedGraphError("brute_rank");
  if (!d.bound_to(g)) throw GraphMismatchError("brute_rank");
  if (g.vertex_count() > kBruteRankMaxVertices) {
    throw BudgetExceededError("brute_rank vertices", g.vertex_count(),
                              kBruteRankMaxVertices);
  }
  const std::int64_t deg = d.degree();
  if (deg < 0) return -1;
  if (deg > kBruteRankMaxDegree) {
    throw BudgetExceededError("brute_rank degree", static_cast<std::uint64_t>(deg),
                              kBruteRankMaxDegree);
  }
  const std::size_t n = g.vertex_count();
  const LaplacianSolver solver(g);
  auto effective_equivalent = [&](const Divisor& c) {
    return !for_each_effective(n, c.degree(), [&](const std::vector<std::int64_t>& f) {
      return !equivalent(solver, g, c, Divisor(g, f)).equivalent;
    });
  };
  if (!effective_equivalent(d)) return -1;
  std::int64_t k = 0;
  while (k < deg) {
    const bool all = for_each_effective(n, k + 1, [&](const std::vector<std::int64_t>& e) {
      return effective_equivalent(d - Divisor(g, e));
    });
    if (!all) break;
    ++k;
  }
  return k;
}

// d(v) >= 0 off u, and every nonempty A ⊆ V \ {u} has some v with d(v) < v.A^c.
inline bool brute_is_reduced(const Graph& g, const Divisor& d, VertexIndex u) {
  if (!d.bound_to(g)) throw GraphMismatchError("brute_is_reduced");
  const std::size_t n = g.vertex_count();
  if (n > kBruteReducedMaxVertices) {
    throw BudgetExceededError("brute_is_reduced vertices", n, kBruteReducedMaxVertices);
  }
  std::vector<VertexIndex> others;
  for (VertexIndex v = 0; v < n; ++v) {
    if (v == u) continue;
    if (d[v] < 0) return false;
    others.push_back(v);
  }
  const std::uint64_t subsets = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    VertexSet a(n);
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) a.insert(others[i]);
    }
    const VertexSet rest = a.complement();
    bool some_vertex_short = false;
    for (VertexIndex v : a.members()) {
      std::int64_t to_rest = 0;
      for (VertexIndex w : rest.members()) to_rest += g.multiplicity(v, w);
      if (d[v] < to_rest) {
        some_vertex_short = true;
        break;
      }
    }
    if (!some_vertex_short) return false;
  }
  return true;
}

// Two weightless vertices joined by g + 1 edges.
inline Graph binary_graph(std::int64_t g, std::int64_t w1 = 0, std::int64_t w2 = 0) {
  return Graph({{"v1", w1}, {"v2", w2}}, std::vector<Graph::Edge>{{0, 1, g + 1}});
}

// One vertex of weight `weight` carrying `loops` loops.
inline Graph rose_graph(std::int64_t weight, std::int64_t loops = 0) {
  std::vector<Graph::Edge> edges;
  if (loops > 0) edges.push_back({0, 0, loops});
  return Graph({{"v", weight}}, edges);
}

inline Graph dhar5_graph() {
  return Graph({{"v0", 0}, {"v1", 0}, {"v2", 0}, {"v3", 0}, {"v4", 0}},
               std::vector<Graph::NamedEdge>{{"v0", "v1", 2},
                                             {"v0", "v2", 2},
                                             {"v0", "v3", 2},
                                             {"v1", "v2", 2},
                                             {"v1", "v3", 1},
                                             {"v1", "v4", 1},
                                             {"v2", "v3", 1},
                                             {"v2", "v4", 1},
                                             {"v3", "v4", 2}});
}

// v1 (weight 1), v2 (weight 2), joined by `edges` edges.
inline Graph weighted_binary_graph(std::int64_t edges = 13) {
  return Graph({{"v1", 1}, {"v2", 2}}, std::vector<Graph::Edge>{{0, 1, edges}});
}

// C1.C3 = 3, C2.C3 = c23, C1.C2 = 0.
inline Graph three_component_graph(std::int64_t c23 = 7) {
  return Graph({{"v1", 0}, {"v2", 0}, {"v3", 0}},
               std::vector<Graph::Edge>{{0, 2, 3}, {1, 2, c23}});
}

struct Fixture {
  std::string name;
  Graph graph;
  std::map<std::string, Divisor> divisors;
  std::map<std::string, std::int64_t> expected;
};

namespace detail {

inline void check(bool ok, const std::string& fixture, const std::string& what) {
  if (!ok) throw Error("fixture '" + fixture + "' failed self-check: " + what);
}

// "name(12)" -> 12; throws on anything else.
inline std::int64_t parameter(std::string_view name, std::string_view prefix) {
  if (name.size() < prefix.size() + 3 || name.substr(0, prefix.size()) != prefix ||
      name[prefix.size()] != '(' || name.back() != ')') {
    throw InvalidArgumentError("unknown fixture '" + std::string(name) + "'");
  }
  const std::string digits(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
  if (digits.empty() || digits.size() > 4 ||
      digits.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidArgumentError("bad fixture parameter in '" + std::string(name) + "'");
  }
  return std::stoll(digits);
}

}  // namespace detail

// Known names: dhar5, weighted-binary, three-component, bullet-loop,
// binary(g), rose(g).
inline Fixture load_fixture(std::string_view name) {
  Fixture fx;
  fx.name = std::string(name);
  if (name == "dhar5") {
    fx.graph = dhar5_graph();
    const Graph& g = fx.graph;
    fx.divisors.emplace("d", Divisor(g, {0, 1, 2, 4, 4}));
    fx.divisors.emplace("d_prime", Divisor(g, {2, 3, 4, 0, 2}));
    fx.divisors.emplace("d_second", Divisor(g, {6, 0, 1, 4, 0}));
    // The adjacency is read off a drawing; the quoted principal divisors pin it.
    detail::check(t_z(g, {"v3", "v4"}) == Divisor(g, {2, 2, 2, -4, -2}), fx.name,
                  "t_{v3,v4} != (2,2,2,-4,-2)");
    detail::check(t_z(g, {"v1", "v2", "v4"}) == Divisor(g, {4, -3, -3, 4, -2}), fx.name,
                  "t_{v1,v2,v4} != (4,-3,-3,4,-2)");
    detail::check(g.edge_count() == 14, fx.name, "expected 14 edges");
    fx.expected["rank"] = 2;
    fx.expected["genus"] = 10;
    fx.expected["ell"] = 0;
  } else if (name == "weighted-binary") {
    fx.graph = weighted_binary_graph(13);
    fx.divisors.emplace("d", Divisor(fx.graph, {3, 4}));
    detail::check(genus(fx.graph) == 15, fx.name, "genus != 15");
    fx.expected["rank"] = 2;
    fx.expected["genus"] = 15;
  } else if (name == "three-component") {
    fx.graph = three_component_graph(7);
    fx.divisors.emplace("d", Divisor(fx.graph, {1, 2, 3}));
    detail::check(genus(fx.graph) == 8, fx.name, "genus != 8");
    fx.expected["rank"] = 2;
    fx.expected["genus"] = 8;
  } else if (name == "bullet-loop") {
    fx.graph = rose_graph(0, 1);
    fx.divisors.emplace("d", Divisor(fx.graph, {1}));
    fx.expected["rank"] = 0;
    fx.expected["genus"] = 1;
  } else if (name.substr(0, 6) == "binary") {
    const std::int64_t g = detail::parameter(name, "binary");
    fx.graph = binary_graph(g);
    detail::check(genus(fx.graph) == g, fx.name, "genus mismatch");
    fx.divisors.emplace("canonical", canonical_divisor(fx.graph));
    fx.expected["genus"] = g;
    fx.expected["rank_canonical"] = g - 1;
  } else if (name.substr(0, 4) == "rose") {
    const std::int64_t g = detail::parameter(name, "rose");
    fx.graph = rose_graph(g);
    detail::check(genus(fx.graph) == g, fx.name, "genus mismatch");
    fx.divisors.emplace("d", Divisor(fx.graph, {g}));
    fx.expected["genus"] = g;
    fx.expected["rank"] = d_sub(g, g);
  } else {
    throw InvalidArgumentError("unknown fixture '" + std::string(name) + "'");
  }
  return fx;
}

}  // namespace chipfire::oracle

#endif  // CHIPFIRE_ORACLE_HPP_
