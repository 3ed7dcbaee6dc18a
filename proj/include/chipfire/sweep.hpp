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

#ifndef CHIPFIRE_SWEEP_HPP_
#define CHIPFIRE_SWEEP_HPP_

// Seeded randomized property checks over small connected graphs.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// C++ standard, mapped to ranges by rejection sampling rather than the
// implementation-defined std::uniform_int_distribution. A given seed therefore
// yields the same graphs and the same report on every platform.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/io.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"

namespace chipfire {

class SweepRng {
 public:
  explicit SweepRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin(std::int64_t numerator, std::int64_t denominator) {
    return uniform(0, denominator - 1) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomGraphSpec {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  // Total edge multiplicity, loops included.
  std::int64_t max_edges = 12;
  std::int64_t max_weight = 2;
  bool loops = true;
};

// Random spanning tree plus extra edges; the result is always connected.
inline Graph random_connected_graph(SweepRng& rng, const RandomGraphSpec& spec) {
  std::size_t max_n = spec.max_vertices;
  if (spec.max_edges + 1 < static_cast<std::int64_t>(max_n)) {
    max_n = static_cast<std::size_t>(spec.max_edges + 1);
  }
  const auto n = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(std::min(spec.min_vertices, max_n)),
                  static_cast<std::int64_t>(max_n)));
  std::vector<Graph::Vertex> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back({"v" + std::to_string(i), rng.uniform(0, spec.max_weight)});
  }
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({static_cast<VertexIndex>(rng.uniform(0, static_cast<std::int64_t>(i) - 1)),
                     i, 1});
  }
  const std::int64_t room = spec.max_edges - static_cast<std::int64_t>(n) + 1;
  const std::int64_t extra = rng.uniform(0, std::max<std::int64_t>(0, room));
  for (std::int64_t k = 0; k < extra; ++k) {
    const auto a = static_cast<VertexIndex>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto b = static_cast<VertexIndex>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    if (a == b && (!spec.loops || !rng.coin(1, 3))) {
      if (n == 1) {
        if (!spec.loops) break;
      } else {
        b = (a + 1 + static_cast<VertexIndex>(
                         rng.uniform(0, static_cast<std::int64_t>(n) - 2))) % n;
      }
    }
    edges.push_back({a, b, 1});
  }
  return Graph(std::move(vertices), edges);
}

inline Divisor random_divisor(SweepRng& rng, const Graph& g, std::int64_t max_abs) {
  Divisor d(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) d[v] = rng.uniform(-max_abs, max_abs);
  return d;
}

inline FiringScript random_script(SweepRng& rng, const Graph& g, std::int64_t max_level) {
  FiringScript x(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) x[v] = rng.uniform(0, max_level);
  return x;
}

struct PropertyTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> examples;  // first few failures

  void record(bool ok, const std::string& context) {
    ++checked;
    if (ok) return;
    ++failed;
    if (examples.size() < 3) examples.push_back(context);
  }
};

struct SweepConfig {
  RandomGraphSpec graphs;
  std::int64_t max_abs_value = 4;
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultRankBudget;
};

struct SweepReport {
  std::uint64_t graphs = 0;
  std::vector<PropertyTally> properties;

  bool ok() const {
    for (const auto& p : properties) {
      if (p.failed) return false;
    }
    return true;
  }

  const PropertyTally* find(std::string_view name) const {
    for (const auto& p : properties) {
      if (p.name == name) return &p;
    }
    return nullptr;
  }

  std::string render() const {
    std::ostringstream out;
    out << "graphs: " << graphs << '\n';
    for (const auto& p : properties) {
      out << (p.failed ? "FAIL " : "PASS ") << p.name << ": " << p.checked << " checked, "
          << p.failed << " failed\n";
      for (const auto& e : p.examples) out << "  e.g. " << e << '\n';
    }
    out << (ok() ? "sweep: PASS" : "sweep: FAIL") << '\n';
    return out.str();
  }
};

namespace detail {

inline std::string describe(const Graph& g, const Divisor& d) {
  std::string text = render_graph(g);
  for (char& c : text) {
    if (c == '\n') c = ';';
  }
  return text + " d=" + render_divisor(d);
}

}  // namespace detail

inline constexpr std::uint64_t kDegreeCheckBudget = 200'000;

// Runs the property suite on `trials` random graphs.
inline SweepReport run_sweep(const SweepConfig& config) {
  SweepRng rng(config.seed);
  const RankOptions opts{config.budget, true};
  const RankOptions slow{config.budget, false};

  const char* const names[] = {
      "riemann-roch",      "clifford",        "class-invariance",  "ell-lower-bound",
      "monotonicity",      "g0-comparison",   "bullet-identity",   "degree-extremes",
      "fast-path-agreement", "oracle-rank",   "oracle-reduced",    "reduce-idempotent",
      "reduce-class-stable", "degree-bound-agreement", "no-errors"};
  std::vector<PropertyTally> t;
  for (const char* name : names) t.push_back(PropertyTally{name, 0, 0, {}});
  enum {
    kRR, kClifford, kClass, kEll, kMono, kG0, kBullet, kExtremes, kFast,
    kOracleRank, kOracleReduced, kIdem, kStable, kDegreeBound, kErrors
  };

  SweepReport report;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    const Graph g = random_connected_graph(rng, config.graphs);
    const Divisor d = random_divisor(rng, g, config.max_abs_value);
    const FiringScript x = random_script(rng, g, 3);
    const VertexIndex bump =
        static_cast<VertexIndex>(rng.uniform(0, static_cast<std::int64_t>(g.vertex_count()) - 1));
    const VertexIndex base =
        static_cast<VertexIndex>(rng.uniform(0, static_cast<std::int64_t>(g.vertex_count()) - 1));
    ++report.graphs;
    const std::string ctx = detail::describe(g, d);

    try {
      const RankResult r = rank(g, d, opts);
      const std::int64_t deg = d.degree();
      const std::int64_t genus_g = genus(g);

      const Divisor dual = canonical_divisor(g) - d;
      const std::int64_t r_dual = rank(g, dual, opts).rank;
      t[kRR].record(r.rank - r_dual == deg - genus_g + 1, ctx);

      t[kClifford].record(deg < 0 || deg > 2 * genus_g - 2 || r.rank < 0 || r.rank <= deg / 2,
                          ctx);

      const Divisor moved = d + apply_script(g, x);
      t[kClass].record(rank(g, moved, opts).rank == r.rank, ctx);

      t[kEll].record(r.rank >= ell(g, d), ctx);

      const Divisor bigger = d + Divisor::point(g, bump);
      t[kMono].record(rank(g, bigger, opts).rank >= r.rank, ctx);

      const auto [r0, rg] = g0_comparison(g, d, opts);
      t[kG0].record(rg == r.rank && r0 >= rg && ((r0 == -1) == (rg == -1)), ctx);

      t[kBullet].record(bullet_rank_identity(g, d, opts), ctx);

      if (deg < 0) {
        t[kExtremes].record(r.rank == -1, ctx);
      } else if (deg >= 2 * genus_g - 1) {
        t[kExtremes].record(r.rank == deg - genus_g, ctx);
      }

      t[kFast].record(rank(g, d, slow).rank == r.rank, ctx);

      // Without the degree shortcut the search can be far slower, so this
      // one is skipped when a small budget runs out.
      try {
        const RankOptions plain{kDegreeCheckBudget, true, false};
        t[kDegreeBound].record(rank(g, d, plain).rank == r.rank &&
                                   rank(g, dual, plain).rank == r_dual,
                               ctx);
      } catch (const BudgetExceededError&) {
      }

      const Graph g0 = simplify_g0(g);
      const Divisor d0(g0, d.values());
      if (g0.vertex_count() <= oracle::kBruteRankMaxVertices &&
          deg <= oracle::kBruteRankMaxDegree) {
        t[kOracleRank].record(oracle::brute_rank(g0, d0) == rank(g0, d0, opts).rank, ctx);
      }
      t[kOracleReduced].record(oracle::brute_is_reduced(g0, d0, base) == is_reduced(g0, d0, base),
                               ctx);

      const auto [red, script] = reduce(g, d, base);
      const auto [again, again_script] = reduce(g, red, base);
      t[kIdem].record(again == red && again_script.is_zero() && is_reduced(g, red, base) &&
                          d + apply_script(g, script) == red,
                      ctx);
      t[kStable].record(reduce(g, moved, base).first == red, ctx);
      t[kErrors].record(true, ctx);
    } catch (const Error& e) {
      t[kErrors].record(false, ctx + " error: " + e.what());
    }
  }
  report.properties = std::move(t);
  return report;
}

}  // namespace chipfire

#endif  // CHIPFIRE_SWEEP_HPP_
