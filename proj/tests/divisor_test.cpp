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

#include <gtest/gtest.h>

#include "chipfire/divisor.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/sweep.hpp"

namespace chipfire {
namespace {

using oracle::binary_graph;
using oracle::dhar5_graph;
using oracle::rose_graph;
using oracle::weighted_binary_graph;

TEST(PrincipalDivisor, Examples) {
  const Graph g = dhar5_graph();
  EXPECT_EQ(t_z(g, VertexSet::all(5)), Divisor(g));
  EXPECT_EQ(t_z(g, {"v3", "v4"}), Divisor(g, {2, 2, 2, -4, -2}));
  EXPECT_EQ(t_z(g, {"v1", "v2", "v4"}), Divisor(g, {4, -3, -3, 4, -2}));
}

TEST(PrincipalDivisor, DegreeZeroAndComplement) {
  SweepRng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(rng, {});
    VertexSet z(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (rng.coin(1, 2)) z.insert(v);
    }
    EXPECT_EQ(t_z(g, z).degree(), 0);
    EXPECT_EQ(t_z(g, z) + t_z(g, z.complement()), Divisor(g));
  }
}

TEST(ApplyScript, Examples) {
  const Graph g = dhar5_graph();
  EXPECT_EQ(apply_script(g, FiringScript(g, {3, 3, 3, 3, 3})), Divisor(g));
  const VertexSet z = VertexSet::of(g, {"v1", "v4"});
  EXPECT_EQ(apply_script(g, FiringScript(g, {0, 1, 0, 0, 1})), t_z(g, z));
  const Divisor sum = t_z(g, {"v1", "v2", "v3", "v4"}) + t_z(g, {"v2", "v3", "v4"}) +
                      t_z(g, {"v3", "v4"});
  EXPECT_EQ(apply_script(g, FiringScript(g, {0, 1, 2, 3, 3})), sum);
}

TEST(PrincipalScript, Examples) {
  const Graph g = dhar5_graph();
  auto zero = principal_script(g, Divisor(g));
  ASSERT_TRUE(zero);
  EXPECT_TRUE(zero->is_zero());

  for (unsigned mask = 1; mask < 31; ++mask) {
    VertexSet z(5);
    for (VertexIndex v = 0; v < 5; ++v) {
      if (mask >> v & 1) z.insert(v);
    }
    auto x = principal_script(g, t_z(g, z));
    ASSERT_TRUE(x);
    for (VertexIndex v = 0; v < 5; ++v) EXPECT_EQ((*x)[v], z.contains(v) ? 1 : 0);
  }

  const Graph b = binary_graph(1);
  EXPECT_FALSE(principal_script(b, Divisor(b, {1, -1})));
  EXPECT_FALSE(principal_script(b, Divisor(b, {1, 0})));
}

TEST(PrincipalScript, RoundTripsCanonicalScripts) {
  SweepRng rng(5);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_connected_graph(rng, {});
    const FiringScript x = random_script(rng, g, 5).canonical();
    auto back = principal_script(g, apply_script(g, x));
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, x);
  }
}

TEST(LayerDecomposition, Examples) {
  const Graph g = dhar5_graph();
  const VertexSet z = VertexSet::of(g, {"v1", "v4"});
  auto single = layer_decomposition(g, t_z(g, z));
  ASSERT_EQ(single.size(), 2u);
  EXPECT_EQ(ids_of(g, single[0]), (std::vector<std::string>{"v0", "v2", "v3"}));
  EXPECT_EQ(ids_of(g, single[1]), (std::vector<std::string>{"v1", "v4"}));

  auto levels = layer_decomposition(g, t_z(g, {"v3", "v4"}) + t_z(g, {"v4"}));
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_EQ(ids_of(g, levels[0]), (std::vector<std::string>{"v0", "v1", "v2"}));
  EXPECT_EQ(ids_of(g, levels[1]), (std::vector<std::string>{"v3"}));
  EXPECT_EQ(ids_of(g, levels[2]), (std::vector<std::string>{"v4"}));

  auto doubled = layer_decomposition(g, 2 * t_z(g, z));
  ASSERT_EQ(doubled.size(), 3u);
  EXPECT_TRUE(doubled[1].empty());
  EXPECT_EQ(ids_of(g, doubled[2]), (std::vector<std::string>{"v1", "v4"}));
}

TEST(LayerDecomposition, Errors) {
  const Graph g = dhar5_graph();
  EXPECT_THROW(layer_decomposition(g, Divisor(g)), InvalidArgumentError);
  EXPECT_THROW(layer_decomposition(g, Divisor::point(g, 0)), InvalidArgumentError);
}

TEST(LayerDecomposition, ReconstructionAndRestrictionBound) {
  SweepRng rng(11);
  RandomGraphSpec spec;
  spec.max_vertices = 7;
  int checked = 0;
  while (checked < 300) {
    const Graph g = random_connected_graph(rng, spec);
    const Divisor t = apply_script(g, random_script(rng, g, 4));
    if (t == Divisor(g)) continue;
    ++checked;
    const auto layers = layer_decomposition(g, t);
    ASSERT_GE(layers.size(), 2u);
    EXPECT_FALSE(layers.front().empty());
    EXPECT_FALSE(layers.back().empty());
    Divisor sum(g);
    for (std::size_t i = 0; i < layers.size(); ++i) {
      sum += static_cast<std::int64_t>(i) * t_z(g, layers[i]);
    }
    EXPECT_EQ(sum, t);
    const Divisor top = t_z(g, layers.back());
    for (VertexIndex v : layers.back().members()) EXPECT_LE(t[v], top[v]);
  }
}

TEST(Equivalent, Examples) {
  const Graph g = dhar5_graph();
  const Divisor d(g, {0, 1, 2, 4, 4});
  const Divisor d1(g, {2, 3, 4, 0, 2});
  const Divisor d2(g, {6, 0, 1, 4, 0});
  EXPECT_TRUE(equivalent(g, d, d));
  const Equivalence a = equivalent(g, d, d1);
  ASSERT_TRUE(a);
  EXPECT_EQ(d + apply_script(g, *a.script), d1);
  EXPECT_TRUE(equivalent(g, d1, d2));
  EXPECT_TRUE(equivalent(g, d, d2));
  EXPECT_FALSE(equivalent(g, d, d + Divisor::point(g, 0)));
  EXPECT_FALSE(equivalent(g, d, d + Divisor::point(g, 0) - Divisor::point(g, 1)));
}

TEST(Equivalent, IsAnEquivalenceRelation) {
  SweepRng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(rng, {});
    const LaplacianSolver solver(g);
    const Divisor a = random_divisor(rng, g, 3);
    const Divisor b = a + apply_script(g, random_script(rng, g, 3));
    const Divisor c = b + apply_script(g, random_script(rng, g, 3));
    const Divisor other = random_divisor(rng, g, 3);
    EXPECT_TRUE(equivalent(solver, g, a, a));
    EXPECT_TRUE(equivalent(solver, g, a, b) && equivalent(solver, g, b, a));
    EXPECT_TRUE(equivalent(solver, g, a, c));
    if (equivalent(solver, g, a, other)) {
      EXPECT_EQ(a.degree(), other.degree());
    }
  }
}

TEST(Scalars, Examples) {
  for (std::int64_t g = 0; g <= 10; ++g) EXPECT_EQ(e_sup(0, g), 0);
  EXPECT_EQ(e_sup(3, 1), 4);
  EXPECT_EQ(e_sup(2, 5), 4);
  EXPECT_EQ(d_sub(4, 2), 2);
  EXPECT_EQ(d_sub(3, 1), 2);
  EXPECT_THROW(e_sup(-1, 2), InvalidArgumentError);
  EXPECT_THROW(d_sub(2, -1), InvalidArgumentError);
}

TEST(Scalars, FirstIdentity) {
  for (std::int64_t e = 0; e <= 50; ++e) {
    for (std::int64_t g = 0; g <= 50; ++g) EXPECT_EQ(d_sub(e_sup(e, g), g), e);
  }
}

TEST(Scalars, SecondIdentity) {
  for (std::int64_t d = 0; d <= 60; ++d) {
    for (std::int64_t g = 0; g <= 30; ++g) {
      const std::int64_t expected = (d <= 2 * g - 1 && d % 2 == 1) ? d - 1 : d;
      EXPECT_EQ(e_sup(d_sub(d, g), g), expected) << d << ' ' << g;
    }
  }
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_divisor(rose_graph(0, 1)).values(), (std::vector<std::int64_t>{0}));
  for (std::int64_t g = 0; g <= 6; ++g) {
    EXPECT_EQ(canonical_divisor(binary_graph(g)).values(),
              (std::vector<std::int64_t>{g - 1, g - 1}));
  }
  const Divisor k = canonical_divisor(dhar5_graph());
  EXPECT_EQ(k.values(), (std::vector<std::int64_t>{4, 4, 4, 4, 2}));
  EXPECT_EQ(k.degree(), 18);
}

TEST(Canonical, DegreeIsTwiceGenusMinusTwo) {
  SweepRng rng(17);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_connected_graph(rng, {});
    EXPECT_EQ(canonical_divisor(g).degree(), 2 * genus(g) - 2);
  }
}

TEST(DegreeAndRank, Examples) {
  const Graph g = dhar5_graph();
  const Divisor e(g, {1, 0, 3, 0, 2});
  EXPECT_EQ(e_deg(g, Divisor(g)), Divisor(g));
  EXPECT_EQ(e_deg(g, e), e);
  EXPECT_EQ(d_rk(g, e), e);

  const Graph w = weighted_binary_graph(13);
  EXPECT_EQ(e_deg(w, Divisor(w, {1, 1})).values(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(d_rk(w, Divisor(w, {3, 4})).values(), (std::vector<std::int64_t>{2, 2}));

  for (std::int64_t weight = 0; weight <= 5; ++weight) {
    const Graph r = rose_graph(weight);
    for (std::int64_t d = 0; d <= 12; ++d) {
      EXPECT_EQ(d_rk(r, Divisor(r, {d}))[0], std::max(d - weight, d / 2));
    }
  }
  EXPECT_THROW(d_rk(g, Divisor::point(g, 0, -1)), InvalidArgumentError);
  EXPECT_THROW(e_deg(g, Divisor::point(g, 0, -1)), InvalidArgumentError);
}

TEST(DegreeAndRank, PointwiseMonotone) {
  SweepRng rng(19);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_connected_graph(rng, {});
    Divisor a(g);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) a[v] = rng.uniform(0, 6);
    const Divisor b = a + Divisor::point(g, static_cast<VertexIndex>(rng.uniform(
                              0, static_cast<std::int64_t>(g.vertex_count()) - 1)));
    EXPECT_TRUE((e_deg(g, b) - e_deg(g, a)).is_effective());
    EXPECT_TRUE((d_rk(g, b) - d_rk(g, a)).is_effective());
  }
}

TEST(Ell, Examples) {
  const Graph g = dhar5_graph();
  EXPECT_EQ(ell(g, Divisor(g, {0, 1, -1, 4, 4})), -1);
  EXPECT_EQ(ell(g, Divisor(g, {0, 1, 2, 4, 4})), 0);
  const Graph w = weighted_binary_graph(13);
  EXPECT_EQ(ell(w, Divisor(w, {3, 4})), 2);
}

TEST(HatDivisor, Examples) {
  const Graph g = dhar5_graph();
  const HatEmbedding same = hat_graph(g);
  const Divisor d(g, {0, 1, 2, 4, 4});
  EXPECT_EQ(hat_divisor(same, d).values(), d.values());

  const HatEmbedding h = hat_graph(weighted_binary_graph(13));
  EXPECT_EQ(hat_divisor(h, Divisor(h.source)).values(), (std::vector<std::int64_t>(5, 0)));
  EXPECT_EQ(hat_divisor(h, Divisor(h.source, {3, 4})).values(),
            (std::vector<std::int64_t>{3, 4, 0, 0, 0}));
}

TEST(DivisorArithmetic, MismatchAndOverflow) {
  const Graph a = dhar5_graph();
  const Graph b = binary_graph(2);
  EXPECT_THROW(Divisor(a) + Divisor(b), GraphMismatchError);
  EXPECT_THROW(Divisor(b, {1, 2, 3}), InvalidArgumentError);
  const Divisor big = Divisor::point(b, 0, std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + big, OverflowError);
  EXPECT_EQ(Divisor::from_ids(a, {{"v3", 4}, {"v1", 1}}).values(),
            (std::vector<std::int64_t>{0, 1, 0, 4, 0}));
}

}  // namespace
}  // namespace chipfire
