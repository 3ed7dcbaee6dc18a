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

#include <numeric>

#include "chipfire/graph.hpp"
#include "chipfire/linear.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/sweep.hpp"

namespace chipfire {
namespace {

using oracle::binary_graph;
using oracle::dhar5_graph;
using oracle::rose_graph;
using oracle::weighted_binary_graph;

TEST(Genus, SingleVertexIsItsWeight) {
  for (std::int64_t g = 0; g <= 6; ++g) EXPECT_EQ(genus(rose_graph(g)), g);
}

TEST(Genus, BinaryGraph) {
  for (std::int64_t g = 0; g <= 8; ++g) EXPECT_EQ(genus(binary_graph(g)), g);
}

TEST(Genus, Dhar5) {
  const Graph g = dhar5_graph();
  EXPECT_EQ(g.edge_count(), 14);
  EXPECT_EQ(genus(g), 14 - 5 + 1);
}

TEST(Genus, LoopsAndComponents) {
  EXPECT_EQ(genus(rose_graph(2, 3)), 5);
  // Two isolated weight-1 vertices: sum of component genera plus 1 - c.
  const Graph two({{"a", 1}, {"b", 1}}, std::vector<Graph::Edge>{});
  EXPECT_EQ(two.component_count(), 2u);
  EXPECT_EQ(genus(two), 1 + 1 + 1 - 2);
}

TEST(Valency, Examples) {
  EXPECT_EQ(valency(rose_graph(0), 0), 0);
  const Graph g({{"a", 0}, {"b", 0}}, std::vector<Graph::Edge>{{0, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(valency(g, "a"), 3);
  EXPECT_EQ(valency(dhar5_graph(), "v4"), 4);
  const Graph d5 = dhar5_graph();
  for (const char* id : {"v0", "v1", "v2", "v3"}) EXPECT_EQ(valency(d5, id), 6) << id;
}

TEST(Valency, UnknownIdThrows) {
  EXPECT_THROW(valency(dhar5_graph(), "x"), UnknownVertexError);
}

TEST(Intersection, Examples) {
  const Graph g = dhar5_graph();
  EXPECT_EQ(intersection(g, VertexSet::of(g, {"v3"}), VertexSet::of(g, {"v0", "v1", "v2"})), 4);
  EXPECT_EQ(intersection(g, VertexSet::of(g, {"v0"}), VertexSet::of(g, {"v3", "v4"})), 2);
  const Graph two({{"a", 0}, {"b", 0}}, std::vector<Graph::Edge>{});
  EXPECT_EQ(intersection(two, VertexSet::of(two, {"a"}), VertexSet::of(two, {"b"})), 0);
}

TEST(Intersection, OverlapThrows) {
  const Graph g = dhar5_graph();
  EXPECT_THROW(intersection(g, VertexSet::of(g, {"v0", "v1"}), VertexSet::of(g, {"v1"})),
               InvalidArgumentError);
}

TEST(Laplacian, Examples) {
  const IntMatrix one = laplacian(rose_graph(3, 2));
  ASSERT_EQ(one.rows(), 1u);
  EXPECT_EQ(one(0, 0), 0);

  const IntMatrix two = laplacian(binary_graph(4));
  EXPECT_EQ(two(0, 0), -5);
  EXPECT_EQ(two(0, 1), 5);
  EXPECT_EQ(two(1, 0), 5);
  EXPECT_EQ(two(1, 1), -5);

  const Graph g = dhar5_graph();
  const std::vector<std::int64_t> ind{0, 1, 1, 0, 1};
  EXPECT_EQ(laplacian(g).apply(ind), (std::vector<std::int64_t>{4, -3, -3, 4, -2}));
}

TEST(Hat, WeightlessLooplessIsUnchanged) {
  const Graph g = dhar5_graph();
  const HatEmbedding h = hat_graph(g);
  EXPECT_EQ(h.target, g);
  for (const auto& added : h.added_vertices) EXPECT_TRUE(added.empty());
}

TEST(Hat, RoseWithMidpoints) {
  for (std::int64_t w = 0; w <= 5; ++w) {
    const HatEmbedding h = hat_graph(rose_graph(w));
    EXPECT_EQ(h.target.vertex_count(), static_cast<std::size_t>(1 + w));
    EXPECT_EQ(h.target.edge_count(), 2 * w);
    EXPECT_EQ(genus(h.target), w);
    EXPECT_TRUE(h.target.is_weightless());
    EXPECT_TRUE(h.target.is_loopless());
  }
}

TEST(Hat, WeightedBinary) {
  const HatEmbedding h = hat_graph(weighted_binary_graph(13));
  EXPECT_EQ(h.target.vertex_count(), 5u);
  EXPECT_EQ(h.target.edge_count(), 13 + 2 + 4);
  EXPECT_EQ(genus(h.target), 15);
  EXPECT_EQ(h.added_vertices[0].size(), 1u);
  EXPECT_EQ(h.added_vertices[1].size(), 2u);
  EXPECT_EQ(h.target.id(h.added_vertices[1][1]), "v2.z2");
}

TEST(Hat, FreshIdsSkipTakenNames) {
  const Graph g({{"a", 1}, {"a.z1", 0}}, std::vector<Graph::Edge>{{0, 1, 1}});
  const HatEmbedding h = hat_graph(g);
  ASSERT_EQ(h.added_vertices[0].size(), 1u);
  EXPECT_EQ(h.target.id(h.added_vertices[0][0]), "a.z2");
}

TEST(G0, Examples) {
  const Graph g = dhar5_graph();
  EXPECT_EQ(simplify_g0(g), g);
  const Graph point = simplify_g0(rose_graph(2, 3));
  EXPECT_EQ(point.vertex_count(), 1u);
  EXPECT_EQ(point.edge_count(), 0);
  EXPECT_TRUE(point.is_weightless());
  EXPECT_EQ(simplify_g0(weighted_binary_graph(13)), binary_graph(12));
}

TEST(Bullet, Examples) {
  EXPECT_EQ(bullet_graph(dhar5_graph()).target, dhar5_graph());

  const Graph one = bullet_graph(rose_graph(0, 1)).target;
  EXPECT_EQ(one.vertex_count(), 2u);
  EXPECT_EQ(one.edge_count(), 2);
  EXPECT_EQ(one.multiplicity(0, 1), 2);

  const BulletEmbedding b = bullet_graph(rose_graph(3, 2));
  EXPECT_EQ(b.target.vertex_count(), 3u);
  EXPECT_EQ(b.target.edge_count(), 4);
  EXPECT_EQ(b.target.weight(0), 3);
  EXPECT_EQ(genus(b.target), 5);
}

TEST(GraphConstruction, RejectsBadInput) {
  using V = std::vector<Graph::Vertex>;
  using E = std::vector<Graph::Edge>;
  EXPECT_THROW(Graph(V{{"", 0}}, E{}), InvalidArgumentError);
  EXPECT_THROW(Graph(V{{"a b", 0}}, E{}), InvalidArgumentError);
  EXPECT_THROW(Graph(V{{"a", -1}}, E{}), InvalidArgumentError);
  EXPECT_THROW(Graph(V{{"a", 0}, {"a", 0}}, E{}), InvalidArgumentError);
  EXPECT_THROW(Graph(V{{"a", 0}}, E{{0, 1, 1}}), InvalidArgumentError);
  EXPECT_THROW(Graph(V{{"a", 0}, {"b", 0}}, E{{0, 1, 0}}), InvalidArgumentError);
  EXPECT_THROW(Graph(V{{"a", 0}}, std::vector<Graph::NamedEdge>{{"a", "b", 1}}),
               UnknownVertexError);
}

TEST(GraphConstruction, RepeatedEdgesAccumulate) {
  const Graph g({{"a", 0}, {"b", 0}}, std::vector<Graph::Edge>{{0, 1, 2}, {1, 0, 3}});
  EXPECT_EQ(g.multiplicity(0, 1), 5);
  EXPECT_EQ(g.edges().size(), 1u);
}

TEST(GraphConstruction, EmptyGraph) {
  const Graph g;
  EXPECT_EQ(g.vertex_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0);
}

class GraphInvariants : public ::testing::Test {
 protected:
  std::vector<Graph> graphs() {
    SweepRng rng(7);
    std::vector<Graph> out;
    RandomGraphSpec spec;
    spec.max_weight = 3;
    for (int i = 0; i < 300; ++i) out.push_back(random_connected_graph(rng, spec));
    return out;
  }
};

TEST_F(GraphInvariants, ValencySumIsTwiceEdgeCount) {
  for (const Graph& g : graphs()) {
    std::int64_t total = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) total += valency(g, v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST_F(GraphInvariants, LaplacianKernelIsConstants) {
  for (const Graph& g : graphs()) {
    const IntMatrix l = laplacian(g);
    for (std::size_t r = 0; r < l.rows(); ++r) {
      std::int64_t row = 0;
      std::int64_t col = 0;
      for (std::size_t c = 0; c < l.cols(); ++c) {
        row += l(r, c);
        col += l(c, r);
      }
      EXPECT_EQ(row, 0);
      EXPECT_EQ(col, 0);
    }
    EXPECT_EQ(rational_rank(l), g.vertex_count() - 1);
  }
}

TEST_F(GraphInvariants, HatAndBulletKeepGenus) {
  for (const Graph& g : graphs()) {
    const HatEmbedding h = hat_graph(g);
    EXPECT_EQ(genus(h.target), genus(g));
    EXPECT_TRUE(h.target.is_weightless() && h.target.is_loopless());
    EXPECT_EQ(genus(bullet_graph(g).target), genus(g));
    EXPECT_TRUE(bullet_graph(g).target.is_loopless());
  }
}

TEST_F(GraphInvariants, IntersectionSymmetryAndSelf) {
  for (const Graph& g : graphs()) {
    const std::size_t n = g.vertex_count();
    for (VertexIndex v = 0; v < n; ++v) {
      VertexSet single(n);
      single.insert(v);
      EXPECT_EQ(intersection(g, single, single.complement()), valency(g, v) - 2 * g.loops(v));
      VertexSet half(n);
      for (VertexIndex w = 0; w < n; w += 2) half.insert(w);
      EXPECT_EQ(intersection(g, half, half.complement()),
                intersection(g, half.complement(), half));
    }
  }
}

TEST(LaplacianSolver, TreeCountOfCycle) {
  // C_5 has 5 spanning trees.
  std::vector<Graph::Vertex> vs;
  std::vector<Graph::Edge> es;
  for (VertexIndex i = 0; i < 5; ++i) {
    vs.push_back({"c" + std::to_string(i), 0});
    es.push_back({i, (i + 1) % 5, 1});
  }
  const LaplacianSolver solver(Graph(vs, es));
  EXPECT_EQ(solver.tree_count(), 5);
}

}  // namespace
}  // namespace chipfire
