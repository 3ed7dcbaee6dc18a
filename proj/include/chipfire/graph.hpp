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

#ifndef CHIPFIRE_GRAPH_HPP_
#define CHIPFIRE_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chipfire/checked.hpp"
#include "chipfire/errors.hpp"

namespace chipfire {

using VertexIndex = std::size_t;

// Finite vertex-weighted multigraph with loops.
//
// A Graph is an immutable handle; copies share storage. Vertices keep their
// declaration order, and every matrix, enumeration and witness in the library
// is indexed by that order.
class Graph {
 public:
  struct Vertex {
    std::string id;
    std::int64_t weight = 0;
  };

  // Undirected edge class with multiplicity; `a <= b`, and `a == b` is a loop.
  struct Edge {
    VertexIndex a = 0;
    VertexIndex b = 0;
    std::int64_t multiplicity = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  // Edge endpoints named by id, as read from a file.
  struct NamedEdge {
    std::string a;
    std::string b;
    std::int64_t multiplicity = 1;
  };

  Graph() : Graph(std::vector<Vertex>{}, std::vector<Edge>{}) {}

  // Repeated edges between the same endpoints accumulate multiplicity.
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
      : data_(std::make_shared<Data>()) {
    Data& d = *data_;
    d.vertices = std::move(vertices);
    const std::size_t n = d.vertices.size();
    for (VertexIndex i = 0; i < n; ++i) {
      const Vertex& v = d.vertices[i];
      if (!is_valid_id(v.id)) {
        throw InvalidArgumentError("invalid vertex id '" + v.id + "'");
      }
      if (v.weight < 0) {
        throw InvalidArgumentError("negative weight on vertex '" + v.id + "'");
      }
      if (!d.index.emplace(v.id, i).second) {
        throw InvalidArgumentError("duplicate vertex id '" + v.id + "'");
      }
    }
    d.mult.assign(n * n, 0);
    for (const Edge& e : edges) {
      if (e.a >= n || e.b >= n) {
        throw InvalidArgumentError("edge endpoint index out of range");
      }
      if (e.multiplicity < 1) {
        throw InvalidArgumentError("edge multiplicity must be at least 1");
      }
      const auto [a, b] = std::minmax(e.a, e.b);
      d.mult[a * n + b] = checked_add(d.mult[a * n + b], e.multiplicity);
      if (a != b) d.mult[b * n + a] = d.mult[a * n + b];
    }
    for (VertexIndex a = 0; a < n; ++a) {
      for (VertexIndex b = a; b < n; ++b) {
        if (d.mult[a * n + b] > 0) d.edges.push_back({a, b, d.mult[a * n + b]});
      }
    }
    d.neighbors.resize(n);
    for (const Edge& e : d.edges) {
      if (e.a == e.b) continue;
      d.neighbors[e.a].emplace_back(e.b, e.multiplicity);
      d.neighbors[e.b].emplace_back(e.a, e.multiplicity);
    }
    d.components = count_components(d);
  }

  Graph(std::vector<Vertex> vertices, const std::vector<NamedEdge>& edges)
      : Graph(vertices, resolve(vertices, edges)) {}

  std::size_t vertex_count() const { return data_->vertices.size(); }
  const std::vector<Vertex>& vertices() const { return data_->vertices; }
  const std::string& id(VertexIndex v) const { return data_->vertices.at(v).id; }
  std::int64_t weight(VertexIndex v) const {
    return data_->vertices.at(v).weight;
  }

  std::optional<VertexIndex> find(std::string_view id) const {
    auto it = data_->index.find(std::string(id));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  VertexIndex index_of(std::string_view id) const {
    auto found = find(id);
    if (!found) throw UnknownVertexError(std::string(id));
    return *found;
  }

  // Distinct endpoint pairs with multiplicity, sorted by (a, b).
  const std::vector<Edge>& edges() const { return data_->edges; }

  // Number of edges joining v and w; for v == w, the number of loops at v.
  std::int64_t multiplicity(VertexIndex v, VertexIndex w) const {
    const std::size_t n = vertex_count();
    return data_->mult.at(v * n + w);
  }

  // Non-loop neighbours of v with edge multiplicities.
  const std::vector<std::pair<VertexIndex, std::int64_t>>& neighbors(
      VertexIndex v) const {
    return data_->neighbors.at(v);
  }

  std::int64_t loops(VertexIndex v) const { return multiplicity(v, v); }

  // g(v) = weight + loops.
  std::int64_t local_genus(VertexIndex v) const {
    return checked_add(weight(v), loops(v));
  }

  // Total number of edges counted with multiplicity.
  std::int64_t edge_count() const {
    std::int64_t total = 0;
    for (const Edge& e : data_->edges) total = checked_add(total, e.multiplicity);
    return total;
  }

  std::size_t component_count() const { return data_->components; }
  bool is_connected() const { return data_->components <= 1; }

  bool is_weightless() const {
    return std::all_of(data_->vertices.begin(), data_->vertices.end(),
                       [](const Vertex& v) { return v.weight == 0; });
  }

  bool is_loopless() const {
    return std::none_of(data_->edges.begin(), data_->edges.end(),
                        [](const Edge& e) { return e.a == e.b; });
  }

  // Both handles refer to the same storage.
  bool same_instance(const Graph& other) const { return data_ == other.data_; }

  friend bool operator==(const Graph& x, const Graph& y) {
    if (x.data_ == y.data_) return true;
    if (x.vertex_count() != y.vertex_count()) return false;
    for (VertexIndex i = 0; i < x.vertex_count(); ++i) {
      if (x.id(i) != y.id(i) || x.weight(i) != y.weight(i)) return false;
    }
    return x.edges() == y.edges();
  }

  // Ids must be non-empty and free of whitespace, ',' and '='. Derived graphs
  // use '.' in fresh ids; the text format forbids it in user ids.
  static bool is_valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::none_of(id.begin(), id.end(), [](char c) {
      return c == ',' || c == '=' || c == ' ' || c == '\t' || c == '\n' ||
             c == '\r' || c == '#';
    });
  }

 private:
  struct Data {
    std::vector<Vertex> vertices;
    std::unordered_map<std::string, VertexIndex> index;
    std::vector<std::int64_t> mult;
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<VertexIndex, std::int64_t>>> neighbors;
    std::size_t components = 0;
  };

  static std::vector<Edge> resolve(const std::vector<Vertex>& vertices,
                                   const std::vector<NamedEdge>& named) {
    std::unordered_map<std::string, VertexIndex> index;
    for (VertexIndex i = 0; i < vertices.size(); ++i) {
      index.emplace(vertices[i].id, i);
    }
    std::vector<Edge> out;
    out.reserve(named.size());
    for (const NamedEdge& e : named) {
      auto a = index.find(e.a);
      if (a == index.end()) throw UnknownVertexError(e.a);
      auto b = index.find(e.b);
      if (b == index.end()) throw UnknownVertexError(e.b);
      out.push_back({a->second, b->second, e.multiplicity});
    }
    return out;
  }

  static std::size_t count_components(const Data& d) {
    const std::size_t n = d.vertices.size();
    std::vector<char> seen(n, 0);
    std::vector<VertexIndex> stack;
    std::size_t count = 0;
    for (VertexIndex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++count;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        VertexIndex v = stack.back();
        stack.pop_back();
        for (auto [w, m] : d.neighbors[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    return count;
  }

  std::shared_ptr<Data> data_;
};

// Subset of the vertices of a graph with a fixed size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : in_(n, 0) {}

  static VertexSet all(std::size_t n) {
    VertexSet s(n);
    std::fill(s.in_.begin(), s.in_.end(), 1);
    return s;
  }

  static VertexSet of(const Graph& g, std::initializer_list<std::string_view> ids) {
    VertexSet s(g.vertex_count());
    for (std::string_view id : ids) s.insert(g.index_of(id));
    return s;
  }

  static VertexSet of(const Graph& g, const std::vector<std::string>& ids) {
    VertexSet s(g.vertex_count());
    for (const std::string& id : ids) s.insert(g.index_of(id));
    return s;
  }

  std::size_t universe() const { return in_.size(); }
  bool contains(VertexIndex v) const { return in_.at(v) != 0; }
  void insert(VertexIndex v) { in_.at(v) = 1; }
  void erase(VertexIndex v) { in_.at(v) = 0; }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count(in_.begin(), in_.end(), 1));
  }
  bool empty() const { return size() == 0; }

  std::vector<VertexIndex> members() const {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < in_.size(); ++v) {
      if (in_[v]) out.push_back(v);
    }
    return out;
  }

  VertexSet complement() const {
    VertexSet out(in_.size());
    for (VertexIndex v = 0; v < in_.size(); ++v) out.in_[v] = in_[v] ? 0 : 1;
    return out;
  }

  bool intersects(const VertexSet& other) const {
    for (VertexIndex v = 0; v < in_.size() && v < other.in_.size(); ++v) {
      if (in_[v] && other.in_[v]) return true;
    }
    return false;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<char> in_;
};

// Ids of the members of `s`, in vertex order.
inline std::vector<std::string> ids_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexIndex v : s.members()) out.push_back(g.id(v));
  return out;
}

// Sum of weights plus |E| - |V| + 1. For c components, sum g(G_i) + 1 - c
// collapses to the same expression.
inline std::int64_t genus(const Graph& g) {
  std::int64_t total = 0;
  for (const auto& v : g.vertices()) total = checked_add(total, v.weight);
  total = checked_add(total, g.edge_count());
  total = checked_sub(total, static_cast<std::int64_t>(g.vertex_count()));
  return checked_add(total, 1);
}

// Loops count twice.
inline std::int64_t valency(const Graph& g, VertexIndex v) {
  std::int64_t total = checked_mul(2, g.loops(v));
  for (auto [w, m] : g.neighbors(v)) total = checked_add(total, m);
  return total;
}

inline std::int64_t valency(const Graph& g, std::string_view id) {
  return valency(g, g.index_of(id));
}

// Number of edges with one end in `a` and the other in `b`; a and b must be
// disjoint. Loops never contribute.
inline std::int64_t intersection(const Graph& g, const VertexSet& a,
                                 const VertexSet& b) {
  if (a.universe() != g.vertex_count() || b.universe() != g.vertex_count()) {
    throw InvalidArgumentError("intersection: vertex set size mismatch");
  }
  if (a.intersects(b)) {
    throw InvalidArgumentError("intersection: vertex sets overlap");
  }
  std::int64_t total = 0;
  for (VertexIndex v : a.members()) {
    for (auto [w, m] : g.neighbors(v)) {
      if (b.contains(w)) total = checked_add(total, m);
    }
  }
  return total;
}

// v . S for a single vertex v outside S.
inline std::int64_t vertex_dot(const Graph& g, VertexIndex v, const VertexSet& s) {
  std::int64_t total = 0;
  for (auto [w, m] : g.neighbors(v)) {
    if (s.contains(w)) total = checked_add(total, m);
  }
  return total;
}

// Self-intersection v.v = -sum_{w != v} v.w.
inline std::int64_t self_intersection(const Graph& g, VertexIndex v) {
  std::int64_t total = 0;
  for (auto [w, m] : g.neighbors(v)) total = checked_sub(total, m);
  return total;
}

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_.at(r * cols_ + c);
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_.at(r * cols_ + c);
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
    if (x.size() != cols_) throw InvalidArgumentError("matrix/vector size mismatch");
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        out[r] = checked_add(out[r], checked_mul((*this)(r, c), x[c]));
      }
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Intersection matrix: off-diagonal v.w, diagonal -sum_{w != v} v.w. Applied
// to the indicator of Z it gives the principal divisor of firing Z.
inline IntMatrix laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix l(n, n);
  for (VertexIndex v = 0; v < n; ++v) {
    for (auto [w, m] : g.neighbors(v)) {
      l(v, w) = m;
      l(v, v) = checked_sub(l(v, v), m);
    }
  }
  return l;
}

// Fresh id "<base>.z<k>", skipping ids already taken.
inline std::string fresh_vertex_id(
    const std::string& base, std::int64_t& next,
    const std::unordered_map<std::string, VertexIndex>& taken) {
  for (;;) {
    std::string id = base + ".z" + std::to_string(next++);
    if (!taken.count(id)) return id;
  }
}

// Weightless loopless surrogate of a graph. Each vertex v gets g(v) fresh
// vertices z_v^1..z_v^g(v), each joined to v by two parallel edges.
struct HatEmbedding {
  Graph source;
  Graph target;
  // Indexed by source vertex; indices into target.
  std::vector<std::vector<VertexIndex>> added_vertices;
};

inline HatEmbedding hat_graph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Graph::Vertex> vertices;
  std::unordered_map<std::string, VertexIndex> taken;
  for (VertexIndex v = 0; v < n; ++v) {
    vertices.push_back({g.id(v), 0});
    taken.emplace(g.id(v), v);
  }
  std::vector<Graph::Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.a != e.b) edges.push_back(e);
  }
  std::vector<std::vector<VertexIndex>> added(n);
  for (VertexIndex v = 0; v < n; ++v) {
    std::int64_t next = 1;
    for (std::int64_t k = 0; k < g.local_genus(v); ++k) {
      std::string id = fresh_vertex_id(g.id(v), next, taken);
      const VertexIndex z = vertices.size();
      taken.emplace(id, z);
      vertices.push_back({std::move(id), 0});
      edges.push_back({v, z, 2});
      added[v].push_back(z);
    }
  }
  return {g, Graph(std::move(vertices), edges), std::move(added)};
}

// G0: loops removed, weights dropped.
inline Graph simplify_g0(const Graph& g) {
  std::vector<Graph::Vertex> vertices;
  for (const auto& v : g.vertices()) vertices.push_back({v.id, 0});
  std::vector<Graph::Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.a != e.b) edges.push_back(e);
  }
  return Graph(std::move(vertices), edges);
}

// Every loop subdivided by a fresh weight-0 vertex; weights kept.
struct BulletEmbedding {
  Graph source;
  Graph target;
  // source vertex index -> target vertex index (identity on the prefix).
  std::vector<VertexIndex> correspondence;
  std::vector<std::vector<VertexIndex>> added_vertices;
};

inline BulletEmbedding bullet_graph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Graph::Vertex> vertices = g.vertices();
  std::unordered_map<std::string, VertexIndex> taken;
  for (VertexIndex v = 0; v < n; ++v) taken.emplace(g.id(v), v);
  std::vector<Graph::Edge> edges;
  std::vector<std::vector<VertexIndex>> added(n);
  for (const auto& e : g.edges()) {
    if (e.a != e.b) edges.push_back(e);
  }
  for (VertexIndex v = 0; v < n; ++v) {
    std::int64_t next = 1;
    for (std::int64_t k = 0; k < g.loops(v); ++k) {
      std::string id = fresh_vertex_id(g.id(v), next, taken);
      const VertexIndex z = vertices.size();
      taken.emplace(id, z);
      vertices.push_back({std::move(id), 0});
      edges.push_back({v, z, 2});
      added[v].push_back(z);
    }
  }
  std::vector<VertexIndex> corr(n);
  for (VertexIndex v = 0; v < n; ++v) corr[v] = v;
  return {g, Graph(std::move(vertices), edges), std::move(corr), std::move(added)};
}

}  // namespace chipfire

#endif  // CHIPFIRE_GRAPH_HPP_
