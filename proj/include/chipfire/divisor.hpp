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

#ifndef CHIPFIRE_DIVISOR_HPP_
#define CHIPFIRE_DIVISOR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chipfire/checked.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/linear.hpp"

namespace chipfire {

namespace detail {

// Integer vector bound to the vertices of one graph. Shared base of Divisor
// and FiringScript, which are deliberately distinct types.
template <typename Derived>
class VertexFunction {
 public:
  explicit VertexFunction(Graph g)
      : graph_(std::move(g)), values_(graph_.vertex_count(), 0) {}

  VertexFunction(Graph g, std::vector<std::int64_t> values)
      : graph_(std::move(g)), values_(std::move(values)) {
    if (values_.size() != graph_.vertex_count()) {
      throw InvalidArgumentError("value count does not match vertex count");
    }
  }

  // Values by id; omitted vertices are 0.
  static Derived from_ids(
      const Graph& g,
      std::initializer_list<std::pair<std::string_view, std::int64_t>> entries) {
    Derived out(g);
    for (auto [id, value] : entries) out.values_[g.index_of(id)] = value;
    return out;
  }

  const Graph& graph() const { return graph_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  std::int64_t operator[](VertexIndex v) const { return values_.at(v); }
  std::int64_t& operator[](VertexIndex v) { return values_.at(v); }
  std::int64_t at(std::string_view id) const {
    return values_[graph_.index_of(id)];
  }

  bool bound_to(const Graph& g) const {
    return graph_.same_instance(g) || graph_ == g;
  }

  friend bool operator==(const Derived& x, const Derived& y) {
    return x.values_ == y.values_ && x.bound_to(y.graph_);
  }

 protected:
  Graph graph_;
  std::vector<std::int64_t> values_;
};

}  // namespace detail

// Integer-valued function on the vertices of a graph.
class Divisor : public detail::VertexFunction<Divisor> {
 public:
  using VertexFunction::VertexFunction;

  // Indicator divisor of a vertex set.
  static Divisor indicator(const Graph& g, const VertexSet& s) {
    Divisor d(g);
    for (VertexIndex v : s.members()) d.values_[v] = 1;
    return d;
  }

  // The divisor of a single vertex.
  static Divisor point(const Graph& g, VertexIndex v, std::int64_t n = 1) {
    Divisor d(g);
    d.values_.at(v) = n;
    return d;
  }

  std::int64_t degree() const {
    std::int64_t total = 0;
    for (std::int64_t v : values_) total = checked_add(total, v);
    return total;
  }

  bool is_effective() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](std::int64_t v) { return v >= 0; });
  }

  // d contains e: both effective and d - e effective.
  bool contains(const Divisor& e) const;

  Divisor& operator+=(const Divisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      values_[i] = checked_add(values_[i], o.values_[i]);
    }
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      values_[i] = checked_sub(values_[i], o.values_[i]);
    }
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(Divisor a) {
    for (auto& v : a.values_) v = checked_neg(v);
    return a;
  }
  friend Divisor operator*(std::int64_t k, Divisor a) {
    for (auto& v : a.values_) v = checked_mul(k, v);
    return a;
  }

 private:
  void check_same(const Divisor& o) const {
    if (!bound_to(o.graph_)) throw GraphMismatchError("divisor arithmetic");
  }
};

inline bool Divisor::contains(const Divisor& e) const {
  if (!bound_to(e.graph())) throw GraphMismatchError("contains");
  return is_effective() && e.is_effective() && (*this - e).is_effective();
}

// Integer level function x witnessing L x = t. Scripts differing by a
// constant act identically; the canonical form has minimum level 0.
class FiringScript : public detail::VertexFunction<FiringScript> {
 public:
  using VertexFunction::VertexFunction;

  FiringScript canonical() const {
    FiringScript out = *this;
    if (values_.empty()) return out;
    const std::int64_t lo = *std::min_element(values_.begin(), values_.end());
    for (auto& v : out.values_) v = checked_sub(v, lo);
    return out;
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](std::int64_t v) { return v == 0; });
  }

  // Fire the vertices of `s` `times` more times.
  void add_to(const VertexSet& s, std::int64_t times) {
    for (VertexIndex v : s.members()) values_[v] = checked_add(values_[v], times);
  }
};

// Principal divisor of firing Z: v.Z off Z, -v.Z^c on Z.
inline Divisor t_z(const Graph& g, const VertexSet& z) {
  if (z.universe() != g.vertex_count()) {
    throw InvalidArgumentError("t_Z: vertex set size mismatch");
  }
  Divisor out(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (auto [w, m] : g.neighbors(v)) {
      if (z.contains(v) == z.contains(w)) continue;
      out[v] = z.contains(v) ? checked_sub(out[v], m) : checked_add(out[v], m);
    }
  }
  return out;
}

inline Divisor t_z(const Graph& g, std::initializer_list<std::string_view> ids) {
  return t_z(g, VertexSet::of(g, ids));
}

// L x.
inline Divisor apply_script(const Graph& g, const FiringScript& x) {
  if (!x.bound_to(g)) throw GraphMismatchError("apply_script");
  Divisor out(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::int64_t acc = 0;
    for (auto [w, m] : g.neighbors(v)) {
      acc = checked_add(acc, checked_mul(m, checked_sub(x[w], x[v])));
    }
    out[v] = acc;
  }
  return out;
}

// Canonical script x with L x = t, or nullopt when t is not principal.
inline std::optional<FiringScript> principal_script(const LaplacianSolver& solver,
                                                    const Graph& g,
                                                    const Divisor& t) {
  if (!t.bound_to(g)) throw GraphMismatchError("principal_script");
  auto x = solver.solve(t.values());
  if (!x) return std::nullopt;
  return FiringScript(g, std::move(*x)).canonical();
}

inline std::optional<FiringScript> principal_script(const Graph& g,
                                                    const Divisor& t) {
  if (!g.is_connected()) throw DisconnectedGraphError("principal_script");
  return principal_script(LaplacianSolver(g), g, t);
}

// Level sets Z_0..Z_m of the canonical script of a nonzero principal divisor,
// so that t = sum_i i * t_{Z_i}. Intermediate levels may be empty.
inline std::vector<VertexSet> layer_decomposition(const Graph& g,
                                                  const Divisor& t) {
  auto x = principal_script(g, t);
  if (!x) throw InvalidArgumentError("layer_decomposition: divisor is not principal");
  if (x->is_zero()) throw InvalidArgumentError("layer_decomposition: divisor is zero");
  const auto& levels = x->values();
  const std::int64_t top = *std::max_element(levels.begin(), levels.end());
  std::vector<VertexSet> layers(static_cast<std::size_t>(top) + 1,
                                VertexSet(g.vertex_count()));
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    layers[static_cast<std::size_t>(levels[v])].insert(v);
  }
  return layers;
}

// Result of a linear-equivalence test. On success `script` satisfies
// d1 + L script = d2.
struct Equivalence {
  bool equivalent = false;
  std::optional<FiringScript> script;

  explicit operator bool() const { return equivalent; }
};

inline Equivalence equivalent(const LaplacianSolver& solver, const Graph& g,
                              const Divisor& d1, const Divisor& d2) {
  if (!d1.bound_to(g) || !d2.bound_to(g)) throw GraphMismatchError("equivalent");
  auto x = principal_script(solver, g, d2 - d1);
  if (!x) return {};
  return {true, std::move(x)};
}

inline Equivalence equivalent(const Graph& g, const Divisor& d1,
                              const Divisor& d2) {
  if (!g.is_connected()) throw DisconnectedGraphError("equivalent");
  return equivalent(LaplacianSolver(g), g, d1, d2);
}

// k_G(v) = val(v) + 2 w(v) - 2.
inline Divisor canonical_divisor(const Graph& g) {
  Divisor k(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    k[v] = checked_sub(checked_add(valency(g, v), checked_mul(2, g.weight(v))), 2);
  }
  return k;
}

// e^g = e + min(e, g).
inline std::int64_t e_sup(std::int64_t e, std::int64_t g) {
  if (e < 0 || g < 0) throw InvalidArgumentError("e_sup: negative input");
  return checked_add(e, std::min(e, g));
}

// d_g = max(d - g, floor(d / 2)).
inline std::int64_t d_sub(std::int64_t d, std::int64_t g) {
  if (d < 0 || g < 0) throw InvalidArgumentError("d_sub: negative input");
  return std::max(d - g, d / 2);
}

inline Divisor e_deg(const Graph& g, const Divisor& e) {
  if (!e.bound_to(g)) throw GraphMismatchError("e_deg");
  if (!e.is_effective()) throw InvalidArgumentError("e_deg: divisor is not effective");
  Divisor out(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out[v] = e_sup(e[v], g.local_genus(v));
  }
  return out;
}

inline Divisor d_rk(const Graph& g, const Divisor& d) {
  if (!d.bound_to(g)) throw GraphMismatchError("d_rk");
  if (!d.is_effective()) throw InvalidArgumentError("d_rk: divisor is not effective");
  Divisor out(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out[v] = d_sub(d[v], g.local_genus(v));
  }
  return out;
}

// Lower bound for the rank: -1 off the effective cone, else min of d_rk.
inline std::int64_t ell(const Graph& g, const Divisor& d) {
  if (!d.is_effective()) return -1;
  const Divisor rk = d_rk(g, d);
  if (rk.size() == 0) return -1;
  return *std::min_element(rk.values().begin(), rk.values().end());
}

// Extension by zero to the hat graph.
inline Divisor hat_divisor(const HatEmbedding& emb, const Divisor& d) {
  if (!d.bound_to(emb.source)) throw GraphMismatchError("hat_divisor");
  Divisor out(emb.target);
  for (VertexIndex v = 0; v < emb.source.vertex_count(); ++v) out[v] = d[v];
  return out;
}

}  // namespace chipfire

#endif  // CHIPFIRE_DIVISOR_HPP_
