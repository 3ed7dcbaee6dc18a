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

#ifndef CHIPFIRE_LINEAR_HPP_
#define CHIPFIRE_LINEAR_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Rank of an integer matrix over the rationals.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Solves L x = t over the integers for the Laplacian of a connected graph.
//
// The reduced Laplacian (last row and column deleted) is nonsingular by the
// matrix-tree theorem. It is inverted once over the rationals and stored as
// det * inverse, an integer matrix, so each solve is a matrix-vector product
// followed by a divisibility check.
class LaplacianSolver {
 public:
  explicit LaplacianSolver(const Graph& g) : n_(g.vertex_count()) {
    if (!g.is_connected()) throw DisconnectedGraphError("principal_script");
    if (n_ <= 1) {
      det_ = 1;
      return;
    }
    const std::size_t m = n_ - 1;
    IntMatrix l = laplacian(g);
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(2 * m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) a[r][c] = l(r, c);
      a[r][m + r] = 1;
    }
    Rational det = 1;
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t pivot = c;
      while (pivot < m && a[pivot][c] == 0) ++pivot;
      if (pivot == m) throw InternalError("reduced Laplacian is singular");
      if (pivot != c) {
        std::swap(a[pivot], a[c]);
        det = -det;
      }
      det *= a[c][c];
      Rational inv = 1 / a[c][c];
      for (std::size_t k = 0; k < 2 * m; ++k) a[c][k] *= inv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rational f = a[r][c];
        for (std::size_t k = 0; k < 2 * m; ++k) a[r][k] -= f * a[c][k];
      }
    }
    // |det| is the number of spanning trees; integral.
    det_ = boost::multiprecision::numerator(det);
    if (det_ < 0) det_ = -det_;
    adjugate_.assign(m, std::vector<BigInt>(m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        Rational scaled = a[r][m + c] * Rational(det_);
        if (boost::multiprecision::denominator(scaled) != 1) {
          throw InternalError("scaled inverse is not integral");
        }
        adjugate_[r][c] = boost::multiprecision::numerator(scaled);
      }
    }
  }

  std::size_t size() const { return n_; }

  // |det| of the reduced Laplacian: the spanning-tree count.
  const BigInt& tree_count() const { return det_; }

  // Integer x with L x = t and x(last) = 0, or nullopt when t is not in the
  // integer image of L.
  std::optional<std::vector<std::int64_t>> solve(
      const std::vector<std::int64_t>& t) const {
    if (t.size() != n_) throw InvalidArgumentError("solve: size mismatch");
    std::int64_t degree = 0;
    for (std::int64_t v : t) degree = checked_add(degree, v);
    if (degree != 0) return std::nullopt;
    std::vector<std::int64_t> x(n_, 0);
    if (n_ <= 1) return x;
    const std::size_t m = n_ - 1;
    for (std::size_t r = 0; r < m; ++r) {
      BigInt acc = 0;
      for (std::size_t c = 0; c < m; ++c) acc += adjugate_[r][c] * t[c];
      if (acc % det_ != 0) return std::nullopt;
      BigInt q = acc / det_;
      if (q > std::numeric_limits<std::int64_t>::max() ||
          q < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("firing script exceeds 64-bit range");
      }
      x[r] = static_cast<std::int64_t>(q);
    }
    return x;
  }

 private:
  std::size_t n_;
  BigInt det_;
  std::vector<std::vector<BigInt>> adjugate_;
};

}  // namespace chipfire

#endif  // CHIPFIRE_LINEAR_HPP_
