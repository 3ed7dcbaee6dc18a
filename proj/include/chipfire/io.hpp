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

#ifndef CHIPFIRE_IO_HPP_
#define CHIPFIRE_IO_HPP_

// Plain-text graph format, one declaration per line:
//
//   # comment
//   v <id> [<weight>]          weight >= 0, default 0
//   e <id1> <id2> [<mult>]     mult >= 1, default 1; id1 == id2 is a loop
//
// Ids match [A-Za-z0-9_-]+. Repeated `e` lines add up. Divisors are written
// as comma-separated `id=int` entries; omitted vertices are 0.

#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

struct GraphDocument {
  Graph graph;
  // Line of the `v` declaration of each vertex, by index.
  std::vector<std::size_t> vertex_lines;
};

namespace detail {

inline bool is_file_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

inline std::string_view trim(std::string_view s) {
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace detail

inline GraphDocument parse_graph(std::string_view text) {
  std::vector<Graph::Vertex> vertices;
  std::vector<std::size_t> lines;
  std::unordered_map<std::string, VertexIndex> index;
  std::vector<Graph::Edge> edges;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view kind = tokens[0];
    if (kind == "v") {
      if (tokens.size() < 2 || tokens.size() > 3) {
        throw ParseError(line_no, "expected 'v <id> [<weight>]'");
      }
      const std::string id(tokens[1]);
      if (!detail::is_file_id(id)) throw ParseError(line_no, "bad vertex id '" + id + "'");
      std::int64_t weight = 0;
      if (tokens.size() == 3) {
        auto w = detail::parse_int(tokens[2]);
        if (!w) throw ParseError(line_no, "bad weight '" + std::string(tokens[2]) + "'");
        if (*w < 0) {
          throw ParseError(line_no, "negative weight '" + std::string(tokens[2]) +
                                        "' on vertex '" + id + "'");
        }
        weight = *w;
      }
      if (!index.emplace(id, vertices.size()).second) {
        throw ParseError(line_no, "duplicate vertex '" + id + "'");
      }
      vertices.push_back({id, weight});
      lines.push_back(line_no);
    } else if (kind == "e") {
      if (tokens.size() < 3 || tokens.size() > 4) {
        throw ParseError(line_no, "expected 'e <id1> <id2> [<mult>]'");
      }
      VertexIndex ends[2];
      for (int k = 0; k < 2; ++k) {
        const std::string id(tokens[1 + k]);
        if (!detail::is_file_id(id)) throw ParseError(line_no, "bad vertex id '" + id + "'");
        auto it = index.find(id);
        if (it == index.end()) throw ParseError(line_no, "unknown vertex '" + id + "'");
        ends[k] = it->second;
      }
      std::int64_t mult = 1;
      if (tokens.size() == 4) {
        auto m = detail::parse_int(tokens[3]);
        if (!m) throw ParseError(line_no, "bad multiplicity '" + std::string(tokens[3]) + "'");
        if (*m < 1) {
          throw ParseError(line_no, "multiplicity must be at least 1, got '" +
                                        std::string(tokens[3]) + "'");
        }
        mult = *m;
      }
      edges.push_back({ends[0], ends[1], mult});
    } else {
      throw ParseError(line_no, "unknown declaration '" + std::string(kind) + "'");
    }
    if (end == text.size()) break;
  }
  try {
    return {Graph(std::move(vertices), edges), std::move(lines)};
  } catch (const OverflowError& e) {
    throw ParseError(0, std::string("edge multiplicity overflow: ") + e.what());
  }
}

inline std::string render_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) {
    out << "v " << v.id;
    if (v.weight != 0) out << ' ' << v.weight;
    out << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "e " << g.id(e.a) << ' ' << g.id(e.b);
    if (e.multiplicity != 1) out << ' ' << e.multiplicity;
    out << '\n';
  }
  return out.str();
}

inline Divisor parse_divisor(std::string_view text, const Graph& g) {
  Divisor d(g);
  std::unordered_set<std::string> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view entry = detail::trim(text.substr(start, end - start));
    start = end + 1;
    if (entry.empty()) {
      if (end == text.size()) break;
      throw ParseError(0, "empty divisor entry");
    }
    const std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(0, "expected 'id=int' in divisor entry '" + std::string(entry) + "'");
    }
    const std::string id(detail::trim(entry.substr(0, eq)));
    const std::string_view number = detail::trim(entry.substr(eq + 1));
    auto v = g.find(id);
    if (!v) throw UnknownVertexError(id);
    if (!seen.insert(id).second) throw ParseError(0, "duplicate divisor entry '" + id + "'");
    auto value = detail::parse_int(number);
    if (!value) {
      throw ParseError(0, "malformed integer '" + std::string(number) + "' for vertex '" +
                              id + "'");
    }
    d[*v] = *value;
    if (end == text.size()) break;
  }
  return d;
}

// Every vertex, zeros included, in vertex order.
template <typename Function>
std::string render_values(const Function& f) {
  std::string out;
  const Graph& g = f.graph();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (v) out += ',';
    out += g.id(v) + "=" + std::to_string(f[v]);
  }
  return out;
}

inline std::string render_divisor(const Divisor& d) { return render_values(d); }

}  // namespace chipfire

#endif  // CHIPFIRE_IO_HPP_
