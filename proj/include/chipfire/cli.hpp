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

#ifndef CHIPFIRE_CLI_HPP_
#define CHIPFIRE_CLI_HPP_

// Command-line front end. Exit codes: 0 success, 1 domain error or failed
// verdict, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/io.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/sweep.hpp"

namespace chipfire {

namespace cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const Graph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"id", v.id}, {"weight", v.weight}});
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"a", g.id(e.a)}, {"b", g.id(e.b)}, {"multiplicity", e.multiplicity}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

template <typename Function>
Json values_json(const Function& f) {
  Json out = Json::object();
  for (VertexIndex v = 0; v < f.graph().vertex_count(); ++v) out[f.graph().id(v)] = f[v];
  return out;
}

inline Json ids_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (const auto& id : ids_of(g, s)) out.push_back(id);
  return out;
}

inline std::string join_ids(const Graph& g, const VertexSet& s) {
  std::string out;
  for (const auto& id : ids_of(g, s)) {
    if (!out.empty()) out += ',';
    out += id;
  }
  return out.empty() ? "(none)" : out;
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read graph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_graph(text.str()).graph;
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

struct Shared {
  std::string graph_path;
  std::string divisor;
  std::string other;
  std::string vertex;
  bool json = false;
  std::uint64_t budget = kDefaultRankBudget;
};

inline void emit(std::ostream& out, bool json, const Json& doc, const std::string& text) {
  if (json) {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli::Json;
  CLI::App app{"Divisors, reduction and rank on vertex-weighted multigraphs", "chipfire"};
  app.require_subcommand(1);
  cli::Shared s;
  SweepConfig sweep_config;
  std::function<int()> action;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", s.graph_path, "Graph file")->required();
    sub->add_flag("--json", s.json, "Machine-readable output");
  };
  auto add_divisor = [&](CLI::App* sub) {
    sub->add_option("-d,--divisor", s.divisor, "Divisor as id=int,...")->required();
  };
  auto add_vertex = [&](CLI::App* sub) {
    sub->add_option("-u,--vertex", s.vertex, "Base vertex id")->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", s.budget, "Reduction budget for rank searches");
  };

  auto* genus_cmd = app.add_subcommand("genus", "Genus of the graph");
  add_graph(genus_cmd);
  genus_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const std::int64_t value = genus(g);
      cli::emit(out, s.json, {{"command", "genus"}, {"genus", value}},
                "genus = " + std::to_string(value) + "\n");
      return 0;
    };
  });

  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical divisor");
  add_graph(canonical_cmd);
  canonical_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor k = canonical_divisor(g);
      cli::emit(out, s.json,
                {{"command", "canonical"}, {"canonical", cli::values_json(k)},
                 {"degree", k.degree()}},
                "canonical = " + render_divisor(k) + "\n");
      return 0;
    };
  });

  struct Structural {
    const char* name;
    const char* help;
    std::function<Graph(const Graph&)> build;
  };
  const Structural structural[] = {
      {"hat", "Weightless loopless surrogate graph",
       [](const Graph& g) { return hat_graph(g).target; }},
      {"g0", "Graph with loops and weights removed", [](const Graph& g) { return simplify_g0(g); }},
      {"bullet", "Graph with every loop subdivided",
       [](const Graph& g) { return bullet_graph(g).target; }},
  };
  for (const auto& st : structural) {
    auto* sub = app.add_subcommand(st.name, st.help);
    add_graph(sub);
    sub->callback([&, st] {
      action = [&, st] {
        const Graph h = st.build(cli::load_graph(s.graph_path));
        cli::emit(out, s.json, {{"command", st.name}, {"graph", cli::to_json(h)}},
                  render_graph(h));
        return 0;
      };
    });
  }

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a divisor");
  add_graph(rank_cmd);
  add_divisor(rank_cmd);
  add_budget(rank_cmd);
  rank_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor d = parse_divisor(s.divisor, g);
      const RankResult r = rank(g, d, {s.budget, true});
      std::string text = "rank = " + std::to_string(r.rank) + " (method: " +
                         std::string(to_string(r.method)) + ")\n";
      Json doc{{"command", "rank"}, {"rank", r.rank}, {"method", to_string(r.method)}};
      if (r.witness) {
        text += "witness = " + render_divisor(*r.witness) + "\n";
        doc["witness"] = cli::values_json(*r.witness);
      }
      cli::emit(out, s.json, doc, text);
      return 0;
    };
  });

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced representative at a vertex");
  add_graph(reduce_cmd);
  add_divisor(reduce_cmd);
  add_vertex(reduce_cmd);
  reduce_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor d = parse_divisor(s.divisor, g);
      const auto [red, script] = reduce(g, d, std::string_view(s.vertex));
      cli::emit(out, s.json,
                {{"command", "reduce"}, {"vertex", s.vertex},
                 {"reduced", cli::values_json(red)}, {"script", cli::values_json(script)}},
                "reduced = " + render_divisor(red) + "\nscript = " + render_values(script) +
                    "\n");
      return 0;
    };
  });

  auto* dhar_cmd = app.add_subcommand("dhar", "Dhar burning decomposition");
  add_graph(dhar_cmd);
  add_divisor(dhar_cmd);
  add_vertex(dhar_cmd);
  dhar_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor d = parse_divisor(s.divisor, g);
      const DharDecomposition dec = dhar(g, d, std::string_view(s.vertex));
      std::string text;
      Json layers = Json::array();
      for (std::size_t j = 0; j < dec.layers.size(); ++j) {
        text += "layer " + std::to_string(j) + ": " + cli::join_ids(g, dec.layers[j]) + "\n";
        layers.push_back(cli::ids_json(g, dec.layers[j]));
      }
      text += "unburned: " + cli::join_ids(g, dec.unburned) + "\n";
      text += std::string("reduced: ") + (dec.reduced() ? "yes" : "no") + "\n";
      cli::emit(out, s.json,
                {{"command", "dhar"}, {"vertex", s.vertex}, {"layers", std::move(layers)},
                 {"unburned", cli::ids_json(g, dec.unburned)}, {"reduced", dec.reduced()}},
                text);
      return 0;
    };
  });

  auto* equiv_cmd = app.add_subcommand("equiv", "Linear equivalence of two divisors");
  add_graph(equiv_cmd);
  add_divisor(equiv_cmd);
  equiv_cmd->add_option("-e,--other", s.other, "Second divisor")->required();
  equiv_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor d1 = parse_divisor(s.divisor, g);
      const Divisor d2 = parse_divisor(s.other, g);
      const Equivalence eq = equivalent(g, d1, d2);
      std::string text = std::string("equivalent: ") + (eq.equivalent ? "yes" : "no") + "\n";
      Json doc{{"command", "equiv"}, {"equivalent", eq.equivalent}};
      if (eq.script) {
        text += "script = " + render_values(*eq.script) + "\n";
        doc["script"] = cli::values_json(*eq.script);
      }
      cli::emit(out, s.json, doc, text);
      return 0;
    };
  });

  auto* saturate_cmd = app.add_subcommand("saturate", "Add edges at u until d is u-reduced");
  add_graph(saturate_cmd);
  add_divisor(saturate_cmd);
  add_vertex(saturate_cmd);
  saturate_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor d = parse_divisor(s.divisor, g);
      const Saturation sat = saturate(g, d, std::string_view(s.vertex));
      cli::emit(out, s.json,
                {{"command", "saturate"}, {"vertex", s.vertex}, {"added_edges", sat.added_edges},
                 {"graph", cli::to_json(sat.graph)}},
                "added edges m = " + std::to_string(sat.added_edges) + "\n" +
                    render_graph(sat.graph));
      return 0;
    };
  });

  auto* rr_cmd = app.add_subcommand("rr-check", "Riemann-Roch residual of a divisor");
  add_graph(rr_cmd);
  add_divisor(rr_cmd);
  add_budget(rr_cmd);
  rr_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor d = parse_divisor(s.divisor, g);
      const RankOptions opts{s.budget, true};
      const std::int64_t r = rank(g, d, opts).rank;
      const std::int64_t r_dual = rank(g, canonical_divisor(g) - d, opts).rank;
      const std::int64_t residual = riemann_roch_residual(g, d, opts);
      const bool ok = residual == 0;
      std::ostringstream text;
      text << "r(d) = " << r << "\nr(K-d) = " << r_dual << "\ndeg(d) = " << d.degree()
           << "\ngenus = " << genus(g) << "\nresidual = " << residual << "\n"
           << (ok ? "PASS" : "FAIL") << "\n";
      cli::emit(out, s.json,
                {{"command", "rr-check"}, {"rank", r}, {"rank_dual", r_dual},
                 {"degree", d.degree()}, {"genus", genus(g)}, {"residual", residual},
                 {"pass", ok}},
                text.str());
      return ok ? 0 : 1;
    };
  });

  auto* clifford_cmd = app.add_subcommand("clifford", "Clifford inequality for a divisor");
  add_graph(clifford_cmd);
  add_divisor(clifford_cmd);
  add_budget(clifford_cmd);
  clifford_cmd->callback([&] {
    action = [&] {
      const Graph g = cli::load_graph(s.graph_path);
      const Divisor d = parse_divisor(s.divisor, g);
      const std::int64_t deg = d.degree();
      const bool applies = deg >= 0 && deg <= 2 * genus(g) - 2;
      const std::int64_t r = rank(g, d, {s.budget, true}).rank;
      const bool ok = clifford_check(g, d, {s.budget, true});
      std::ostringstream text;
      text << "r(d) = " << r << "\ndeg(d) = " << deg << "\napplicable: "
           << (applies ? "yes" : "no") << "\n"
           << (ok ? "PASS" : "FAIL") << "\n";
      cli::emit(out, s.json,
                {{"command", "clifford"}, {"rank", r}, {"degree", deg}, {"applicable", applies},
                 {"pass", ok}},
                text.str());
      return ok ? 0 : 1;
    };
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "Seeded randomized property suite");
  sweep_cmd->add_option("--vertices", sweep_config.graphs.max_vertices, "Maximum vertex count")
      ->check(CLI::Range(1, 64));
  sweep_cmd->add_option("--max-edges", sweep_config.graphs.max_edges,
                        "Maximum total edge multiplicity")
      ->check(CLI::Range(0, 1000));
  sweep_cmd->add_option("--max-weight", sweep_config.graphs.max_weight, "Maximum vertex weight")
      ->check(CLI::Range(0, 100));
  sweep_cmd->add_option("--max-value", sweep_config.max_abs_value, "Maximum |d(v)|")
      ->check(CLI::Range(0, 1000));
  sweep_cmd->add_option("--trials", sweep_config.trials, "Number of random graphs");
  sweep_cmd->add_option("--seed", sweep_config.seed, "Generator seed");
  sweep_cmd->add_option("--budget", sweep_config.budget, "Reduction budget per rank search");
  sweep_cmd->add_flag("--json", s.json, "Machine-readable output");
  sweep_cmd->callback([&] {
    action = [&] {
      const SweepReport report = run_sweep(sweep_config);
      Json props = Json::array();
      for (const auto& p : report.properties) {
        Json examples = Json::array();
        for (const auto& e : p.examples) examples.push_back(e);
        props.push_back({{"name", p.name}, {"checked", p.checked}, {"failed", p.failed},
                         {"examples", std::move(examples)}});
      }
      cli::emit(out, s.json,
                {{"command", "sweep"}, {"seed", sweep_config.seed}, {"graphs", report.graphs},
                 {"properties", std::move(props)}, {"pass", report.ok()}},
                report.render());
      return report.ok() ? 0 : 1;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace chipfire

#endif  // CHIPFIRE_CLI_HPP_
