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

#include <sstream>

#include "chipfire/cli.hpp"

namespace chipfire {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CHIPFIRE_DATA_DIR) + "/" + name; }

const char* const kDhar5Divisor = "v1=1,v2=2,v3=4,v4=4";

TEST(Cli, Rank) {
  const CliRun r = run({"rank", data("dhar5.graph"), "-d", kDhar5Divisor});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("rank = 2", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("witness = "), std::string::npos);

  const CliRun w = run({"rank", data("weighted-binary.graph"), "-d", "v1=3,v2=4"});
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out.rfind("rank = 2 (method: rank-explicit)", 0), 0u) << w.out;
}

TEST(Cli, Dhar) {
  const CliRun r = run({"dhar", data("dhar5.graph"), "-d", kDhar5Divisor, "-u", "v0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "layer 0: v0\nlayer 1: v1\nlayer 2: v2\nunburned: v3,v4\nreduced: no\n");
}

TEST(Cli, StructuralCommands) {
  EXPECT_EQ(run({"genus", data("dhar5.graph")}).out, "genus = 10\n");
  EXPECT_EQ(run({"canonical", data("dhar5.graph")}).out,
            "canonical = v0=4,v1=4,v2=4,v3=4,v4=2\n");
  const CliRun hat = run({"hat", data("weighted-binary.graph")});
  EXPECT_EQ(hat.code, 0);
  EXPECT_NE(hat.out.find("e v2 v2.z2 2"), std::string::npos) << hat.out;
  EXPECT_EQ(run({"g0", data("rose.graph")}).out, "v v\n");
  EXPECT_EQ(run({"bullet", data("rose.graph")}).out, "v v 2\nv v.z1\ne v v.z1 2\n");
}

TEST(Cli, ReduceEquivSaturate) {
  const CliRun red = run({"reduce", data("dhar5.graph"), "-d", kDhar5Divisor, "-u", "v0"});
  EXPECT_EQ(red.out, "reduced = v0=6,v1=0,v2=1,v3=4,v4=0\nscript = v0=0,v1=1,v2=1,v3=1,v4=2\n");
  const CliRun eq = run({"equiv", data("dhar5.graph"), "-d", kDhar5Divisor, "-e", "v0=2,v1=3,v2=4,v4=2"});
  EXPECT_EQ(eq.out.rfind("equivalent: yes\n", 0), 0u);
  const CliRun ne = run({"equiv", data("dhar5.graph"), "-d", kDhar5Divisor, "-e", "v0=1"});
  EXPECT_EQ(ne.out, "equivalent: no\n");
  const CliRun sat = run({"saturate", data("dhar5.graph"), "-d", kDhar5Divisor, "-u", "v0"});
  EXPECT_EQ(sat.out.rfind("added edges m = 8\n", 0), 0u);
  EXPECT_NE(sat.out.find("e v0 v3 6"), std::string::npos);
}

TEST(Cli, Verdicts) {
  const CliRun rr = run({"rr-check", data("dhar5.graph"), "-d", kDhar5Divisor});
  EXPECT_EQ(rr.code, 0);
  EXPECT_NE(rr.out.find("residual = 0\nPASS"), std::string::npos);
  const CliRun cl = run({"clifford", data("dhar5.graph"), "-d", kDhar5Divisor});
  EXPECT_EQ(cl.code, 0);
  EXPECT_NE(cl.out.find("PASS"), std::string::npos);
}

TEST(Cli, Json) {
  const CliRun r = run({"rank", data("dhar5.graph"), "-d", kDhar5Divisor, "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rank"], 2);
  EXPECT_EQ(doc["witness"].size(), 5u);
  EXPECT_EQ(run({"rank", data("dhar5.graph"), "-d", kDhar5Divisor, "--json"}).out, r.out);

  const auto dhar = nlohmann::json::parse(
      run({"dhar", data("dhar5.graph"), "-d", kDhar5Divisor, "-u", "v0", "--json"}).out);
  EXPECT_EQ(dhar["unburned"], nlohmann::json({"v3", "v4"}));
  EXPECT_EQ(dhar["layers"].size(), 3u);

  const auto genus_doc = nlohmann::json::parse(run({"genus", data("three-component.graph"), "--json"}).out);
  EXPECT_EQ(genus_doc["genus"], 8);
}

TEST(Cli, DomainErrorsExitOne) {
  const CliRun unknown = run({"rank", data("dhar5.graph"), "-d", "x=1"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("'x'"), std::string::npos);

  const CliRun vertex = run({"reduce", data("dhar5.graph"), "-d", "", "-u", "nope"});
  EXPECT_EQ(vertex.code, 1);
  EXPECT_NE(vertex.err.find("'nope'"), std::string::npos);

  const CliRun missing = run({"genus", data("no-such.graph")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("no-such.graph"), std::string::npos);

  const CliRun integer = run({"rank", data("dhar5.graph"), "-d", "v1=abc"});
  EXPECT_EQ(integer.code, 1);
  EXPECT_NE(integer.err.find("'abc'"), std::string::npos);

  const CliRun negative = run({"dhar", data("dhar5.graph"), "-d", "v1=-1", "-u", "v0"});
  EXPECT_EQ(negative.code, 1);
  EXPECT_NE(negative.err.find("v1"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"rank", data("dhar5.graph")}).code, 2);
  EXPECT_EQ(run({"sweep", "--trials", "many"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SweepIsDeterministic) {
  const std::vector<std::string> args{"sweep", "--trials", "40", "--seed", "9", "--json"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(nlohmann::json::parse(a.out)["pass"].get<bool>());
  const CliRun text = run({"sweep", "--trials", "20", "--vertices", "3", "--max-edges", "4",
                        "--max-weight", "1", "--seed", "2"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("sweep: PASS"), std::string::npos);
}

}  // namespace
}  // namespace chipfire
