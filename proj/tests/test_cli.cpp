// Copyright 2026 The ppsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "ppsim/io.hpp"
#include "support.hpp"

namespace ppsim {
namespace {

using io::Json;
using testing::data_path;

struct Invocation {
  int status = -1;
  std::string out;
  std::string err;
};

std::filesystem::path workdir() {
  const auto dir = std::filesystem::temp_directory_path() / "ppsim_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Invocation run(const std::vector<std::string>& args) {
  const auto err_path = workdir() / "stderr.txt";
  std::string cmd = quote(PPSIM_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>" + quote(err_path.string());
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = io::read_text(err_path);
  return r;
}

std::string data(const std::string& name) { return data_path(name).string(); }
std::string tmp(const std::string& name) { return (workdir() / name).string(); }

TEST(Cli, ShorJson) {
  const Invocation r = run({"shor", "--modulus", "15", "--base", "7", "--json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("period"), 4);
  EXPECT_EQ(j.at("factors"), Json::parse("[3, 5]"));
  EXPECT_EQ(io::state_from_json(j.at("state")), io::state_from_json(io::read_json(data_path("shor_n15_a7_state.json"))));
}

TEST(Cli, ShorHumanAndRetry) {
  const Invocation ok = run({"shor", "--modulus", "15", "--base", "4"});
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("factors: 3 x 5"), std::string::npos);
  const Invocation retry = run({"shor", "--modulus", "15", "--base", "14"});
  EXPECT_EQ(retry.status, 11);
  EXPECT_EQ(retry.err.rfind("error: period_unusable: period unusable, retry with different a", 0), 0U) << retry.err;
  EXPECT_EQ(std::count(retry.err.begin(), retry.err.end(), '\n'), 1);
  const Invocation bad = run({"shor", "--modulus", "15", "--base", "5"});
  EXPECT_EQ(bad.status, 3);
}

TEST(Cli, Grover) {
  const Invocation hit = run({"grover", "--db", data("grover_db13.json"), "--query", "148", "--json"});
  ASSERT_EQ(hit.status, 0) << hit.err;
  const Json j = Json::parse(hit.out);
  EXPECT_EQ(j.at("found"), true);
  EXPECT_EQ(j.at("witness"), 4);
  const Invocation miss = run({"grover", "--db", data("grover_db13.json"), "--query", "240", "--json"});
  ASSERT_EQ(miss.status, 0);
  EXPECT_EQ(Json::parse(miss.out).at("found"), false);
  EXPECT_TRUE(Json::parse(miss.out).at("witness").is_null());
  const Invocation human = run({"grover", "--db", data("grover_db13.json"), "--query", "148"});
  EXPECT_EQ(human.out, "found (witness R_4)\n");
}

TEST(Cli, ReconstructBell) {
  const Invocation r = run({"reconstruct", "--matrix", data("bell_psi_plus.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"J([{"bitstring": "00", "coefficient": 1},
                                                {"bitstring": "11", "coefficient": 1}])J"));
  const Invocation human = run({"reconstruct", "--matrix", data("w3.json"), "--format", "human"});
  EXPECT_EQ(human.out, "|001> + |010> + |100>\n");
}

TEST(Cli, SamplingIsSeeded) {
  const std::vector<std::string> args{"reconstruct", "--matrix", data("bell_psi_plus.json"), "--sample", "50",
                                      "--seed", "9"};
  const Invocation a = run(args);
  const Invocation b = run(args);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  ASSERT_EQ(j.at("samples").size(), 50U);
  for (const auto& s : j.at("samples")) EXPECT_TRUE(s == "00" || s == "11");
  auto other = args;
  other.back() = "10";
  EXPECT_NE(run(other).out, a.out);
}

TEST(Cli, PpsGen) {
  const Invocation r = run({"pps", "gen", "--degree", "3", "--out", tmp("s3.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(io::read_text(tmp("s3.txt")), io::read_text(data_path("pps_s3.txt")));
  const Invocation half = run({"pps", "gen", "--degree", "3", "--mapping", "pi/2"});
  EXPECT_NE(half.out.find("mapping: pi/2"), std::string::npos);
  const Invocation custom = run({"pps", "gen", "--degree", "3", "--poly", "1,1,0,1"});
  EXPECT_EQ(custom.status, 0);
  const Invocation bad = run({"pps", "gen", "--degree", "3", "--poly", "1,1,1,1"});
  EXPECT_EQ(bad.status, 5);
  EXPECT_EQ(bad.err.rfind("error: not_primitive: polynomial not primitive", 0), 0U) << bad.err;
}

TEST(Cli, SimulateDemodPipeline) {
  ASSERT_EQ(run({"state", "--kind", "product:3", "--circuit-out", tmp("prod.json")}).status, 0);
  const Invocation sim = run({"simulate", "--circuit", tmp("prod.json"), "--pps", data("pps_s3.txt"), "--dump-fields",
                       tmp("fields.json")});
  ASSERT_EQ(sim.status, 0) << sim.err;
  const Json j = Json::parse(sim.out);
  EXPECT_EQ(io::matrix_from_json(j.at("matrix")), io::matrix_from_json(io::read_json(data_path("product3.json"))));
  EXPECT_EQ(io::state_from_json(j.at("state")).terms().size(), 8U);

  const Invocation dem = run({"demod", "--fields", tmp("fields.json"), "--pps", data("pps_s3.txt"), "--format", "csv"});
  ASSERT_EQ(dem.status, 0) << dem.err;
  EXPECT_EQ(dem.out, "\"(1,1)\",\"0\",\"0\"\n\"0\",\"(1,1)\",\"0\"\n\"0\",\"0\",\"(1,1)\"\n");

  const Invocation again = run({"simulate", "--circuit", tmp("prod.json"), "--inputs", tmp("fields.json"),
                         "--dump-fields", tmp("fields2.json")});
  ASSERT_EQ(again.status, 0) << again.err;
  EXPECT_EQ(io::read_text(tmp("fields.json")), io::read_text(tmp("fields2.json")));
}

TEST(Cli, SimulateSymbolicInputs) {
  const std::string fields = tmp("sym.json");
  io::write_text(fields, R"J({"symbolic": [{"mode0": [{"pps": 1, "re": 1}], "mode1": [{"pps": 2, "re": 1}]},
                                          {"mode0": [{"pps": 2, "re": 1}], "mode1": [{"pps": 1, "re": 1}]}]})J");
  ASSERT_EQ(run({"state", "--kind", "product:2", "--circuit-out", tmp("id2.json")}).status, 0);
  const Invocation r = run({"simulate", "--circuit", tmp("id2.json"), "--inputs", fields, "--degree", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(io::state_from_json(Json::parse(r.out).at("state")).to_string(), "|00> + |11>");
  const Invocation missing_set = run({"simulate", "--circuit", tmp("id2.json"), "--inputs", fields});
  EXPECT_EQ(missing_set.status, 3);
}

TEST(Cli, StateAndCompile) {
  const Invocation ghz = run({"state", "--kind", "ghz:3"});
  ASSERT_EQ(ghz.status, 0);
  EXPECT_EQ(ghz.out, "(1,0) (0,1) 0\n0 (1,0) (0,1)\n(0,1) 0 (1,0)\n|000> + |111>\n");
  const Invocation phi = run({"state", "--kind", "phi-", "--format", "json"});
  EXPECT_EQ(io::state_from_json(Json::parse(phi.out).at("state")).to_string(), "|01> - |10>");

  io::write_text(tmp("placement.json"), R"J({"n": 2, "cells": [["(1,0)", "(0,1)"], ["(0,1)", "(1,0)"]]})J");
  const Invocation cmp = run({"compile", "--placement", tmp("placement.json"), "--degree", "3", "--out", tmp("bell.json")});
  ASSERT_EQ(cmp.status, 0) << cmp.err;
  const Invocation sim = run({"simulate", "--circuit", tmp("bell.json"), "--degree", "3"});
  EXPECT_EQ(io::matrix_from_json(Json::parse(sim.out).at("matrix")),
            io::matrix_from_json(io::read_json(data_path("bell_psi_plus.json"))));
}

TEST(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run({"reconstruct", "--matrix", "/nonexistent/m.json"}).status, 14);
  io::write_text(tmp("broken.json"), "{\"cells\": [");
  const Invocation parse = run({"reconstruct", "--matrix", tmp("broken.json")});
  EXPECT_EQ(parse.status, 13);
  EXPECT_EQ(parse.err.rfind("error: parse: ", 0), 0U);
  io::write_text(tmp("rect.json"), R"J({"cells": [["0", "0"]]})J");
  EXPECT_EQ(run({"reconstruct", "--matrix", tmp("rect.json")}).status, 6);
  io::write_text(tmp("empty.json"), R"J({"cells": [["0", "0"], ["0", "0"]]})J");
  EXPECT_EQ(run({"reconstruct", "--matrix", tmp("empty.json"), "--sample", "1"}).status, 12);
  io::write_text(tmp("cycle.json"), R"J({"nodes": [{"id": 0, "kind": "gate", "gate": "D"}],
                                        "edges": [{"from": 0, "to": 0}]})J");
  EXPECT_EQ(run({"simulate", "--circuit", tmp("cycle.json"), "--degree", "3"}).status, 8);
  EXPECT_EQ(run({"state", "--kind", "ghz:9", "--degree", "3"}).status, 10);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"shor", "--modulus", "15"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
}

TEST(Cli, HelpDocumentsSchemas) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  for (const char* needle : {"File formats", "pps set", "circuit", "matrix", "database", "Exit status"}) {
    EXPECT_NE(r.out.find(needle), std::string::npos) << needle;
  }
}

TEST(Cli, OutputsAreDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"shor", "--modulus", "15", "--base", "7", "--json"},
        std::vector<std::string>{"state", "--kind", "w:4", "--format", "json"},
        std::vector<std::string>{"grover", "--db", data("grover_db13.json"), "--query", "148", "--json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

}  // namespace
}  // namespace ppsim
