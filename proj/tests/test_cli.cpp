// Copyright 2026 The pslin Authors
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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pslin/cli.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  std::vector<Json> lines;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = pslin::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '{') r.lines.push_back(Json::parse(line));
  }
  return r;
}

// Output with the manifest line removed.
std::string results_only(const std::string& out) {
  std::istringstream in(out);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.find("\"manifest\"") == std::string::npos) kept += line + "\n";
  }
  return kept;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("solve emits pairs then a manifest") {
  auto r = run({"solve", "--a", "2", "--b", "0", "--alpha", "1.5", "--limit", "3"});
  CHECK(r.code == 0);
  REQUIRE(r.lines.size() == 4);
  for (int i = 0; i < 3; ++i) {
    const auto& p = r.lines[i];
    CHECK(p["schema"] == 1);
    CHECK(p["record"] == "pair");
    CHECK(p["y"].get<long>() == 2 * p["x"].get<long>());
    CHECK(p.contains("n_x"));
    CHECK(p.contains("n_y"));
    CHECK(p["provenance"] == "convergent");
  }
  const auto& m = r.lines.back();
  CHECK(m["record"] == "manifest");
  CHECK(m["subcommand"] == "solve");
  CHECK(m["version"] == pslin::cli::kVersion);
  CHECK(m["params"]["gamma"] == 2.0);
  CHECK(m["params"]["epsilon"] == "1/10");
  CHECK(m["params"]["alpha"] == "1.5");
  CHECK(m["outcome"]["status"] == "ok");
  CHECK(m.contains("wall_time_s"));
}

TEST_CASE("member, alpha-construct and witness records") {
  auto r = run({"member", "--alpha", "1.5", "--value", "22"});
  CHECK(r.code == 0);
  CHECK(r.lines[0]["n"] == 8);
  auto c = run({"alpha-construct", "--a", "2", "--p", "4", "--q", "3", "--range", "2,3"});
  CHECK(c.code == 0);
  CHECK(c.lines[0]["alpha"].get<double>() == doctest::Approx(2.40942).epsilon(1e-5));
  CHECK(c.lines[0]["form"] == "logquot:2:4:3");
  auto o = run({"alpha-construct", "--a", "2", "--p", "3", "--q", "2", "--range", "2,3"});
  CHECK(o.lines[0]["in_range"] == false);
  auto w = run({"witness", "--a", "2", "--alpha", "1.5", "--gamma", "2", "--q-max", "20"});
  CHECK(w.code == 0);
  bool found = false;
  for (const auto& l : w.lines) found = found || (l["p"] == 19 && l["q"] == 12);
  CHECK(found);
  auto chk = run({"witness", "--a", "2", "--alpha", "1.5", "--x", "11", "--y", "22", "--beta",
                  "1.5"});
  CHECK(chk.lines[0]["holds"] == true);
  CHECK(chk.lines[0]["p"] == 8);
}

TEST_CASE("other subcommands") {
  auto g = run({"generate", "--alpha", "1.1", "--to", "10"});
  REQUIRE(g.lines.size() == 11);
  CHECK(g.lines[5]["value"] == 7);
  auto b = run({"brute", "--a", "2", "--b", "0", "--alpha", "1.5", "--x-max", "100"});
  CHECK(b.code == 0);
  CHECK(b.lines[0]["provenance"] == "brute_force");
  auto d = run({"discrepancy", "--alpha", "1.5", "--scale", "0.7", "--to", "100"});
  CHECK(d.lines[0]["n_points"] == 100);
  CHECK(d.lines[0]["erdos_turan"].size() == 3);
  auto k = run({"bounds", "--alpha", "1.5", "--gamma", "2", "--xi", "0.01"});
  CHECK(k.lines[0]["k"] == 7);
  CHECK(k.lines[0]["negative"] == true);
  auto t = run({"triples", "--alpha", "1.1", "--bound", "10", "--limit", "1"});
  CHECK(t.lines[0]["k"] == 1);
  CHECK(t.lines[0]["l"] == 3);
  CHECK(t.lines[0]["m"] == 4);
}

TEST_CASE("big integers become strings") {
  auto r = run({"generate", "--alpha", "1.5", "--from", "100000000000000", "--to",
                "100000000000000"});
  REQUIRE(r.lines.size() == 2);
  CHECK(r.lines[0]["n"].is_number());
  CHECK(r.lines[0]["value"].is_string());
  CHECK(r.lines[0]["value"] == "1000000000000000000000");
}

TEST_CASE("exit codes") {
  CHECK(run({"member", "--alpha", "2", "--value", "4"}).code == pslin::cli::kExitInvalid);
  CHECK(run({"member", "--alpha", "1.5"}).code == pslin::cli::kExitInvalid);
  CHECK(run({"frobnicate"}).code == pslin::cli::kExitInvalid);
  CHECK(run({}).code == pslin::cli::kExitInvalid);
  auto budget = run({"solve", "--a", "2", "--b", "0", "--alpha", "surd:1:1:2",
                     "--max-convergents", "20"});
  CHECK(budget.code == pslin::cli::kExitBudget);
  CHECK(budget.lines.back()["outcome"]["exhausted"] == true);
  auto prec = run({"--prec-cap", "64", "generate", "--alpha", "surd:1:1:2", "--from",
                   "1000000000000000000000000", "--to", "1000000000000000000000000"});
  CHECK(prec.code == pslin::cli::kExitPrecision);
  CHECK(prec.lines.back()["outcome"]["status"] == "precision_overflow");
}

TEST_CASE("precision cap from the environment") {
  setenv(pslin::cli::kPrecCapEnv, "64", 1);
  auto r = run({"generate", "--alpha", "surd:1:1:2", "--from", "1000000000000000000000000",
                "--to", "1000000000000000000000000"});
  CHECK(r.code == pslin::cli::kExitPrecision);
  auto over = run({"--prec-cap", "4096", "generate", "--alpha", "surd:1:1:2", "--from",
                   "1000000000000000000000000", "--to", "1000000000000000000000000"});
  CHECK(over.code == 0);
  unsetenv(pslin::cli::kPrecCapEnv);
}

TEST_CASE("csv output and --out") {
  std::string path = temp_path("pslin_cli_test.csv");
  auto r = run({"triples", "--alpha", "1.1", "--bound", "10", "--csv", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header.rfind("schema,record,k,l,m", 0) == 0);
  CHECK(row.rfind("1,triple,1,3,4", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("replaying a manifest reproduces the result records") {
  std::string path = temp_path("pslin_cli_replay.jsonl");
  auto first = run({"solve", "--a", "3", "--b", "1", "--alpha", "surd:1:1/2:2", "--limit", "4",
                    "--threads", "3", "--out", path});
  CHECK(first.code == 0);
  auto again = run({"--replay", path});
  CHECK(again.code == 0);
  std::ifstream in(path);
  std::stringstream stored;
  stored << in.rdbuf();
  CHECK(results_only(again.out) == results_only(stored.str()));
  CHECK(again.lines.back()["threads"] == 1);
  auto twice = run({"--replay", path});
  CHECK(results_only(twice.out) == results_only(again.out));
  std::filesystem::remove(path);
}

TEST_CASE("the installed binary runs") {
  std::string cmd = std::string(PSLIN_CLI_PATH) + " member --alpha 1.5 --value 22 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}
