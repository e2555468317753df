// Copyright 2026 The semipos Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "semipos/experiments.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("semipos_cli_test_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const fs::path& dir) {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string(SEMIPOS_CLI) + " " + args + " > " + (dir / "stdout.txt").string() + " 2> " +
                          err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(err)};
}

void check_digests(const fs::path& dir) {
  const json m = json::parse(slurp(dir / "manifest.json"));
  CHECK(m["tool_version"] == semipos::experiments::kToolVersion);
  for (const auto& [name, info] : m["outputs"].items()) {
    CHECK(semipos::experiments::sha256_hex(slurp(dir / name)) == info["sha256"].get<std::string>());
  }
}

}  // namespace

TEST_CASE("model-kernel run passes and writes a consistent manifest") {
  const auto dir = scratch("model");
  const Run r = run("model-kernel --r 2,4 --out-dir " + (dir / "out").string(), dir);
  CHECK(r.code == 0);
  check_digests(dir / "out");
  const json m = json::parse(slurp(dir / "out" / "manifest.json"));
  CHECK(m["passed"] == true);
  CHECK(m["thresholds"]["series_vs_closed_r4"] == 1e-9);
  const std::string csv = slurp(dir / "out" / "model_kernel.csv");
  CHECK(csv.rfind("r,pair,z_re", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("outputs are byte-identical across reruns") {
  const auto dir = scratch("rerun");
  CHECK(run("toeplitz --r 2 --k-grid 8,16,32 --symbol one,lorentz --out-dir " + (dir / "a").string(), dir).code == 0);
  CHECK(run("toeplitz --r 2 --k-grid 8,16,32 --symbol one,lorentz --out-dir " + (dir / "b").string(), dir).code == 0);
  CHECK(slurp(dir / "a" / "toeplitz_r2.csv") == slurp(dir / "b" / "toeplitz_r2.csv"));
  CHECK(slurp(dir / "a" / "toeplitz_summary.json") == slurp(dir / "b" / "toeplitz_summary.json"));
  // f ≡ 1: norm 1, no defect
  const std::string csv = slurp(dir / "a" / "toeplitz_r2.csv");
  CHECK(csv.find("8,one,1,1,0,0,") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("invalid arguments exit with code 2 and a JSON error") {
  const auto dir = scratch("bad");
  for (const std::string args : {"bergman --r 3", "bergman --volume flat", "random-zeros --k-grid 8:2:geometric",
                                 "toeplitz --symbol nope", "fs-convergence --k-grid 4,x", "nonsense",
                                 "random-zeros --mode both", "random-zeros --r 4 --k-grid 1000"}) {
    const Run r = run(args + " --out-dir " + (dir / "o").string(), dir);
    INFO(args);
    CHECK(r.code == 2);
    const json e = json::parse(r.err);
    CHECK(e["exit_code"] == 2);
  }
  fs::remove_all(dir);
}

TEST_CASE("failing gate exits with code 3; roots dump format") {
  const auto dir = scratch("gate");
  // 10 polynomials of degree 16 are far too few for KS <= 0.02
  const Run r = run("random-zeros --r 2 --k-grid 16 --samples 10 --emit-roots --out-dir " + (dir / "o").string(), dir);
  CHECK(r.code == 3);
  check_digests(dir / "o");
  std::ifstream roots(dir / "o" / "roots_r2_k16.csv");
  std::string line;
  int lines = 0;
  while (std::getline(roots, line)) {
    ++lines;
    CHECK(line.find(',') != std::string::npos);
    CHECK(line.find('e') != std::string::npos);
  }
  CHECK(lines == 160);
  fs::remove_all(dir);
}

TEST_CASE("paper-literal mode is reported but not gated on the law") {
  const auto dir = scratch("lit");
  const Run r = run("random-zeros --r 4 --k-grid 64 --samples 20 --mode paper-literal --out-dir " + (dir / "o").string(), dir);
  CHECK(r.code == 0);
  const json s = json::parse(slurp(dir / "o" / "random-zeros_summary.json"));
  CHECK(s["results"]["runs"][0]["critical_radius"].get<double>() == doctest::Approx(1.0));
  fs::remove_all(dir);
}
