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

// semipos: batch experiments for Bergman kernels of the semipositive line
// bundle O(r/2) -> CP¹ with potential ln(1 + |z|^r).
//
// Exit codes: 0 success, 2 invalid arguments, 3 a gated check failed,
// 1 any other failure. Errors go to stderr as one JSON object.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "semipos/errors.hpp"
#include "semipos/experiments.hpp"

namespace ex = semipos::experiments;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitGate = 3;

int report_error(const std::string& kind, const std::string& message, int code) {
  ex::Json err{{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << err.dump() << "\n";
  return code;
}

struct RawArgs {
  std::string r;
  std::string k_grid;
  std::string volume = "round";
  std::uint64_t seed = 20260101;
  int samples = 200;
  std::string out_dir = "semipos_out";
  std::string mode = "full";
  std::string symbol;
  bool emit_roots = false;
  double R0 = 1.0;
};

ex::RunArgs resolve(const RawArgs& raw) {
  ex::RunArgs a;
  if (!raw.r.empty()) a.r = ex::parse_int_list(raw.r);
  if (!raw.k_grid.empty()) a.ks = ex::parse_k_grid(raw.k_grid);
  a.volume = ex::parse_volume(raw.volume);
  a.seed = raw.seed;
  if (raw.samples < 1) throw ex::ArgumentError("--samples must be >= 1");
  a.samples = raw.samples;
  a.mode = ex::parse_mode(raw.mode);
  if (!raw.symbol.empty()) {
    a.symbols = ex::split_list(raw.symbol);
    for (const auto& s : a.symbols) ex::preset_symbol(s);
  }
  a.emit_roots = raw.emit_roots;
  a.R0 = raw.R0;
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments for Bergman kernels and Toeplitz operators of a semipositive line bundle on CP1"};
  app.set_version_flag("--version", std::string(ex::kToolVersion));
  app.require_subcommand(1);

  RawArgs raw;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", raw.r, "Vanishing order(s) r, even, comma separated");
    sub->add_option("--k-grid", raw.k_grid, "Tensor powers: 'a,b,c' or 'start:stop:geometric'");
    sub->add_option("--out-dir", raw.out_dir, "Output directory")->capture_default_str();
  };

  using Runner = ex::RunReport (*)(const ex::RunArgs&);
  Runner runner = nullptr;

  auto* bergman = app.add_subcommand("bergman", "Growth of the Bergman density at z = 0 and z = 1");
  add_common(bergman);
  bergman->add_option("--volume", raw.volume, "Volume form: omega | round")->capture_default_str();
  bergman->callback([&] { runner = ex::run_bergman_expansion; });

  auto* fs = app.add_subcommand("fs-convergence", "Convergence of the induced Fubini-Study forms");
  add_common(fs);
  fs->add_option("--volume", raw.volume, "Volume form: omega | round")->capture_default_str();
  fs->callback([&] { runner = ex::run_fs_convergence; });

  auto* toeplitz = app.add_subcommand("toeplitz", "Toeplitz operator norms, composition and Szego traces");
  add_common(toeplitz);
  toeplitz->add_option("--volume", raw.volume, "Volume form: omega | round")->capture_default_str();
  toeplitz->add_option("--symbol", raw.symbol,
                       "Symbol preset(s): one, const3, lorentz, ring, gauss-pole, sphere-x (default: all)");
  toeplitz->callback([&] { runner = ex::run_toeplitz; });

  auto* zeros = app.add_subcommand("random-zeros", "Zeros of Gaussian random polynomials");
  add_common(zeros);
  zeros->add_option("--seed", raw.seed, "Random seed")->capture_default_str();
  zeros->add_option("--samples", raw.samples, "Polynomials per (r, k)")->capture_default_str();
  zeros->add_option("--mode", raw.mode, "Ensemble: full | paper-literal")->capture_default_str();
  zeros->add_flag("--emit-roots", raw.emit_roots, "Also write every root as 're,im' lines");
  zeros->callback([&] { runner = ex::run_random_zeros; });

  auto* model = app.add_subcommand("model-kernel", "Series versus closed form for the flat model kernel");
  add_common(model);
  model->add_option("--seed", raw.seed, "Seed for the random point pairs")->capture_default_str();
  model->add_option("--R0", raw.R0, "Curvature coefficient R0 > 0")->capture_default_str();
  model->callback([&] { runner = ex::run_model_kernel; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("invalid_arguments", e.what(), kExitBadArgs);
  }

  try {
    const ex::RunArgs args = resolve(raw);
    const auto start = std::chrono::system_clock::now();
    const ex::RunReport report = runner(args);
    const auto end = std::chrono::system_clock::now();
    ex::write_run(report, raw.out_dir, start, end);
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " = " << ex::format_double(c.value) << "\n";
    }
    std::cout << (report.passed() ? "all checks passed" : "gated check failed") << "; outputs in " << raw.out_dir
              << "\n";
    return report.passed() ? kExitOk : kExitGate;
  } catch (const ex::ArgumentError& e) {
    return report_error("invalid_arguments", e.what(), kExitBadArgs);
  } catch (const semipos::DomainError& e) {
    return report_error("invalid_arguments", e.what(), kExitBadArgs);
  } catch (const std::exception& e) {
    return report_error("run_failed", e.what(), kExitFailure);
  }
}
