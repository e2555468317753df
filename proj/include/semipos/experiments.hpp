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

#ifndef SEMIPOS_EXPERIMENTS_HPP_
#define SEMIPOS_EXPERIMENTS_HPP_

// Batch experiments behind the semipos command line tool. Each run_*
// function computes its tables and gated checks in memory; write_run puts
// them on disk together with a manifest.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semipos/cp1.hpp"
#include "semipos/random_zeros.hpp"
#include "semipos/toeplitz.hpp"

namespace semipos::experiments {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";

/// Bad user input; the tool maps it to exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "16,32,64" or "start:stop:geometric" (ratio 2, stop inclusive).
std::vector<int> parse_k_grid(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);
VolumeForm parse_volume(std::string_view text);
EnsembleMode parse_mode(std::string_view text);
std::vector<std::string> split_list(std::string_view text);

struct RunArgs {
  std::vector<int> r;
  std::vector<int> ks;
  VolumeForm volume = VolumeForm::RoundFS;
  std::uint64_t seed = 20260101;
  int samples = 200;
  EnsembleMode mode = EnsembleMode::FullBasis;
  std::vector<std::string> symbols;
  bool emit_roots = false;
  double R0 = 1.0;
  int workers = 0;  // 0: SEMIPOS_WORKERS or all cores
};

struct Check {
  std::string name;
  double value;
  std::string relation;  // "<=", ">=", "<", "in"
  double threshold;
  double threshold_hi = 0.0;  // upper end for "in"
  bool passed;
};

Check check_le(std::string name, double value, double threshold);
Check check_lt(std::string name, double value, double threshold);
Check check_in(std::string name, double value, double lo, double hi);

struct OutputFile {
  std::string name;
  std::string content;
};

struct RunReport {
  std::string subcommand;
  Json params = Json::object();
  Json summary = Json::object();
  std::vector<Check> checks;
  std::vector<OutputFile> files;

  bool passed() const;
};

RunReport run_bergman_expansion(const RunArgs& args);
RunReport run_fs_convergence(const RunArgs& args);
RunReport run_toeplitz(const RunArgs& args);
RunReport run_random_zeros(const RunArgs& args);
RunReport run_model_kernel(const RunArgs& args);

/// Writes every output file, <subcommand>_summary.json and manifest.json
/// into out_dir (created if missing). Returns the manifest.
Json write_run(const RunReport& report, const std::filesystem::path& out_dir,
               std::chrono::system_clock::time_point start, std::chrono::system_clock::time_point end);

/// Shortest round-trip form is not used: always 17 significant digits.
std::string format_double(double v);
std::string sha256_hex(std::string_view data);

/// CSV text with one header row; cells are joined with ','.
class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { row(header); }
  Csv& row(const std::vector<std::string>& cells);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// Named symbols and test functions.

Symbol preset_symbol(std::string_view name);
std::vector<std::string> preset_symbol_names();
/// The symbol whose maximum sits at the degenerate point z = 0.
inline constexpr const char* kDegeneratePeakSymbol = "gauss-pole";

std::function<double(double)> preset_phi(std::string_view name);

// Pieces shared with the test suites.

/// c1 at radius rho predicted by the positive-case formula
/// (1/16π) τ [κ − Δ ln τ] with τ = 2π·(curvature/volume density) and the
/// metric whose area form is π·dμ.
double remark_c1(const GeometryConfig& cfg, double rho);

/// sup over the standard grid of |fs_pullback_density − curvature_density|.
double fs_sup_error(const MonomialBasis& basis);

}  // namespace semipos::experiments

#endif  // SEMIPOS_EXPERIMENTS_HPP_
