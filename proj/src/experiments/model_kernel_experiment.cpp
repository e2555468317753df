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

#include <cmath>
#include <numbers>
#include <random>

#include "common.hpp"
#include "semipos/model_kernel.hpp"

namespace semipos::experiments {

namespace {

constexpr int kPairsPerR = 30;
constexpr double kMaxModulus = 1.5;

// Platform-independent uniform in [0, 1).
double unit(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

Complex random_point(std::mt19937_64& gen) {
  const double radius = kMaxModulus * std::sqrt(unit(gen));
  return std::polar(radius, 2.0 * std::numbers::pi * unit(gen));
}

double relative_gap(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

RunReport run_model_kernel(const RunArgs& args) {
  const auto rs = detail::r_values_or(args, {2, 4, 6});
  if (!(args.R0 > 0.0)) throw ArgumentError("R0 must be positive");
  constexpr double kGapBound = 1e-9;
  constexpr double kRatioTolerance = 1e-6;

  RunReport report;
  report.subcommand = "model-kernel";
  report.params = {{"r", detail::int_array(rs)},     {"R0", args.R0},
                   {"seed", args.seed},             {"pairs_per_r", kPairsPerR},
                   {"max_modulus", kMaxModulus},    {"gap_bound", kGapBound},
                   {"ratio_tolerance", kRatioTolerance}};
  report.summary["per_r"] = Json::array();

  Csv csv({"r", "pair", "z_re", "z_im", "w_re", "w_im", "series_re", "series_im", "closed_re", "closed_im",
           "rel_gap"});
  for (int r : rs) {
    const ModelKernelParams p{r, args.R0};
    std::mt19937_64 gen(args.seed + static_cast<std::uint64_t>(r));
    double worst = 0.0;
    for (int i = 0; i < kPairsPerR; ++i) {
      const Complex z = random_point(gen);
      const Complex w = random_point(gen);
      const Complex s = model_kernel_series(p, z, w);
      const Complex c = model_kernel_closed(p, z, w);
      const double gap = relative_gap(c, s);
      worst = std::max(worst, gap);
      csv.row({std::to_string(r), std::to_string(i), format_double(z.real()), format_double(z.imag()),
               format_double(w.real()), format_double(w.imag()), format_double(s.real()), format_double(s.imag()),
               format_double(c.real()), format_double(c.imag()), format_double(gap)});
    }
    const double calibrated = model_diag_constant(p);
    const double printed = unscaled_diag_constant(p);
    const double ratio = calibrated / printed;
    const double expected = std::pow(2.0, -2.0 / r);
    const std::string tag = "r" + std::to_string(r);

    Json entry{{"r", r},
               {"max_rel_gap", worst},
               {"diag_constant", calibrated},
               {"diag_constant_unscaled", printed},
               {"ratio", ratio},
               {"expected_ratio", expected}};
    report.checks.push_back(check_le("series_vs_closed_" + tag, worst, kGapBound));
    report.checks.push_back(check_le("constant_ratio_error_" + tag, std::abs(ratio - expected), kRatioTolerance));
    if (r == 2) {
      // Bargmann–Fock: the diagonal is R0/2π everywhere.
      const double flat = args.R0 / (2.0 * std::numbers::pi);
      double diag_gap = 0.0;
      for (const Complex z : {Complex(0.0), Complex(0.7, -0.2), Complex(-1.3, 0.4)}) {
        diag_gap = std::max(diag_gap, std::abs(model_kernel_closed(p, z, z).real() - flat) / flat);
      }
      entry["diag_gap_vs_flat"] = diag_gap;
      report.checks.push_back(check_le("diag_equals_R0_over_2pi_" + tag, diag_gap, kGapBound));
    }
    report.summary["per_r"].push_back(entry);
  }
  report.files.push_back({"model_kernel.csv", csv.text()});
  return report;
}

}  // namespace semipos::experiments
