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
#include <cstdio>

#include "common.hpp"

namespace semipos::experiments {

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::nan("");
  const double pos = q * (sorted.size() - 1);
  const auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= sorted.size()) return sorted.back();
  return sorted[i] + (pos - i) * (sorted[i + 1] - sorted[i]);
}

std::string roots_dump(const EnsembleResult& res) {
  std::string out;
  char buf[64];
  for (const auto& s : res.samples) {
    for (const auto& z : s.roots) {
      std::snprintf(buf, sizeof buf, "%.17e,%.17e\n", z.real(), z.imag());
      out += buf;
    }
  }
  return out;
}

}  // namespace

RunReport run_random_zeros(const RunArgs& args) {
  const auto rs = detail::r_values_or(args, {2, 4});
  const auto ks = detail::ks_or(args, {64});
  constexpr double kKsBound = 0.02;
  constexpr double kMedianBand = 0.02;

  RunReport report;
  report.subcommand = "random-zeros";
  report.params = {{"r", detail::int_array(rs)},
                   {"k_grid", detail::int_array(ks)},
                   {"mode", std::string(to_string(args.mode))},
                   {"seed", args.seed},
                   {"samples", args.samples},
                   {"coefficient_law", "complex Gaussian, E|c|^2 = 1, real and imaginary parts N(0, 1/2)"},
                   {"weights", args.mode == EnsembleMode::FullBasis ? "1/||z^a|| under the curvature volume"
                                                                    : "sqrt(binom(k, 2a/r))"},
                   {"residual_tolerance", kResidualTolerance},
                   {"ks_bound", kKsBound},
                   {"median_band_r2", kMedianBand},
                   {"emit_roots", args.emit_roots}};
  report.summary["runs"] = Json::array();

  Csv table({"r", "k", "mode", "samples_ok", "failures", "pooled_roots", "ks_radial", "ks_angular",
             "median_modulus", "max_residual"});
  for (int r : rs) {
    for (int k : ks) {
      EnsembleSpec spec{args.mode, k, r, args.seed, args.samples};
      try {
        spec.validate();
      } catch (const DomainError& e) {
        throw ArgumentError(e.what());
      }
      const EnsembleResult res = run_ensemble(spec, detail::workers(args));
      const auto moduli = pooled_moduli(res.samples);
      const auto cdf = [r](double t) { return predicted_radial_cdf(r, t); };
      const double ks_radial = ks_statistic(moduli, cdf);
      const double ks_angle = angular_uniformity(res.samples);
      const double median = quantile(moduli, 0.5);

      int conservation_violations = 0;
      for (const auto& s : res.samples) {
        if (static_cast<int>(s.roots.size()) + s.count_at_infinity != spec.degree()) ++conservation_violations;
      }

      const std::string tag = "r" + std::to_string(r) + "_k" + std::to_string(k);
      table.row({std::to_string(r), std::to_string(k), std::string(to_string(args.mode)),
                 std::to_string(res.samples.size()), std::to_string(res.failures.size()),
                 std::to_string(moduli.size()), format_double(ks_radial), format_double(ks_angle),
                 format_double(median), format_double(res.max_residual)});

      Csv cdf_csv({"t", "empirical", "predicted"});
      for (int i = 0; i <= 200; ++i) {
        const double t = std::pow(10.0, -2.0 + 4.0 * i / 200.0);
        const auto count = std::upper_bound(moduli.begin(), moduli.end(), t) - moduli.begin();
        cdf_csv.row({format_double(t), format_double(static_cast<double>(count) / moduli.size()),
                     format_double(cdf(t))});
      }
      report.files.push_back({"zeros_cdf_" + tag + ".csv", cdf_csv.text()});
      if (args.emit_roots) report.files.push_back({"roots_" + tag + ".csv", roots_dump(res)});

      Json run{{"r", r},
               {"k", k},
               {"degree", spec.degree()},
               {"samples_ok", res.samples.size()},
               {"ks_radial", ks_radial},
               {"ks_angular", ks_angle},
               {"median_modulus", median},
               {"max_residual", res.max_residual}};
      run["failures"] = Json::array();
      for (const auto& f : res.failures) run["failures"].push_back({{"index", f.index}, {"reason", f.reason}});

      report.checks.push_back(check_le("root_count_violations_" + tag, conservation_violations, 0));
      if (args.mode == EnsembleMode::FullBasis) {
        report.checks.push_back(check_le("ks_radial_" + tag, ks_radial, kKsBound));
        report.checks.push_back(check_le("ks_angular_" + tag, ks_angle, kKsBound));
        if (r == 2) report.checks.push_back(check_in("median_modulus_" + tag, median, 1.0 - kMedianBand, 1.0 + kMedianBand));
      } else {
        // Not gated: the degree-k ensemble cannot carry the full curvature mass when r > 2.
        std::vector<double> maxima;
        for (const auto& s : res.samples) {
          double m = 0.0;
          for (const auto& z : s.roots) m = std::max(m, std::abs(z));
          maxima.push_back(m);
        }
        std::sort(maxima.begin(), maxima.end());
        const double rho_c = paper_literal_critical_radius(r);
        run["critical_radius"] = std::isinf(rho_c) ? Json(nullptr) : Json(rho_c);
        run["max_modulus_median"] = quantile(maxima, 0.5);
        run["max_modulus_q95"] = quantile(maxima, 0.95);
        run["modulus_q99"] = quantile(moduli, 0.99);
        if (!std::isinf(rho_c)) {
          const auto inside = std::upper_bound(moduli.begin(), moduli.end(), rho_c) - moduli.begin();
          run["fraction_within_critical_radius"] = static_cast<double>(inside) / moduli.size();
        }
      }
      report.summary["runs"].push_back(run);
    }
  }
  report.files.insert(report.files.begin(), {"random_zeros.csv", table.text()});
  return report;
}

}  // namespace semipos::experiments
