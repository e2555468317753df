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

#include "common.hpp"

namespace semipos::experiments {

double fs_sup_error(const MonomialBasis& basis) {
  const auto grid = standard_rho_grid();
  std::vector<double> err(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    err[i] = std::abs(fs_pullback_density(basis, grid[i]) - curvature_density(basis.config().r, grid[i]));
  });
  double worst = 0.0;
  for (double e : err) worst = std::max(worst, e);
  return worst;
}

RunReport run_fs_convergence(const RunArgs& args) {
  const auto rs = detail::r_values_or(args, {4});
  const auto ks = detail::ks_or(args, parse_k_grid("64:1024:geometric"));
  if (!detail::fittable(ks)) throw ArgumentError("fs-convergence needs >= 3 k values spanning a factor of 4");

  constexpr double kExactTolerance = 1e-8;
  constexpr double kSlopeBound = -0.30;
  RunReport report;
  report.subcommand = "fs-convergence";
  report.params = {{"r", detail::int_array(rs)},
                   {"k_grid", detail::int_array(ks)},
                   {"volume", std::string(to_string(args.volume))},
                   {"grid", "0, 1 and 200 log-spaced radii in [1e-2, 1e2]"},
                   {"slope_bound", kSlopeBound},
                   {"potential_bound", "3 ln k / k"}};
  report.summary["per_r"] = Json::array();

  for (int r : rs) {
    const GeometryConfig cfg{r, args.volume};
    Csv csv({"k", "sup_error", "potential_sup", "potential_bound"});
    std::vector<double> kd, errors, potentials;
    for (int k : ks) {
      const MonomialBasis basis(cfg, k);
      const double e = fs_sup_error(basis);
      const double p = potential_convergence(basis);
      const double bound = 3.0 * std::log(k) / k;
      csv.row({std::to_string(k), format_double(e), format_double(p), format_double(bound)});
      kd.push_back(k);
      errors.push_back(e);
      potentials.push_back(p);
    }
    report.files.push_back({"fs_r" + std::to_string(r) + ".csv", csv.text()});

    const std::string tag = "r" + std::to_string(r);
    Json entry{{"r", r}, {"sup_errors", errors}, {"potential_sup", potentials}};
    const double worst = *std::max_element(errors.begin(), errors.end());
    if (worst <= kExactTolerance) {
      // Π_k is constant when the volume is the curvature itself: nothing to fit.
      entry["rate"] = nullptr;
      report.checks.push_back(check_le("sup_error_exact_" + tag, worst, kExactTolerance));
    } else {
      int increases = 0;
      for (std::size_t i = 0; i + 1 < errors.size(); ++i) increases += errors[i + 1] >= errors[i] ? 1 : 0;
      const RateFit fit = loglog_slope(kd, errors);
      entry["rate"] = detail::fit_json(fit);
      report.checks.push_back(check_le("sup_error_non_decreasing_steps_" + tag, increases, 0));
      report.checks.push_back(check_le("sup_error_slope_" + tag, fit.slope, kSlopeBound));
    }
    const double k_max = ks.back();
    report.checks.push_back(
        check_le("potential_sup_k" + std::to_string(ks.back()) + "_" + tag, potentials.back(), 3.0 * std::log(k_max) / k_max));
    report.summary["per_r"].push_back(entry);
  }
  return report;
}

}  // namespace semipos::experiments
