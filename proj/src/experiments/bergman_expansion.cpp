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

#include "common.hpp"
#include "semipos/errors.hpp"
#include "semipos/model_kernel.hpp"

namespace semipos::experiments {

double remark_c1(const GeometryConfig& cfg, double rho) {
  if (!(rho > 0.0)) throw DomainError("remark_c1 needs rho > 0");
  // h = ln(τ/λ) with τ = 2π·c0 and λ = π·volume density
  auto h = [&](double s) {
    return std::log(2.0 * std::numbers::pi * positive_locus_constant(cfg, s)) -
           std::log(std::numbers::pi * volume_density(cfg, s));
  };
  const double step = 1e-3 * rho;
  const double h0 = h(rho);
  const double hp = h(rho + step);
  const double hm = h(rho - step);
  const double laplacian = (hp - 2.0 * h0 + hm) / (step * step) + (hp - hm) / (2.0 * step * rho);
  const double tau = 2.0 * std::numbers::pi * positive_locus_constant(cfg, rho);
  const double lambda = std::numbers::pi * volume_density(cfg, rho);
  return tau / (16.0 * std::numbers::pi * lambda) * laplacian;
}

RunReport run_bergman_expansion(const RunArgs& args) {
  const auto rs = detail::r_values_or(args, {2, 4, 6});
  const auto ks = detail::ks_or(args, parse_k_grid("16:2048:geometric"));
  if (!detail::fittable(ks)) throw ArgumentError("bergman needs >= 3 k values spanning a factor of 4");

  RunReport report;
  report.subcommand = "bergman";
  report.params = {{"r", detail::int_array(rs)},
                   {"k_grid", detail::int_array(ks)},
                   {"volume", std::string(to_string(args.volume))},
                   {"trace_k_max", 256},
                   {"trace_tolerance", 1e-8},
                   {"model_R0_per_k", 2.0}};
  report.summary["per_r"] = Json::array();

  for (int r : rs) {
    const GeometryConfig cfg{r, args.volume};
    std::vector<double> kd, d0, d1, remark_values;
    double worst_trace_gap = 0.0;
    Csv csv({"k", "z_label", "density", "log_density"});
    for (int k : ks) {
      const MonomialBasis basis(cfg, k);
      const double l0 = basis.log_density(0.0);
      const double l1 = basis.log_density(1.0);
      csv.row({std::to_string(k), "0", format_double(std::exp(l0)), format_double(l0)});
      csv.row({std::to_string(k), "1", format_double(std::exp(l1)), format_double(l1)});
      kd.push_back(k);
      d0.push_back(std::exp(l0));
      d1.push_back(std::exp(l1));
      remark_values.push_back(std::exp(l1) - k * positive_locus_constant(cfg, 1.0));
      if (k <= 256) {
        worst_trace_gap = std::max(worst_trace_gap, std::abs(trace_integral(basis) - basis.dimension()));
      }
    }
    report.files.push_back({"bergman_r" + std::to_string(r) + ".csv", csv.text()});

    const RateFit fit0 = loglog_slope(kd, d0);
    const RateFit fit1 = loglog_slope(kd, d1);
    Json entry;
    entry["r"] = r;
    entry["exponent_z0"] = detail::fit_json(fit0);
    entry["exponent_z1"] = detail::fit_json(fit1);
    entry["expected_exponent_z0"] = 2.0 / r;
    entry["max_trace_gap_k_le_256"] = worst_trace_gap;

    // Near z = 0, (1+ρ^r)^{-k} ≈ e^{-kρ^r}: the model weight with R0 = 2k,
    // which is the R0 = 2 model after z -> k^{1/r} z.
    const double vol0 = volume_density(cfg, 0.0);
    if (vol0 > 0.0) {
      const ModelKernelParams model{r, 2.0};
      const double model_c = model_diag_constant(model);
      Json ratios = Json::array();
      for (std::size_t i = 0; i < ks.size(); ++i) {
        ratios.push_back(d0[i] * vol0 / (std::pow(kd[i], 2.0 / r) * model_c));
      }
      entry["model_constant"] = model_c;
      entry["density_over_model_z0"] = ratios;
    } else {
      entry["model_constant"] = nullptr;
      entry["density_over_model_z0"] = nullptr;
    }

    entry["c0_z1"] = positive_locus_constant(cfg, 1.0);
    entry["density_over_k_z1_at_k_max"] = d1.back() / kd.back();
    if (detail::doubling(ks)) {
      entry["c1_z1_richardson"] = richardson_extrapolate(ks, remark_values, 1.0);
    } else {
      entry["c1_z1_richardson"] = nullptr;
    }
    entry["c1_z1_remark_formula"] = remark_c1(cfg, 1.0);
    report.summary["per_r"].push_back(entry);

    const std::string tag = "r" + std::to_string(r);
    if (args.volume == VolumeForm::RoundFS) {
      report.checks.push_back(
          check_in("exponent_z0_" + tag, fit0.slope, 2.0 / r - 0.05, 2.0 / r + 0.05));
    }
    report.checks.push_back(check_in("exponent_z1_" + tag, fit1.slope, 0.98, 1.02));
    if (ks.front() <= 256) report.checks.push_back(check_le("trace_gap_" + tag, worst_trace_gap, 1e-8));
  }
  return report;
}

}  // namespace semipos::experiments
