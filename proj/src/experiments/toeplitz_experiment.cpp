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

RunReport run_toeplitz(const RunArgs& args) {
  const auto rs = detail::r_values_or(args, {4});
  const auto ks = detail::ks_or(args, parse_k_grid("64:512:geometric"));
  const auto names = args.symbols.empty() ? preset_symbol_names() : args.symbols;
  std::vector<Symbol> symbols;
  for (const auto& n : names) symbols.push_back(preset_symbol(n));
  const std::string phi_name = "square";
  const auto phi = preset_phi(phi_name);

  constexpr double kNormSlack = 1e-9;
  constexpr double kPeakDefect = 0.05;
  constexpr int kPeakK = 512;
  RunReport report;
  report.subcommand = "toeplitz";
  report.params = {{"r", detail::int_array(rs)},
                   {"k_grid", detail::int_array(ks)},
                   {"volume", std::string(to_string(args.volume))},
                   {"symbols", names},
                   {"szego_phi", phi_name},
                   {"composition_pair", {"lorentz", "ring"}},
                   {"norm_slack", kNormSlack},
                   {"degenerate_peak_defect", kPeakDefect}};
  report.summary["per_r"] = Json::array();

  const Symbol pair_f = preset_symbol("lorentz");
  const Symbol pair_g = preset_symbol("ring");

  for (int r : rs) {
    const GeometryConfig cfg{r, args.volume};
    const std::string tag = "r" + std::to_string(r);
    Csv csv({"k", "symbol", "sup_norm", "operator_norm", "norm_defect", "self_composition_defect", "szego_trace",
             "szego_target", "szego_error"});
    Csv pair_csv({"k", "f", "g", "composition_defect"});
    std::vector<double> targets;
    for (const auto& s : symbols) targets.push_back(szego_target(r, s, phi));

    // [symbol][k index]
    std::vector<std::vector<double>> norm_defect(symbols.size()), szego_error(symbols.size());
    std::vector<double> pair_defects, kd;
    for (int k : ks) {
      const MonomialBasis basis(cfg, k);
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        const Symbol& f = symbols[i];
        const auto spectrum = toeplitz_spectrum(basis, f);
        double norm = 0.0;
        double trace = 0.0;
        for (double v : spectrum) {
          norm = std::max(norm, std::abs(v));
          trace += phi(v);
        }
        trace /= k;
        const double sup = f.sup_norm_hint();
        const double self = composition_defect(basis, f, f);
        norm_defect[i].push_back(sup - norm);
        szego_error[i].push_back(std::abs(trace - targets[i]));
        csv.row({std::to_string(k), names[i], format_double(sup), format_double(norm), format_double(sup - norm),
                 format_double(self), format_double(trace), format_double(targets[i]),
                 format_double(szego_error[i].back())});
        report.checks.push_back(check_le("norm_below_sup_" + names[i] + "_k" + std::to_string(k) + "_" + tag,
                                         norm - sup, kNormSlack));
      }
      const double pd = composition_defect(basis, pair_f, pair_g);
      pair_csv.row({std::to_string(k), "lorentz", "ring", format_double(pd)});
      pair_defects.push_back(pd);
      kd.push_back(k);
    }
    report.files.push_back({"toeplitz_" + tag + ".csv", csv.text()});
    report.files.push_back({"composition_" + tag + ".csv", pair_csv.text()});

    Json entry{{"r", r}, {"composition_defects", pair_defects}};
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      const bool constant = symbols[i].constant_value().has_value();
      const std::string name = names[i] + "_" + tag;
      if (ks.size() >= 2) {
        if (constant) {
          report.checks.push_back(check_le("norm_defect_" + name, std::abs(norm_defect[i].back()), 0.0));
        } else {
          report.checks.push_back(
              check_lt("norm_defect_kmax_vs_kmin_" + name, norm_defect[i].back(), norm_defect[i].front()));
          report.checks.push_back(
              check_lt("szego_error_kmax_vs_kmin_" + name, szego_error[i].back(), szego_error[i].front()));
        }
      }
      if (names[i] == kDegeneratePeakSymbol && ks.back() >= kPeakK) {
        report.checks.push_back(check_le("degenerate_peak_defect_" + name, norm_defect[i].back(), kPeakDefect));
      }
      entry["symbols"][names[i]] = {{"norm_defects", norm_defect[i]}, {"szego_errors", szego_error[i]},
                                    {"szego_target", targets[i]}};
    }
    if (detail::fittable(ks)) {
      const RateFit fit = loglog_slope(kd, pair_defects);
      entry["composition_rate"] = detail::fit_json(fit);
      report.checks.push_back(check_le("composition_slope_" + tag, fit.slope, -1.0 / r + 0.1));
    }
    report.summary["per_r"].push_back(entry);
  }
  return report;
}

}  // namespace semipos::experiments
