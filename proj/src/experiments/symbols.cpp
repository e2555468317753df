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
#include <string>

#include "semipos/experiments.hpp"

namespace semipos::experiments {

std::vector<std::string> preset_symbol_names() {
  return {"one", "const3", "lorentz", "ring", "gauss-pole", "sphere-x"};
}

Symbol preset_symbol(std::string_view name) {
  if (name == "one") return Symbol::constant(1.0);
  if (name == "const3") return Symbol::constant(3.0);
  // 1/(1+|z|²), max 1 at z = 0
  if (name == "lorentz") return Symbol::radial([](double rho) { return 1.0 / (1.0 + rho * rho); }, 1.0);
  // |z|²/(1+|z|⁴), max 1/2 on |z| = 1
  if (name == "ring") {
    return Symbol::radial([](double rho) { return rho * rho / (1.0 + std::pow(rho, 4)); }, 0.5);
  }
  // exp(-|z|²), max 1 at the degenerate point
  if (name == "gauss-pole") return Symbol::radial([](double rho) { return std::exp(-rho * rho); }, 1.0);
  // 2 Re z/(1+|z|²): the x-coordinate of the unit sphere
  if (name == "sphere-x") {
    auto half = [](double rho) { return Complex(rho / (1.0 + rho * rho), 0.0); };
    return Symbol::general({{-1, half}, {1, half}}, 1.0);
  }
  throw ArgumentError("unknown symbol '" + std::string(name) + "'");
}

std::function<double(double)> preset_phi(std::string_view name) {
  if (name == "identity") return [](double s) { return s; };
  if (name == "square") return [](double s) { return s * s; };
  if (name == "exp") return [](double s) { return std::exp(s); };
  if (name == "cos") return [](double s) { return std::cos(3.0 * s); };
  if (name == "zero") return [](double) { return 0.0; };
  throw ArgumentError("unknown test function '" + std::string(name) + "'");
}

}  // namespace semipos::experiments
