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

#include "semipos/quadrature.hpp"

#include <array>
#include <cmath>

namespace semipos::quadrature {

namespace {

constexpr int kMaxTableLevel = 16;
constexpr double kHalfPi = 1.5707963267948966;
// Nodes whose gap would fall below this are dropped; tanh-sinh weights
// there are already far below any double-precision contribution.
constexpr double kMinGap = 1e-300;

std::vector<NodePair> build_level(int level) {
  std::vector<NodePair> nodes;
  const double h = std::ldexp(1.0, -level);
  for (long j = 1;; ++j) {
    if (level > 0 && j % 2 == 0) continue;
    const double t = j * h;
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    // 1 - tanh(u) = e^{-u} / cosh(u)
    const double gap = std::exp(-u) / cu;
    if (!(gap > kMinGap)) break;
    const double weight = kHalfPi * std::cosh(t) / (cu * cu);
    const double log_weight = std::log(kHalfPi) + std::log(std::cosh(t)) - 2.0 * (u + std::log1p(std::exp(-2.0 * u)) - std::log(2.0));
    nodes.push_back({gap, weight, log_weight});
  }
  return nodes;
}

}  // namespace

const std::vector<NodePair>& level_nodes(int level) {
  static const std::array<std::vector<NodePair>, kMaxTableLevel + 1> tables = [] {
    std::array<std::vector<NodePair>, kMaxTableLevel + 1> t;
    for (int l = 0; l <= kMaxTableLevel; ++l) t[l] = build_level(l);
    return t;
  }();
  return tables.at(level);
}

}  // namespace semipos::quadrature
