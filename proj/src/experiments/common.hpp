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

#ifndef SEMIPOS_SRC_EXPERIMENTS_COMMON_HPP_
#define SEMIPOS_SRC_EXPERIMENTS_COMMON_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "semipos/asymptotics.hpp"
#include "semipos/errors.hpp"
#include "semipos/experiments.hpp"
#include "semipos/parallel.hpp"

namespace semipos::experiments::detail {

inline std::vector<int> r_values_or(const RunArgs& args, std::vector<int> fallback) {
  auto rs = args.r.empty() ? std::move(fallback) : args.r;
  for (int r : rs) {
    if (r < 2 || r > 8 || r % 2 != 0) throw ArgumentError("r must be one of 2, 4, 6, 8; got " + std::to_string(r));
  }
  return rs;
}

inline std::vector<int> ks_or(const RunArgs& args, std::vector<int> fallback) {
  return args.ks.empty() ? fallback : args.ks;
}

inline int workers(const RunArgs& args) { return args.workers > 0 ? args.workers : worker_count(); }

inline Json fit_json(const RateFit& f) {
  return Json{{"slope", f.slope}, {"intercept", f.intercept}, {"max_residual", f.max_residual},
              {"points_used", f.points_used}};
}

inline Json int_array(const std::vector<int>& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

inline bool doubling(const std::vector<int>& ks) {
  if (ks.size() < 3) return false;
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    if (ks[i + 1] != 2 * ks[i]) return false;
  }
  return true;
}

/// A log-log fit needs three points spanning a factor of 4.
inline bool fittable(const std::vector<int>& ks) { return ks.size() >= 3 && ks.back() >= 4 * ks.front(); }

}  // namespace semipos::experiments::detail

#endif  // SEMIPOS_SRC_EXPERIMENTS_COMMON_HPP_
