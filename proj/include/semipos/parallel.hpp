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

#ifndef SEMIPOS_PARALLEL_HPP_
#define SEMIPOS_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace semipos {

/// Name of the environment variable holding the worker count.
inline constexpr const char* kWorkersEnv = "SEMIPOS_WORKERS";

/// Worker count from SEMIPOS_WORKERS, else std::thread::hardware_concurrency().
int worker_count();

/// Runs body(i) for i in [0, n). Each index is handled by exactly one
/// worker, so callers that write only to slot i get results independent of
/// the worker count. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int workers = worker_count());

}  // namespace semipos

#endif  // SEMIPOS_PARALLEL_HPP_
