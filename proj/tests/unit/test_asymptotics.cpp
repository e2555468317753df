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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "semipos/asymptotics.hpp"
#include "semipos/errors.hpp"

using namespace semipos;

TEST_CASE("exact power laws") {
  const std::vector<double> xs{16, 32, 64, 128, 256};
  std::vector<double> sq, third;
  for (double x : xs) {
    sq.push_back(x * x);
    third.push_back(5.0 * std::pow(x, -1.0 / 3.0));
  }
  const auto f = loglog_slope(xs, sq);
  CHECK(std::abs(f.slope - 2.0) < 1e-12);
  CHECK(f.max_residual < 1e-12);
  CHECK(f.points_used == 5);
  const auto g = loglog_slope(xs, third);
  CHECK(std::abs(g.slope + 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(g.intercept - std::log(5.0)) < 1e-12);
}

TEST_CASE("rescaling moves only the intercept") {
  const std::vector<double> xs{1, 3, 9, 27};
  const std::vector<double> ys{2.0, 2.7, 5.1, 7.9};
  std::vector<double> scaled;
  for (double y : ys) scaled.push_back(1e6 * y);
  const auto a = loglog_slope(xs, ys);
  const auto b = loglog_slope(xs, scaled);
  CHECK(std::abs(a.slope - b.slope) < 1e-12);
  CHECK(std::abs(b.intercept - a.intercept - std::log(1e6)) < 1e-12);
  CHECK(std::abs(a.max_residual - b.max_residual) < 1e-12);
}

TEST_CASE("fit preconditions") {
  const std::vector<double> two{1, 8};
  CHECK_THROWS_AS(loglog_slope(two, two), DomainError);
  const std::vector<double> narrow{10, 20, 30};
  CHECK_THROWS_AS(loglog_slope(narrow, narrow), DomainError);
  const std::vector<double> xs{1, 4, 16};
  const std::vector<double> bad{1, 0, 2};
  CHECK_THROWS_AS(loglog_slope(xs, bad), DomainError);
}

TEST_CASE("Richardson on two-term models") {
  const std::vector<int> ks{16, 32, 64, 128};
  std::vector<double> v1, v2, c;
  for (int k : ks) {
    v1.push_back(3.5 + 2.0 / k);
    v2.push_back(-1.25 + 7.0 * std::pow(k, -0.5));
    c.push_back(0.75);
  }
  CHECK(std::abs(richardson_extrapolate(ks, v1, 1.0) - 3.5) < 1e-10);
  CHECK(std::abs(richardson_extrapolate(ks, v2, 0.5) + 1.25) < 1e-10);
  CHECK(std::abs(richardson_extrapolate(ks, c, 1.0) - 0.75) < 1e-15);
  const std::vector<int> uneven{16, 32, 96};
  const std::vector<double> c3{0.75, 0.75, 0.75};
  CHECK_THROWS_AS(richardson_extrapolate(uneven, c3, 1.0), DomainError);
  const std::vector<int> short_ks{16, 32};
  const std::vector<double> short_v{1, 2};
  CHECK_THROWS_AS(richardson_extrapolate(short_ks, short_v, 1.0), DomainError);
}
