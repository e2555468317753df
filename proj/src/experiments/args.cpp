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

#include <charconv>
#include <string>

#include "semipos/experiments.hpp"

namespace semipos::experiments {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ArgumentError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = text.find(',');
    const auto item = trim(text.substr(0, pos));
    if (item.empty()) throw ArgumentError("empty entry in list");
    out.emplace_back(item);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) out.push_back(parse_int(item));
  return out;
}

std::vector<int> parse_k_grid(std::string_view text) {
  std::vector<int> ks;
  if (text.find(':') != std::string_view::npos) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) throw ArgumentError("k-grid range must be start:stop:geometric");
    const int start = parse_int(text.substr(0, first));
    const int stop = parse_int(text.substr(first + 1, second - first - 1));
    if (trim(text.substr(second + 1)) != "geometric") {
      throw ArgumentError("k-grid range spacing must be 'geometric'");
    }
    if (start < 1 || stop < start) throw ArgumentError("k-grid range needs 1 <= start <= stop");
    for (long k = start; k <= stop; k *= 2) ks.push_back(static_cast<int>(k));
  } else {
    ks = parse_int_list(text);
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1) throw ArgumentError("k values must be positive");
    if (i > 0 && ks[i] <= ks[i - 1]) throw ArgumentError("k-grid must be strictly increasing");
  }
  return ks;
}

VolumeForm parse_volume(std::string_view text) {
  if (text == "omega") return VolumeForm::OmegaR;
  if (text == "round") return VolumeForm::RoundFS;
  throw ArgumentError("volume must be 'omega' or 'round', got '" + std::string(text) + "'");
}

EnsembleMode parse_mode(std::string_view text) {
  if (text == "full") return EnsembleMode::FullBasis;
  if (text == "paper-literal") return EnsembleMode::PaperLiteral;
  throw ArgumentError("mode must be 'full' or 'paper-literal', got '" + std::string(text) + "'");
}

}  // namespace semipos::experiments
