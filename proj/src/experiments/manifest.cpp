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

#include <openssl/evp.h>

#include <cstdio>
#include <ctime>
#include <fstream>

#include "semipos/experiments.hpp"

namespace semipos::experiments {

namespace {

std::string iso_utc(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json check_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["value"] = c.value;
  j["relation"] = c.relation;
  if (c.relation == "in") {
    j["threshold"] = Json::array({c.threshold, c.threshold_hi});
  } else {
    j["threshold"] = c.threshold;
  }
  j["passed"] = c.passed;
  return j;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

Check check_le(std::string name, double value, double threshold) {
  return {std::move(name), value, "<=", threshold, 0.0, value <= threshold};
}

Check check_lt(std::string name, double value, double threshold) {
  return {std::move(name), value, "<", threshold, 0.0, value < threshold};
}

Check check_in(std::string name, double value, double lo, double hi) {
  return {std::move(name), value, "in", lo, hi, value >= lo && value <= hi};
}

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Csv& Csv::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
  return *this;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

Json write_run(const RunReport& report, const std::filesystem::path& out_dir,
               std::chrono::system_clock::time_point start, std::chrono::system_clock::time_point end) {
  std::filesystem::create_directories(out_dir);

  Json summary;
  summary["subcommand"] = report.subcommand;
  summary["results"] = report.summary;
  summary["checks"] = Json::array();
  for (const auto& c : report.checks) summary["checks"].push_back(check_json(c));
  summary["passed"] = report.passed();

  std::vector<OutputFile> files = report.files;
  files.push_back({report.subcommand + "_summary.json", summary.dump(2) + "\n"});

  Json manifest;
  manifest["tool_version"] = kToolVersion;
  manifest["subcommand"] = report.subcommand;
  manifest["params"] = report.params;
  manifest["thresholds"] = Json::object();
  for (const auto& c : report.checks) manifest["thresholds"][c.name] = check_json(c)["threshold"];
  manifest["started_at"] = iso_utc(start);
  manifest["finished_at"] = iso_utc(end);
  manifest["outputs"] = Json::object();
  for (const auto& f : files) {
    write_file(out_dir / f.name, f.content);
    manifest["outputs"][f.name] = {{"sha256", sha256_hex(f.content)}, {"bytes", f.content.size()}};
  }
  manifest["checks"] = summary["checks"];
  manifest["passed"] = report.passed();
  write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

}  // namespace semipos::experiments
