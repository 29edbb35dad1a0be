#pragma once

#include "fsdlab/spectra.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fsdlab {

// Run configuration; parsed from a flat key/value JSON document.  Keys
// prefixed "tolerance." and "catalog." feed the override maps; everything
// else must be one of the documented fields (unknown keys are rejected).
struct RunConfig {
  enum class Format { json, text };

  std::vector<std::string> suites;
  std::vector<int> dims = {2, 3, 4, 6, 8, 12, 16};
  int trials = 500;
  std::uint64_t seed = 42;
  std::map<std::string, double> tolerances;
  nlohmann::json catalog = nlohmann::json::object();
  std::string out_path;
  Format format = Format::json;

  double tolerance(const std::string& key, double fallback) const;
  void validate() const;  // dims within [1, 64], trials >= 1
};

RunConfig config_from_json(const nlohmann::json& doc);
RunConfig config_from_file(const std::string& path);
nlohmann::json config_to_json(const RunConfig& config);

// FNV-1a over the canonical JSON serialization (sorted keys).
std::string config_hash(const RunConfig& config);

}  // namespace fsdlab
