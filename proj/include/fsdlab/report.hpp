#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fsdlab {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { pass, fail, hypothesis_violated, undetermined };

std::string to_string(CheckStatus status);

struct CheckRecord {
  std::string id;
  std::string anchor;  // traceability label, e.g. "Prop 2.1(4)"
  CheckStatus status;
  double margin;
  std::string witness;  // summary; on failure, enough to replay
  double wall_ms;
};

struct VerificationReport {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<CheckRecord> checks;

  void add(CheckRecord record);
  // Sorts by check id (deterministic merge) and rejects duplicate ids.
  void finalize();

  int count(CheckStatus status) const;
  bool any_failed() const { return count(CheckStatus::fail) > 0; }

  // include_timing=false drops wall-time fields, leaving the deterministic
  // part of the report.
  nlohmann::json to_json(bool include_timing = true) const;
  std::string to_text(bool include_timing = true) const;
};

}  // namespace fsdlab
