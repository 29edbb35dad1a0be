#include "fsdlab/report.hpp"

#include "fsdlab/spectra.hpp"

#include <algorithm>
#include <sstream>

namespace fsdlab {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::hypothesis_violated:
      return "hypothesis-violated";
    case CheckStatus::undetermined:
      return "undetermined";
  }
  return "unknown";
}

void VerificationReport::add(CheckRecord record) { checks.push_back(std::move(record)); }

void VerificationReport::finalize() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < checks.size(); ++i) {
    if (checks[i].id == checks[i - 1].id) {
      throw Error("duplicate check id in report: " + checks[i].id);
    }
  }
}

int VerificationReport::count(CheckStatus status) const {
  int n = 0;
  for (const auto& c : checks) {
    if (c.status == status) ++n;
  }
  return n;
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json doc;
  doc["version"] = version;
  doc["seed"] = seed;
  doc["config_hash"] = config_hash;
  doc["counts"] = {
      {"pass", count(CheckStatus::pass)},
      {"fail", count(CheckStatus::fail)},
      {"hypothesis_violated", count(CheckStatus::hypothesis_violated)},
      {"undetermined", count(CheckStatus::undetermined)},
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json rec;
    rec["id"] = c.id;
    rec["anchor"] = c.anchor;
    rec["status"] = to_string(c.status);
    rec["margin"] = c.margin;
    rec["witness"] = c.witness;
    if (include_timing) rec["wall_ms"] = c.wall_ms;
    arr.push_back(std::move(rec));
  }
  doc["checks"] = std::move(arr);
  return doc;
}

std::string VerificationReport::to_text(bool include_timing) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << to_string(c.status);
    for (std::size_t pad = to_string(c.status).size(); pad < 20; ++pad) os << ' ';
    os << c.id << "  margin=" << c.margin << "  [" << c.anchor << "]";
    if (include_timing) os << "  (" << c.wall_ms << " ms)";
    if (!c.witness.empty()) os << "\n    " << c.witness;
    os << "\n";
  }
  os << "pass " << count(CheckStatus::pass) << ", fail " << count(CheckStatus::fail)
     << ", hypothesis-violated " << count(CheckStatus::hypothesis_violated) << ", undetermined "
     << count(CheckStatus::undetermined) << "\n";
  return os.str();
}

}  // namespace fsdlab
