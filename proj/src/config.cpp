#include "fsdlab/config.hpp"

#include "fsdlab/rng.hpp"
#include "fsdlab/spectra.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fsdlab {

double RunConfig::tolerance(const std::string& key, double fallback) const {
  const auto it = tolerances.find(key);
  return it != tolerances.end() ? it->second : fallback;
}

void RunConfig::validate() const {
  if (dims.empty()) throw ConfigError("dims must be nonempty");
  for (int d : dims) {
    if (d < 1 || d > kMaxDim) {
      throw ConfigError("dims must lie in [1, " + std::to_string(kMaxDim) + "]");
    }
  }
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (format != Format::json && format != Format::text) throw ConfigError("bad format");
}

RunConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "suites") {
        cfg.suites = value.get<std::vector<std::string>>();
      } else if (key == "dims") {
        cfg.dims = value.get<std::vector<int>>();
      } else if (key == "trials") {
        cfg.trials = value.get<int>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "format") {
        const auto s = value.get<std::string>();
        if (s == "json") {
          cfg.format = RunConfig::Format::json;
        } else if (s == "text") {
          cfg.format = RunConfig::Format::text;
        } else {
          throw ConfigError("format must be 'json' or 'text'");
        }
      } else if (key == "out") {
        cfg.out_path = value.get<std::string>();
      } else if (key.rfind("tolerance.", 0) == 0) {
        cfg.tolerances[key.substr(10)] = value.get<double>();
      } else if (key.rfind("catalog.", 0) == 0) {
        cfg.catalog[key.substr(8)] = value;
      } else {
        throw ConfigError("unknown config key: " + key);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("bad value for config key '" + key + "': " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return config_from_json(doc);
}

nlohmann::json config_to_json(const RunConfig& config) {
  nlohmann::json doc;
  doc["suites"] = config.suites;
  doc["dims"] = config.dims;
  doc["trials"] = config.trials;
  doc["seed"] = config.seed;
  doc["format"] = config.format == RunConfig::Format::json ? "json" : "text";
  doc["out"] = config.out_path;
  for (const auto& [k, v] : config.tolerances) doc["tolerance." + k] = v;
  for (const auto& [k, v] : config.catalog.items()) doc["catalog." + k] = v;
  return doc;
}

std::string config_hash(const RunConfig& config) {
  // hash only the semantic fields; output path and rendering format do not
  // change what was verified
  nlohmann::json doc = config_to_json(config);
  doc.erase("out");
  doc.erase("format");
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << fnv1a(doc.dump());
  return os.str();
}

}  // namespace fsdlab
