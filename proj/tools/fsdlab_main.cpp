#include "fsdlab/config.hpp"
#include "fsdlab/fsdet.hpp"
#include "fsdlab/levi.hpp"
#include "fsdlab/orders.hpp"
#include "fsdlab/report.hpp"
#include "fsdlab/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fsdlab;

// Complex tokens of the form "1", "-2.5", "i", "-i", "2i", "1+2i", "1-2i".
Complex parse_complex(const std::string& token) {
  if (token.empty()) throw ConfigError("empty component in point");
  std::string s = token;
  if (s == "i") return Complex(0.0, 1.0);
  if (s == "-i") return Complex(0.0, -1.0);
  if (s == "+i") return Complex(0.0, 1.0);
  if (s.back() == 'i') {
    s.pop_back();
    // split at the last +/- that is not an exponent sign or leading sign
    for (std::size_t pos = s.size(); pos-- > 1;) {
      if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E') {
        const std::string re = s.substr(0, pos);
        std::string im = s.substr(pos);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return Complex(std::stod(re), std::stod(im));
      }
    }
    if (s.empty()) return Complex(0.0, 1.0);
    return Complex(0.0, std::stod(s));
  }
  return Complex(std::stod(s), 0.0);
}

Vector parse_point(const std::string& csv, Eigen::Index expected_dim) {
  std::vector<Complex> parts;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) parts.push_back(parse_complex(token));
  if (expected_dim >= 0 && static_cast<Eigen::Index>(parts.size()) != expected_dim) {
    std::ostringstream os;
    os << "point has " << parts.size() << " components, expected " << expected_dim;
    throw ConfigError(os.str());
  }
  Vector z(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) z(j) = parts[j];
  return z;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot open output path: " + out_path);
    out << text;
  }
}

int cmd_run(RunConfig cfg) {
  if (cfg.suites.empty()) throw ConfigError("no suites selected (use --suite or the config file)");
  const VerificationReport report = suites::run(cfg);
  if (cfg.format == RunConfig::Format::json) {
    emit(report.to_json().dump(2) + "\n", cfg.out_path);
  } else {
    emit(report.to_text(), cfg.out_path);
  }
  return report.any_failed() ? 1 : 0;
}

int cmd_fsd(const std::string& kind, int dim, const std::string& point_csv,
            const std::string& weights_csv, double radius) {
  levi::CatalogParams params;
  params.dim = dim;
  params.working_radius = radius;
  if (!weights_csv.empty()) {
    std::vector<double> w;
    std::stringstream ss(weights_csv);
    std::string token;
    while (std::getline(ss, token, ',')) w.push_back(std::stod(token));
    RealVector wv(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) wv(j) = w[j];
    params.weights = wv;
    params.dim = static_cast<int>(w.size());
  }
  const levi::TestFunction f = levi::make_catalog(kind, params);
  const Vector z = point_csv.empty() ? Vector(Vector::Zero(f.dim()))
                                     : parse_point(point_csv, f.dim());
  const auto result = levi::fsd(f, z);
  const auto d = eigh(f.levi(z));
  std::cout << "kind: " << f.name() << "  dim: " << f.dim() << "\n";
  std::cout << "FSD: " << result.value << "\n";
  std::cout << "levi spectrum: min " << d.min_eig() << ", max " << d.max_eig() << "\n";
  std::cout << "sampled delta infimum: " << result.sampled_inf << " (" << result.samples
            << " states)\n";
  if (result.truncation_caveat) {
    std::cout << "note: truncation value; the modeled operator has spectral infimum 0 as dim -> "
                 "infinity\n";
  }
  return 0;
}

int cmd_search(int dim, int trials, std::uint64_t seed) {
  const auto report = orders::counterexample_search(dim, trials, seed);
  std::cout << "trials: " << report.trials << "  found: " << report.found
            << "  hit rate: " << report.hit_rate << "\n";
  int index = 0;
  for (const auto& hit : report.hits) {
    std::cout << "hit " << index++ << (index == 1 ? " (fixture)" : "")
              << ": chaotic margin " << hit.chaotic.margin << ", loewner margin "
              << hit.loewner.margin << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification lab for normalized determinants, chaotic order, and "
               "Levi-form maximality criteria"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> suite_flags;
  std::string dims_csv;
  std::string format_flag;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 0;

  auto* run = app.add_subcommand("run", "run verification suites and emit a report");
  run->add_option("--config", config_path, "config file (flat JSON; see README)");
  run->add_option("--suite", suite_flags, "suite id (repeatable)");
  run->add_option("--dims", dims_csv, "comma-separated truncation dimensions");
  run->add_option("--trials", trials, "random instances per property");
  run->add_option_function<std::uint64_t>(
      "--seed", [&](std::uint64_t v) { seed = v; seed_set = true; }, "root seed");
  run->add_option("--format", format_flag, "json|text");
  run->add_option("--out", out_path, "write the report to this path");

  auto* fsd = app.add_subcommand("fsd", "evaluate the determinant density of a catalog entry");
  std::string kind, point_csv, weights_csv;
  int fsd_dim = 4;
  double radius = 2.0;
  fsd->add_option("kind", kind, "catalog kind id")->required();
  fsd->add_option("-n,--dim", fsd_dim, "truncation dimension");
  fsd->add_option("--point", point_csv, "evaluation point, e.g. '1,i,0'");
  fsd->add_option("--weights", weights_csv, "weights for the weighted kind");
  fsd->add_option("--radius", radius, "working radius for the phi kinds");

  auto* search = app.add_subcommand("search", "search for chaotic-but-not-Loewner pairs");
  int search_dim = 2, search_trials = 1000;
  std::uint64_t search_seed = 42;
  search->add_option("--dim", search_dim, "matrix dimension (>= 2)");
  search->add_option("--trials", search_trials, "random trials");
  search->add_option("--seed", search_seed, "seed");

  auto* list_suites = app.add_subcommand("list-suites", "print suite identifiers");
  auto* list_catalog = app.add_subcommand("list-catalog", "print catalog kind identifiers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      RunConfig cfg;
      if (!config_path.empty()) cfg = config_from_file(config_path);
      for (const auto& s : suite_flags) cfg.suites.push_back(s);
      if (!dims_csv.empty()) {
        cfg.dims.clear();
        std::stringstream ss(dims_csv);
        std::string token;
        while (std::getline(ss, token, ',')) cfg.dims.push_back(std::stoi(token));
      }
      if (trials > 0) cfg.trials = trials;
      if (seed_set) cfg.seed = seed;
      if (format_flag == "json") cfg.format = RunConfig::Format::json;
      else if (format_flag == "text") cfg.format = RunConfig::Format::text;
      else if (!format_flag.empty()) throw ConfigError("format must be 'json' or 'text'");
      if (!out_path.empty()) cfg.out_path = out_path;
      cfg.validate();
      return cmd_run(std::move(cfg));
    }
    if (fsd->parsed()) return cmd_fsd(kind, fsd_dim, point_csv, weights_csv, radius);
    if (search->parsed()) return cmd_search(search_dim, search_trials, search_seed);
    if (list_suites->parsed()) {
      for (const auto& name : suites::suite_names()) std::cout << name << "\n";
      return 0;
    }
    if (list_catalog->parsed()) {
      for (const auto& name : levi::catalog_kinds()) std::cout << name << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
