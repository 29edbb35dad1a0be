#pragma once

#include "fsdlab/config.hpp"
#include "fsdlab/report.hpp"

#include <string>
#include <vector>

namespace fsdlab::suites {

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs one suite; every check derives its randomness from (config.seed,
// check id), so records are independent of execution order.
std::vector<CheckRecord> run_suite(const std::string& name, const RunConfig& config);

// Runs all selected suites and returns the finalized (sorted) report.
VerificationReport run(const RunConfig& config);

}  // namespace fsdlab::suites
