#pragma once

#include <string>
#include <vector>

#include "radlat/cli/fuzz.hpp"
#include "radlat/verdict.hpp"

namespace radlat::cli {

// Suite names accepted by `verify`, in the order `all` runs them.
const std::vector<std::string>& suite_names();
// Throws InputError for an unknown name.
VerdictReport run_suite(const std::string& name, const RunConfig& cfg);
// The eight model properties every model suite quantifies over.
const std::vector<std::string>& model_properties();

constexpr int report_schema_version = 1;
// One JSON object per clause, per note, and a closing summary line.
std::string report_jsonl(const VerdictReport& rep);

} // namespace radlat::cli
