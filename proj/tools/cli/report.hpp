#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "biperiodic/catalog.hpp"
#include "biperiodic/sequence.hpp"
#include "biperiodic/suite.hpp"

namespace biperiodic::cli {

nlohmann::ordered_json params_json(const Params& p);

/// Human-readable lines for every printed-form disagreement in the summary.
std::vector<std::string> printed_form_warnings(const SuiteSummary& summary);

/// {suite, seed, samples, max_index, results, skipped, passed, failed,
///  printed_form_mismatches, per_identity, warnings}
nlohmann::ordered_json suite_json(const SuiteSummary& summary);

void write_suite_plain(std::ostream& os, const SuiteSummary& summary);

nlohmann::ordered_json catalog_json(const std::vector<CatalogEntry>& entries);

}  // namespace biperiodic::cli
