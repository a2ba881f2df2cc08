#include "cli/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace biperiodic::cli {
namespace {

std::string indices_text(const std::vector<NamedIndex>& indices) {
  std::ostringstream os;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    os << (i ? "," : "") << indices[i].name << "=" << indices[i].value;
  }
  return os.str();
}

nlohmann::ordered_json indices_json(const std::vector<NamedIndex>& indices) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& ix : indices) out[ix.name] = ix.value;
  return out;
}

}  // namespace

nlohmann::ordered_json params_json(const Params& p) {
  return {{"a", p.a().str()}, {"b", p.b().str()}, {"c", p.c().str()},
          {"w0", p.w0().str()}, {"w1", p.w1().str()}};
}

std::vector<std::string> printed_form_warnings(const SuiteSummary& summary) {
  std::vector<std::string> out;
  for (const auto& r : summary.reports) {
    if (!r.printed_form_matches.has_value() || *r.printed_form_matches) continue;
    std::ostringstream os;
    os << "printed-form mismatch: " << r.id.str() << " sample " << r.sample << " ("
       << indices_text(r.indices) << "): printed "
       << (r.printed_form_value ? r.printed_form_value->str() : std::string("undefined"))
       << ", true " << (r.id.family == Family::SUM ? r.lhs : r.rhs);
    out.push_back(os.str());
  }
  return out;
}

nlohmann::ordered_json suite_json(const SuiteSummary& summary) {
  nlohmann::ordered_json doc;
  doc["suite"] = summary.config.suite;
  doc["seed"] = summary.config.seed;
  doc["samples"] = summary.config.samples;
  doc["max_index"] = summary.config.max_index;

  auto results = nlohmann::ordered_json::array();
  for (const auto& r : summary.reports) {
    nlohmann::ordered_json row;
    row["id"] = r.id.str();
    row["sample"] = r.sample;
    row["params"] = params_json(r.params);
    row["indices"] = indices_json(r.indices);
    row["lhs"] = r.lhs.str();
    row["rhs"] = r.rhs.str();
    row["pass"] = r.pass;
    if (r.oracle_value) row["oracle_value"] = r.oracle_value->str();
    if (r.printed_form_value) row["printed_form_value"] = r.printed_form_value->str();
    if (r.printed_form_matches) row["printed_form_matches"] = *r.printed_form_matches;
    results.push_back(std::move(row));
  }
  doc["results"] = std::move(results);

  auto skipped = nlohmann::ordered_json::array();
  for (const auto& s : summary.skipped) {
    skipped.push_back({{"id", s.id.str()},
                       {"sample", s.sample},
                       {"indices", indices_json(s.indices)},
                       {"reason", s.reason}});
  }
  doc["skipped"] = std::move(skipped);
  doc["passed"] = summary.passed;
  doc["failed"] = summary.failed;
  doc["printed_form_mismatches"] = summary.printed_form_mismatches;

  auto per_identity = nlohmann::ordered_json::object();
  for (const auto& id : all_identity_ids()) {
    auto it = summary.per_identity.find(id.str());
    if (it == summary.per_identity.end()) continue;
    per_identity[id.str()] = {{"passed", it->second.passed},
                              {"failed", it->second.failed},
                              {"skipped", it->second.skipped}};
  }
  doc["per_identity"] = std::move(per_identity);
  doc["warnings"] = printed_form_warnings(summary);
  return doc;
}

void write_suite_plain(std::ostream& os, const SuiteSummary& summary) {
  os << "suite " << summary.config.suite << "  seed " << summary.config.seed << "  samples "
     << summary.config.samples << "  max-index " << summary.config.max_index << "\n";
  os << std::left << std::setw(12) << "identity" << std::right << std::setw(8) << "passed"
     << std::setw(8) << "failed" << std::setw(9) << "skipped" << "\n";
  for (const auto& id : all_identity_ids()) {
    auto it = summary.per_identity.find(id.str());
    if (it == summary.per_identity.end()) continue;
    os << std::left << std::setw(12) << id.str() << std::right << std::setw(8)
       << it->second.passed << std::setw(8) << it->second.failed << std::setw(9)
       << it->second.skipped << "\n";
  }
  for (const auto& r : summary.reports) {
    if (r.pass) continue;
    os << "FAIL " << r.id.str() << " sample " << r.sample << " " << r.params << " ("
       << indices_text(r.indices) << "): lhs " << r.lhs << " rhs " << r.rhs << "\n";
  }
  os << "passed " << summary.passed << "  failed " << summary.failed << "  skipped "
     << summary.skipped.size() << "  printed-form mismatches " << summary.printed_form_mismatches
     << "\n";
}

nlohmann::ordered_json catalog_json(const std::vector<CatalogEntry>& entries) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["key"] = e.key;
    row["symbol"] = e.symbol;
    row["name"] = e.display_name;
    row["pattern"] = e.pattern;
    row["kind"] = std::string(to_string(e.kind));
    row["arguments"] = e.arguments;
    row["from_table"] = e.from_table;
    row["params"] = e.is_template() ? nlohmann::ordered_json(nullptr)
                                    : params_json(e.instantiate({}).params);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace biperiodic::cli
