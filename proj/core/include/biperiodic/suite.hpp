#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "biperiodic/identities.hpp"

namespace biperiodic {

enum class IndexMode {
  random,      // one draw of the indices per identity per sample
  exhaustive,  // every index tuple within the bounds
};

struct SuiteConfig {
  std::string suite = "all";
  std::vector<Family> families;  // empty means every family
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::int64_t max_index = 30;
  /// a, b, c are drawn as p/q with p in [-bound, bound] \ {0}, q in [1, bound];
  /// w0, w1 likewise but with p allowed to be zero.
  std::int64_t grid_bound = 5;
  /// Used for the first samples in order; the rest are drawn from the grid.
  std::vector<Params> fixed_params;
  IndexMode index_mode = IndexMode::random;
};

struct SkipRecord {
  IdentityId id;
  std::size_t sample = 0;
  std::vector<NamedIndex> indices;
  std::string reason;
};

struct FamilyTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct SuiteSummary {
  SuiteConfig config;
  std::vector<Params> sampled_params;
  std::vector<IdentityReport> reports;  // sorted by (id, sample)
  std::vector<SkipRecord> skipped;      // sorted by (id, sample)
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t printed_form_mismatches = 0;
  std::map<std::string, FamilyTally> per_identity;  // keyed by IdentityId::str()

  bool all_passed() const { return failed == 0; }
};

/// Families for a CLI suite key: all, l1, l2, sum, binom, cassini, addition,
/// catalan, prodsum (the latter also covers COR31 and T34).
/// Throws InvalidParameterError for anything else.
std::vector<Family> families_for_suite(std::string_view key);

/// Draws the parameter set for `sample` deterministically from `config`.
std::vector<Params> sample_params(const SuiteConfig& config);

/// Evaluates every selected identity at every sample. Deterministic for a given
/// config. Precondition violations (zero discriminant, singular partial-sum
/// denominator) become skip records; identity failures are reported, not thrown.
SuiteSummary run_suite(const SuiteConfig& config);

}  // namespace biperiodic
