#include "biperiodic/suite.hpp"

#include <algorithm>
#include <tuple>
#include <random>
#include <string>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

using IndexTuple = std::vector<std::int64_t>;

struct IndexRange {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;
};

// Index bounds per identity, as a function of the suite's max index.
std::vector<IndexRange> ranges_for(const IdentityId& id, std::int64_t bound) {
  const std::int64_t b = std::max<std::int64_t>(bound, 1);
  switch (id.family) {
    case Family::L1:
    case Family::L2:
      if (id.sub == 1) return {{"n", 1, b}};
      return {{"m", 1, b}, {"n", 1, b}};
    case Family::SUM:
      return {{"m", 1, std::min<std::int64_t>(b, 6)},
              {"n", 0, std::min<std::int64_t>(b, 6)},
              {"r", 0, std::min<std::int64_t>(b, 4)}};
    case Family::BINOM:
      return {{"m", 2, std::max<std::int64_t>(b, 2)}, {"n", 0, b}, {"r", 0, b}};
    case Family::CASSINI_W:
    case Family::COR31:
    case Family::T34:
      return {{"n", 1, b}};
    case Family::ADDITION:
      return {{"n", 1, b}, {"q", 1, b}};
    case Family::CATALAN:
      return {{"n", 1, b}, {"p", 1, b}, {"q", 1, b}};
    case Family::PRODSUM:
      return {{"m", 1, b}, {"n", 1, b}};
  }
  return {};
}

std::vector<IndexTuple> enumerate(const std::vector<IndexRange>& ranges) {
  std::vector<IndexTuple> out{IndexTuple{}};
  for (const auto& range : ranges) {
    std::vector<IndexTuple> next;
    for (const auto& prefix : out) {
      for (std::int64_t v = range.lo; v <= range.hi; ++v) {
        auto tuple = prefix;
        tuple.push_back(v);
        next.push_back(std::move(tuple));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational draw_rational(std::mt19937_64& rng, std::int64_t bound, bool allow_zero) {
  std::int64_t num = 0;
  do {
    num = draw(rng, -bound, bound);
  } while (!allow_zero && num == 0);
  return Rational(num, draw(rng, 1, bound));
}

IdentityReport evaluate(const Params& p, const IdentityId& id, const IndexTuple& ix) {
  switch (id.family) {
    case Family::L1:
      return id.sub == 1 ? check_lemma1(p, 1, 1, ix[0]) : check_lemma1(p, id.sub, ix[0], ix[1]);
    case Family::L2:
      return id.sub == 1 ? check_lemma2(p, 1, 1, ix[0]) : check_lemma2(p, id.sub, ix[0], ix[1]);
    case Family::SUM:
      return check_sum_theorem(p, id.sub == 0 ? SequenceKind::u : SequenceKind::v, ix[0], ix[1],
                               ix[2]);
    case Family::BINOM:
      return check_binomial_theorem(p, id.sub == 0 ? SequenceKind::u : SequenceKind::v, ix[0],
                                    ix[1], ix[2]);
    case Family::CASSINI_W:
      return check_cassini_w(p, ix[0]);
    case Family::ADDITION:
      return check_addition(p, ix[0], ix[1]);
    case Family::CATALAN:
      return check_catalan(p, ix[0], ix[1], ix[2]);
    case Family::PRODSUM:
      return check_product_sum(p, ix[0], ix[1]);
    case Family::COR31:
      return check_square_sum(p, ix[0]);
    case Family::T34:
      return check_square_difference(p, ix[0]);
  }
  throw InvalidParameterError("unknown identity family");
}

std::vector<NamedIndex> name_indices(const std::vector<IndexRange>& ranges, const IndexTuple& ix) {
  std::vector<NamedIndex> out;
  for (std::size_t k = 0; k < ranges.size(); ++k) out.push_back({ranges[k].name, ix[k]});
  return out;
}

}  // namespace

std::vector<Family> families_for_suite(std::string_view key) {
  if (key == "all") {
    return {Family::L1,       Family::L2,      Family::SUM,     Family::BINOM, Family::CASSINI_W,
            Family::ADDITION, Family::CATALAN, Family::PRODSUM, Family::COR31, Family::T34};
  }
  if (key == "l1") return {Family::L1};
  if (key == "l2") return {Family::L2};
  if (key == "sum") return {Family::SUM};
  if (key == "binom") return {Family::BINOM};
  if (key == "cassini") return {Family::CASSINI_W};
  if (key == "addition") return {Family::ADDITION};
  if (key == "catalan") return {Family::CATALAN};
  if (key == "prodsum") return {Family::PRODSUM, Family::COR31, Family::T34};
  throw InvalidParameterError(
      "unknown suite '" + std::string(key) +
      "' (expected all, l1, l2, sum, binom, cassini, addition, catalan or prodsum)");
}

std::vector<Params> sample_params(const SuiteConfig& config) {
  if (config.grid_bound < 1) throw InvalidParameterError("grid bound must be >= 1");
  std::mt19937_64 rng(config.seed);
  std::vector<Params> out;
  out.reserve(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    if (i < config.fixed_params.size()) {
      out.push_back(config.fixed_params[i]);
      continue;
    }
    const std::int64_t g = config.grid_bound;
    Rational a = draw_rational(rng, g, false);
    Rational b = draw_rational(rng, g, false);
    Rational c = draw_rational(rng, g, false);
    Rational w0 = draw_rational(rng, g, true);
    Rational w1 = draw_rational(rng, g, true);
    out.emplace_back(std::move(a), std::move(b), std::move(c), std::move(w0), std::move(w1));
  }
  return out;
}

SuiteSummary run_suite(const SuiteConfig& config) {
  if (config.samples < 1) throw InvalidParameterError("sample count must be >= 1");
  SuiteSummary summary;
  summary.config = config;
  summary.sampled_params = sample_params(config);

  const std::vector<Family> families =
      config.families.empty() ? families_for_suite("all") : config.families;
  std::vector<IdentityId> ids;
  for (const auto& id : all_identity_ids()) {
    if (std::find(families.begin(), families.end(), id.family) != families.end()) {
      ids.push_back(id);
    }
  }

  // Index draws use their own stream so that adding families does not
  // perturb parameter sampling.
  std::mt19937_64 index_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t s = 0; s < summary.sampled_params.size(); ++s) {
    const Params& p = summary.sampled_params[s];
    for (const auto& id : ids) {
      const auto ranges = ranges_for(id, config.max_index);
      std::vector<IndexTuple> tuples;
      if (config.index_mode == IndexMode::exhaustive) {
        tuples = enumerate(ranges);
      } else {
        IndexTuple tuple;
        for (const auto& range : ranges) tuple.push_back(draw(index_rng, range.lo, range.hi));
        tuples.push_back(std::move(tuple));
      }
      for (const auto& tuple : tuples) {
        auto& tally = summary.per_identity[id.str()];
        try {
          IdentityReport report = evaluate(p, id, tuple);
          report.sample = s;
          if (report.pass) {
            ++summary.passed;
            ++tally.passed;
          } else {
            ++summary.failed;
            ++tally.failed;
          }
          if (report.printed_form_matches.has_value() && !*report.printed_form_matches) {
            ++summary.printed_form_mismatches;
          }
          summary.reports.push_back(std::move(report));
        } catch (const DegenerateParameterError& e) {
          ++tally.skipped;
          summary.skipped.push_back({id, s, name_indices(ranges, tuple), e.what()});
        } catch (const SingularSeriesError& e) {
          ++tally.skipped;
          summary.skipped.push_back({id, s, name_indices(ranges, tuple), e.what()});
        }
      }
    }
  }

  std::stable_sort(summary.reports.begin(), summary.reports.end(),
                   [](const IdentityReport& x, const IdentityReport& y) {
                     return std::tie(x.id, x.sample) < std::tie(y.id, y.sample);
                   });
  std::stable_sort(summary.skipped.begin(), summary.skipped.end(),
                   [](const SkipRecord& x, const SkipRecord& y) {
                     return std::tie(x.id, x.sample) < std::tie(y.id, y.sample);
                   });
  return summary;
}

}  // namespace biperiodic
