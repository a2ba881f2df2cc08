#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "biperiodic/catalog.hpp"
#include "biperiodic/errors.hpp"
#include "biperiodic/fastpath.hpp"
#include "biperiodic/sequence.hpp"
#include "biperiodic/suite.hpp"
#include "cli/report.hpp"

namespace biperiodic::cli {
namespace {

constexpr std::int64_t kNaiveBenchLimit = 10'000'000;

// Raised for flag combinations CLI11 cannot express on its own.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SequenceOptions {
  std::string seq;
  std::optional<std::string> a, b, c, w0, w1;
  std::optional<std::string> kind;
};

void add_sequence_options(CLI::App* cmd, SequenceOptions& opts) {
  cmd->add_option("--seq", opts.seq, "Catalog key, e.g. fibonacci or k-fibonacci(3)");
  cmd->add_option("--a", opts.a, "Even-index coefficient a (p or p/q)");
  cmd->add_option("--b", opts.b, "Odd-index coefficient b (p or p/q)");
  cmd->add_option("--c", opts.c, "Second-order coefficient c (p or p/q)");
  cmd->add_option("--w0", opts.w0, "Initial term w0 (default 0)");
  cmd->add_option("--w1", opts.w1, "Initial term w1 (default 1)");
  cmd->add_option("--kind", opts.kind, "u, v or w")->check(CLI::IsMember({"u", "v", "w"}));
}

struct Selection {
  Params params;
  SequenceKind kind;
  std::string label;
};

Selection resolve_sequence(const SequenceOptions& opts) {
  const bool explicit_params = opts.a || opts.b || opts.c || opts.w0 || opts.w1;
  if (!opts.seq.empty()) {
    if (explicit_params) throw UsageError("--seq cannot be combined with --a/--b/--c/--w0/--w1");
    NamedSequence named = lookup(opts.seq);
    const SequenceKind kind = opts.kind ? parse_kind(*opts.kind) : named.kind;
    return {named.params, kind, opts.seq};
  }
  if (!opts.a || !opts.b || !opts.c) {
    throw UsageError("either --seq or all of --a, --b, --c is required");
  }
  Params p(Rational::parse(*opts.a), Rational::parse(*opts.b), Rational::parse(*opts.c),
           opts.w0 ? Rational::parse(*opts.w0) : Rational(0),
           opts.w1 ? Rational::parse(*opts.w1) : Rational(1));
  std::ostringstream label;
  label << p;
  return {p, opts.kind ? parse_kind(*opts.kind) : SequenceKind::w, label.str()};
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::int64_t parse_index(const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer index: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer index: '" + text + "'");
  return value;
}

Params parse_point(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 5) throw UsageError("--point expects a,b,c,w0,w1, got '" + text + "'");
  return Params(Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
                Rational::parse(parts[3]), Rational::parse(parts[4]));
}

// ---------------------------------------------------------------- term

struct TermOptions {
  SequenceOptions seq;
  std::int64_t n = 0;
  std::string method = "doubling";
  std::string format = "plain";
};

int cmd_term(const TermOptions& opts, std::ostream& out) {
  const Selection sel = resolve_sequence(opts.seq);
  const Method method = parse_method(opts.method);
  const Rational value = term_fast(sel.params, sel.kind, opts.n, method);
  if (opts.format == "json") {
    nlohmann::ordered_json doc = {{"sequence", sel.label},
                                  {"params", params_json(sel.params)},
                                  {"kind", std::string(to_string(sel.kind))},
                                  {"n", opts.n},
                                  {"method", opts.method},
                                  {"value", value.str()}};
    out << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    out << "n,value\n" << opts.n << "," << value << "\n";
  } else {
    out << value << "\n";
  }
  return kSuccess;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  SequenceOptions seq;
  std::int64_t from = 0;
  std::int64_t to = 10;
  std::string format = "csv";
  std::string out_path;
};

int cmd_gen(const GenOptions& opts, std::ostream& out) {
  if (opts.from > opts.to) throw UsageError("--from must not exceed --to");
  const Selection sel = resolve_sequence(opts.seq);
  const auto values = terms_naive(sel.params, sel.kind, opts.from, opts.to);

  std::ofstream file;
  if (!opts.out_path.empty()) {
    file.open(opts.out_path);
    if (!file) throw UsageError("cannot write to '" + opts.out_path + "'");
  }
  std::ostream& sink = opts.out_path.empty() ? out : file;

  if (opts.format == "json") {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      rows.push_back({{"n", opts.from + static_cast<std::int64_t>(i)}, {"value", values[i].str()}});
    }
    sink << rows.dump(2) << "\n";
  } else if (opts.format == "plain") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      sink << opts.from + static_cast<std::int64_t>(i) << " " << values[i] << "\n";
    }
  } else {
    sink << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      sink << opts.from + static_cast<std::int64_t>(i) << "," << values[i] << "\n";
    }
  }
  sink.flush();
  if (!sink) throw UsageError("failed writing output");
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::int64_t max_index = 30;
  std::int64_t grid = 5;
  std::vector<std::string> points;
  bool exhaustive = false;
  std::string report = "json";
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  SuiteConfig config;
  config.suite = opts.suite;
  config.families = families_for_suite(opts.suite);
  config.samples = opts.samples;
  config.seed = opts.seed;
  config.max_index = opts.max_index;
  config.grid_bound = opts.grid;
  config.index_mode = opts.exhaustive ? IndexMode::exhaustive : IndexMode::random;
  for (const auto& point : opts.points) config.fixed_params.push_back(parse_point(point));
  if (config.samples < 1) throw UsageError("--samples must be >= 1");

  const SuiteSummary summary = run_suite(config);
  if (opts.report == "plain") {
    write_suite_plain(out, summary);
  } else {
    out << suite_json(summary).dump(2) << "\n";
  }
  if (summary.printed_form_mismatches > 0) {
    err << "warning: " << summary.printed_form_mismatches
        << " printed-form mismatch(es): the as-typeset statement disagrees with the exact "
           "value (SUM, L1.3; reported, not counted as failures)\n";
  }
  const ExitCode code = verify_outcome(summary);
  if (code != kSuccess) err << "error: " << summary.failed << " identity check(s) failed\n";
  return code;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  SequenceOptions seq;
  std::string n_list = "1000,10000,100000";
  std::string methods = "naive,matrix,doubling";
  std::size_t repeat = 3;
  std::string format = "plain";
};

struct BenchRow {
  Method method;
  std::int64_t n;
  std::vector<double> times_ms;
  std::uint64_t multiplications;
};

int cmd_bench(BenchOptions opts, std::ostream& out, std::ostream& err) {
  if (opts.seq.seq.empty() && !opts.seq.a) opts.seq.seq = "fibonacci";
  const Selection sel = resolve_sequence(opts.seq);
  std::vector<std::int64_t> ns;
  for (const auto& item : split_list(opts.n_list)) ns.push_back(parse_index(item));
  std::vector<Method> methods;
  for (const auto& item : split_list(opts.methods)) methods.push_back(parse_method(item));
  if (ns.empty() || methods.empty()) throw UsageError("--n-list and --methods must be non-empty");
  if (opts.repeat < 1) throw UsageError("--repeat must be >= 1");
  for (std::int64_t n : ns) {
    if (n < 1) throw UsageError("benchmark indices must be >= 1");
    if (n > kNaiveBenchLimit && std::find(methods.begin(), methods.end(), Method::naive) != methods.end()) {
      throw UsageError("naive method refused for n > 10^7 (n = " + std::to_string(n) + ")");
    }
  }

  std::vector<BenchRow> rows;
  for (std::int64_t n : ns) {
    std::optional<Rational> reference;
    for (Method method : methods) {
      BenchRow row{method, n, {}, 0};
      for (std::size_t rep = 0; rep < opts.repeat; ++rep) {
        MultiplicationCounter::Scope scope;
        const auto start = std::chrono::steady_clock::now();
        Rational value = term_fast(sel.params, sel.kind, n, method);
        const auto stop = std::chrono::steady_clock::now();
        row.times_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        row.multiplications = scope.count();
        if (!reference) {
          reference = std::move(value);
        } else if (value != *reference) {
          err << "error: method " << to_string(method) << " disagrees at n = " << n << "\n";
          return kCheckFailed;
        }
      }
      rows.push_back(std::move(row));
    }
  }

  if (opts.format == "json") {
    nlohmann::ordered_json doc;
    doc["sequence"] = sel.label;
    doc["kind"] = std::string(to_string(sel.kind));
    doc["repeat"] = opts.repeat;
    doc["values_agree"] = true;
    auto table = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      table.push_back({{"method", std::string(to_string(row.method))},
                       {"n", row.n},
                       {"median_ms", median(row.times_ms)},
                       {"times_ms", row.times_ms},
                       {"multiplications", row.multiplications}});
    }
    doc["rows"] = std::move(table);
    out << doc.dump(2) << "\n";
  } else {
    out << "sequence " << sel.label << "  kind " << to_string(sel.kind) << "  repeat "
        << opts.repeat << "  (values agree across methods)\n";
    out << std::left << std::setw(10) << "method" << std::right << std::setw(12) << "n"
        << std::setw(14) << "median_ms" << std::setw(16) << "multiplications" << "\n";
    for (const auto& row : rows) {
      out << std::left << std::setw(10) << to_string(row.method) << std::right << std::setw(12)
          << row.n << std::setw(14) << std::fixed << std::setprecision(3) << median(row.times_ms)
          << std::setw(16) << row.multiplications << "\n";
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- catalog

int cmd_catalog(const std::string& format, std::ostream& out) {
  const auto& entries = catalog_list();
  if (format == "json") {
    out << catalog_json(entries).dump(2) << "\n";
    return kSuccess;
  }
  if (format == "csv") out << "key,symbol,pattern,kind,name\n";
  for (const auto& e : entries) {
    std::string key = e.key;
    if (e.is_template()) {
      key += "(";
      for (std::size_t i = 0; i < e.arguments.size(); ++i) key += (i ? "," : "") + e.arguments[i];
      key += ")";
    }
    if (format == "csv") {
      out << '"' << key << "\"," << e.symbol << ",\"" << e.pattern << "\"," << to_string(e.kind)
          << "," << e.display_name << "\n";
    } else {
      out << key << " " << e.pattern << "  " << e.symbol << "  kind=" << to_string(e.kind) << "  "
          << e.display_name << (e.from_table ? "" : " (extra)") << "\n";
    }
  }
  return kSuccess;
}

}  // namespace

ExitCode verify_outcome(const SuiteSummary& summary) {
  return summary.all_passed() ? kSuccess : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bi-periodic Horadam sequences: terms, identity verification, benchmarks",
               "biperiodic"};
  app.require_subcommand(1);

  TermOptions term;
  auto* term_cmd = app.add_subcommand("term", "Print one exact term");
  add_sequence_options(term_cmd, term.seq);
  term_cmd->add_option("-n,--index", term.n, "Term index (may be negative)")->required();
  term_cmd->add_option("--method", term.method, "naive, matrix or doubling")
      ->check(CLI::IsMember({"naive", "matrix", "doubling"}));
  term_cmd->add_option("--format", term.format)->check(CLI::IsMember({"plain", "json", "csv"}));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Dump a range of terms");
  add_sequence_options(gen_cmd, gen.seq);
  gen_cmd->add_option("--from", gen.from, "First index");
  gen_cmd->add_option("--to", gen.to, "Last index (inclusive)");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"plain", "json", "csv"}));
  gen_cmd->add_option("--out", gen.out_path, "Write to this file instead of stdout");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the identity families at sampled points");
  verify_cmd->add_option("--suite", verify.suite,
                         "all, l1, l2, sum, binom, cassini, addition, catalan or prodsum");
  verify_cmd->add_option("--samples", verify.samples, "Number of parameter samples");
  verify_cmd->add_option("--seed", verify.seed, "Sampler seed");
  verify_cmd->add_option("--max-index", verify.max_index, "Largest drawn index");
  verify_cmd->add_option("--grid", verify.grid, "Numerator/denominator bound for sampled params");
  verify_cmd->add_option("--point", verify.points, "Fixed sample a,b,c,w0,w1 (repeatable)");
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Every index tuple up to --max-index");
  verify_cmd->add_option("--report", verify.report)->check(CLI::IsMember({"json", "plain"}));

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the evaluators against each other");
  add_sequence_options(bench_cmd, bench.seq);
  bench_cmd->add_option("--n-list", bench.n_list, "Comma-separated indices");
  bench_cmd->add_option("--methods", bench.methods, "Comma-separated subset of naive,matrix,doubling");
  bench_cmd->add_option("--repeat", bench.repeat, "Timed runs per cell (median reported)");
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"plain", "json"}));

  std::string catalog_action = "list";
  std::string catalog_format = "plain";
  auto* catalog_cmd = app.add_subcommand("catalog", "List the named sequences");
  catalog_cmd->add_option("action", catalog_action)->check(CLI::IsMember({"list"}));
  catalog_cmd->add_option("--format", catalog_format)
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*term_cmd) return cmd_term(term, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*catalog_cmd) return cmd_catalog(catalog_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const LookupError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace biperiodic::cli
