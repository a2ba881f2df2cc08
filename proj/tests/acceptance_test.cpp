// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "biperiodic/catalog.hpp"
#include "biperiodic/fastpath.hpp"
#include "biperiodic/identities.hpp"
#include "biperiodic/matforms.hpp"
#include "biperiodic/suite.hpp"
#include "cli/cli.hpp"
#include "test_support.hpp"

namespace {

using namespace biperiodic;
using testing::ParamGen;
using testing::classical;
using testing::p_star;

// Collects the first failure message of a criterion; later ones are dropped.
class Check {
 public:
  void require(bool ok, const std::function<std::string()>& what) {
    if (!ok && failure_.empty()) failure_ = what();
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

template <typename T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Check oracle_equivalence(std::string& detail) {
  Check check;
  ParamGen gen(20260101);
  constexpr SequenceKind kinds[] = {SequenceKind::u, SequenceKind::v, SequenceKind::w};
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 500; ++i) {
    const Params p = gen.params();
    const SequenceKind kind = kinds[gen.index(0, 2)];
    const std::int64_t n = gen.index(-50, 200);
    const Rational naive = term_naive(p, kind, n);
    const Rational matrix = term_matrix(p, kind, n);
    const Rational doubling = term_doubling(p, kind, n);
    check.require(naive == matrix && naive == doubling, [&] {
      return show(p) + " kind " + show(kind) + " n=" + std::to_string(n) + ": naive " +
             naive.str() + ", matrix " + matrix.str() + ", doubling " + doubling.str();
    });
  }
  const double elapsed = seconds_since(start);
  check.require(elapsed < 60.0, [&] { return "took " + std::to_string(elapsed) + " s"; });
  detail = "500 cases, " + std::to_string(elapsed) + " s";
  return check;
}

Check matrix_closed_forms(std::string& detail) {
  Check check;
  ParamGen gen(20260102);
  int sets = 0;
  while (sets < 50) {
    const Params p = gen.params();
    if (discriminant(p).is_zero()) continue;
    ++sets;
    const Mat2 u = build(MatrixTag::U, p);
    const Mat2 u_inv = mat_inv(u);
    const Mat2 k = build(MatrixTag::K, p);
    const Mat2 t = build(MatrixTag::T, p);
    const Mat2 a = build(MatrixTag::A, p);
    const Rational det_u = -(p.a() * p.b() * p.c());
    Mat2 up = Mat2::identity(), uip = Mat2::identity(), kp = Mat2::identity(),
         ap = Mat2::identity();
    for (std::int64_t n = 0; n <= 40; ++n) {
      const auto where = [&](const char* form) {
        return std::string(form) + " at " + show(p) + " n=" + std::to_string(n);
      };
      check.require(u_power_closed(p, n) == up, [&] { return where("U^n"); });
      check.require(u_power_closed(p, -n) == uip, [&] { return where("U^-n"); });
      check.require(k_power_closed(p, n) == kp, [&] { return where("K^n"); });
      const KPowerDecomposition d = k_power_decompose(p, n);
      check.require(d.via_h(p) == kp, [&] { return where("K^n via H"); });
      check.require(d.via_k(p) == kp, [&] { return where("K^n via K"); });
      check.require(tu_power_closed(p, n) == mat_mul(t, up), [&] { return where("TU^n"); });
      check.require(a_power_closed(p, n) == ap, [&] { return where("A^n"); });
      check.require(mat_det(up) == rat_pow(det_u, n), [&] { return where("det U^n"); });
      up = mat_mul(up, u);
      uip = mat_mul(uip, u_inv);
      kp = mat_mul(kp, k);
      ap = mat_mul(ap, a);
    }
  }
  detail = "50 parameter sets, 0 <= n <= 40";
  return check;
}

Check identity_suites(std::string& detail) {
  Check check;
  SuiteConfig config;
  // Extra draws so that every identity still passes 200 times after skips.
  config.samples = 240;
  config.seed = 20260103;
  config.max_index = 30;
  const SuiteSummary s = run_suite(config);
  check.require(s.failed == 0, [&] { return std::to_string(s.failed) + " failures"; });
  for (const auto& r : s.reports) {
    check.require(r.pass, [&] {
      return r.id.str() + " sample " + std::to_string(r.sample) + ": " + r.lhs.str() +
             " != " + r.rhs.str();
    });
  }
  for (const auto& k : s.skipped) {
    const Params& p = s.sampled_params.at(k.sample);
    bool documented = discriminant(p).is_zero();
    if (!documented && k.id.family == Family::SUM) {
      documented = sum_constants(p, k.indices.at(0).value).d_corrected.is_zero();
    }
    check.require(documented, [&] { return "undocumented skip of " + k.id.str(); });
  }
  std::size_t fewest = config.samples;
  for (const auto& id : all_identity_ids()) {
    const auto it = s.per_identity.find(id.str());
    const FamilyTally tally = it == s.per_identity.end() ? FamilyTally{} : it->second;
    check.require(tally.passed + tally.skipped == config.samples && tally.failed == 0,
                  [&] { return id.str() + " evaluated " + std::to_string(tally.passed); });
    check.require(tally.passed >= 200,
                  [&] { return id.str() + " passed only " + std::to_string(tally.passed); });
    fewest = std::min(fewest, tally.passed);
  }
  detail = std::to_string(s.passed) + " passed, " + std::to_string(s.skipped.size()) +
           " skipped (zero discriminant or singular series), fewest passes per identity " +
           std::to_string(fewest);
  return check;
}
Check partial_sums(std::string& detail) {
  Check check;
  ParamGen gen(20260104);
  int sets = 0;
  int skipped_sets = 0;
  while (sets < 50) {
    const Params p = gen.params();
    bool usable = !discriminant(p).is_zero();
    for (std::int64_t m = 1; m <= 6 && usable; ++m) {
      usable = !sum_constants(p, m).d_corrected.is_zero();
    }
    if (!usable) {
      ++skipped_sets;
      continue;
    }
    ++sets;
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        for (std::int64_t r = 0; r <= 4; ++r) {
          const SeriesSums oracle = sum_oracle(p, m, n, r);
          for (SequenceKind series : {SequenceKind::u, SequenceKind::v}) {
            const Rational direct = sum_direct(p, series, m, n, r);
            const Rational closed = sum_closed_form(p, series, m, n, r);
            const Rational& expected = series == SequenceKind::u ? oracle.u_sum : oracle.v_sum;
            check.require(direct == expected && closed == expected, [&] {
              return show(p) + " " + show(series) + " m=" + std::to_string(m) +
                     " n=" + std::to_string(n) + " r=" + std::to_string(r) + ": direct " +
                     direct.str() + ", oracle " + expected.str() + ", closed " + closed.str();
            });
          }
        }
      }
    }
  }
  const Params star = p_star();
  const struct {
    std::int64_t m;
    Rational printed;
    Rational truth;
  } cases[] = {{2, Rational(323, 6), Rational(6)}, {1, Rational(-1, 11), Rational(1)}};
  std::ostringstream shown;
  for (const auto& c : cases) {
    const IdentityReport r = check_sum_theorem(star, SequenceKind::u, c.m, 1, 0);
    check.require(r.pass && r.lhs == c.truth && r.oracle_value == c.truth, [&] {
      return "m=" + std::to_string(c.m) + " true value " + r.lhs.str();
    });
    check.require(r.printed_form_value == c.printed && r.printed_form_matches == false, [&] {
      return "m=" + std::to_string(c.m) + " printed value " +
             (r.printed_form_value ? r.printed_form_value->str() : std::string("missing"));
    });
    shown << " (m=" << c.m << ",n=1,r=0) printed " << c.printed << " vs " << r.lhs << ";";
  }
  detail = std::to_string(sets) + " parameter sets (" + std::to_string(skipped_sets) +
           " singular draws replaced);" + shown.str();
  return check;
}

Check spot_values(std::string& detail) {
  Check check;
  const Params p = p_star();
  const auto expect = [&](const char* what, const Rational& got, const Rational& want) {
    check.require(got == want, [&] {
      return std::string(what) + " = " + got.str() + ", expected " + want.str();
    });
  };
  expect("u_5", term_fast(p, SequenceKind::u, 5), 55);
  expect("v_4", term_fast(p, SequenceKind::v, 4), 62);
  expect("w_5", term_fast(p, SequenceKind::w, 5), 79);
  expect("w_-1", term_fast(p, SequenceKind::w, -1), -2);
  expect("naive w_-1", term_naive(p, SequenceKind::w, -1), -2);
  expect("discriminant", discriminant(p), 60);
  const IdentityReport cassini = check_cassini_w(p, 2);
  expect("cassini lhs", cassini.lhs, Rational(-7, 2));
  expect("cassini rhs", cassini.rhs, Rational(-7, 2));
  const IdentityReport binom = check_binomial_theorem(p, SequenceKind::u, 2, 1, 1);
  expect("binomial rhs", binom.rhs, 7);
  expect("binomial lhs", binom.lhs, 7);
  detail = "u5=55 v4=62 w5=79 w-1=-2 disc=60 cassini=-7/2 binomial=7";
  return check;
}

Check catalog_fixtures(std::string& detail) {
  Check check;
  const std::map<std::string, std::vector<std::int64_t>> oracles = {
      {"fibonacci", classical(0, 1, 1, 1, 15)},
      {"pell", classical(0, 1, 2, 1, 15)},
      {"jacobsthal", classical(0, 1, 1, 2, 15)},
      {"pell-lucas", classical(2, 2, 2, 1, 15)},
      {"jacobsthal-lucas", classical(2, 1, 1, 2, 15)},
  };
  const std::map<std::string, std::vector<std::int64_t>> prefixes = {
      {"fibonacci", {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377}},
      {"pell", {0, 1, 2, 5, 12, 29, 70}},
      {"jacobsthal", {0, 1, 1, 3, 5, 11, 21}},
      {"pell-lucas", {2, 2, 6, 14, 34}},
      {"jacobsthal-lucas", {2, 1, 5, 7, 17, 31}},
  };
  for (const auto& [name, oracle] : oracles) {
    const NamedSequence s = lookup(name);
    const auto terms = terms_naive(s.params, s.kind, 0, 14);
    for (std::size_t i = 0; i < 15; ++i) {
      check.require(terms[i] == Rational(oracle[i]), [&] {
        return name + " term " + std::to_string(i) + " = " + terms[i].str() + ", oracle " +
               std::to_string(oracle[i]);
      });
    }
    const auto& prefix = prefixes.at(name);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      check.require(oracle[i] == prefix[i], [&] { return name + " oracle prefix"; });
    }
  }
  detail = "fibonacci, pell, jacobsthal, pell-lucas, jacobsthal-lucas; 15 terms each";
  return check;
}

Check performance(std::string& detail) {
  Check check;
  const Params f = testing::fibonacci_params();
  const Rational d5 = term_doubling(f, SequenceKind::u, 100000);
  const Rational m5 = term_matrix(f, SequenceKind::u, 100000);
  check.require(d5 == m5, [] { return std::string("doubling != matrix at n = 10^5"); });

  std::ostringstream shown;
  auto start = std::chrono::steady_clock::now();
  const Rational d6 = term_doubling(f, SequenceKind::u, 1000000);
  const double t_doubling = seconds_since(start);
  start = std::chrono::steady_clock::now();
  const Rational m6 = term_matrix(f, SequenceKind::u, 1000000);
  const double t_matrix = seconds_since(start);
  check.require(d6 == m6, [] { return std::string("doubling != matrix at n = 10^6"); });
  check.require(t_doubling < 30.0 && t_matrix < 30.0, [&] {
    return "n = 10^6 took " + std::to_string(t_doubling) + " s / " + std::to_string(t_matrix) +
           " s";
  });
  shown << "n=10^6 doubling " << t_doubling << " s, matrix " << t_matrix << " s; counts";

  constexpr std::uint64_t kPerBit = 10;
  for (int bits : {10, 15, 20}) {
    MultiplicationCounter::Scope scope;
    (void)uv_doubling(f, std::int64_t{1} << bits);
    const std::uint64_t count = scope.count();
    check.require(count <= kPerBit * static_cast<std::uint64_t>(bits), [&] {
      return "2^" + std::to_string(bits) + " used " + std::to_string(count) + " multiplications";
    });
    shown << " 2^" << bits << ":" << count;
  }
  shown << " (bound " << kPerBit << " per bit)";
  detail = shown.str();
  return check;
}

std::pair<int, std::string> run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + "\x1f" + err.str()};
}

int run_binary(const std::string& args) {
  const std::string command =
      std::string(BIPERIODIC_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Check cli_contract(std::string& detail) {
  Check check;
  const auto expect_code = [&](const std::vector<std::string>& args, int want) {
    const int got = run_cli(args).first;
    check.require(got == want, [&] {
      std::string line;
      for (const auto& a : args) line += a + " ";
      return line + "-> exit " + std::to_string(got) + ", expected " + std::to_string(want);
    });
  };
  expect_code({"term", "--a", "2", "--b", "3", "--c", "1", "--w0", "1", "--w1", "1", "-n", "5"}, 0);
  expect_code({"term", "--a", "0", "--b", "3", "--c", "1", "-n", "5"}, 2);
  expect_code({"term", "--seq", "no-such-sequence", "-n", "5"}, 2);
  expect_code({"verify", "--suite", "bogus"}, 2);
  expect_code({"bench", "--n-list", "20000000", "--methods", "naive"}, 2);

  SuiteSummary failing;
  failing.failed = 1;
  check.require(cli::verify_outcome(failing) == cli::kCheckFailed,
                [] { return std::string("failed checks do not map to exit 1"); });

  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"verify", "--suite", "all", "--samples", "100"}, out, err);
  check.require(code == 0, [&] { return "verify --suite all exited " + std::to_string(code); });
  check.require(err.str().find("printed-form mismatch") != std::string::npos,
                [] { return std::string("no printed-form warning"); });

  const auto again = run_cli({"verify", "--suite", "all", "--samples", "100"});
  check.require(again.second == out.str() + "\x1f" + err.str(),
                [] { return std::string("verify output differs between runs"); });

  check.require(run_binary("term --seq fibonacci -n 10") == 0,
                [] { return std::string("binary: term exit"); });
  check.require(run_binary("verify --suite bogus") == 2,
                [] { return std::string("binary: bogus suite exit"); });
  detail = "exit codes 0/1/2, warnings present, reports repeat byte for byte";
  return check;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Check (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"AC1 oracle equivalence", oracle_equivalence},
      {"AC2 matrix closed forms", matrix_closed_forms},
      {"AC3 identity suites", identity_suites},
      {"AC4 partial-sum agreement", partial_sums},
      {"AC5 spot values", spot_values},
      {"AC6 catalog fixtures", catalog_fixtures},
      {"AC7 performance", performance},
      {"AC8 cli contract", cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    Check result;
    try {
      result = c.run(detail);
    } catch (const std::exception& e) {
      result.require(false, [&] { return std::string("exception: ") + e.what(); });
    }
    if (result.ok()) {
      std::cout << "PASS " << c.label << ": " << detail << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << c.label << ": " << result.failure() << "\n";
    }
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
