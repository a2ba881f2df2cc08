#include "biperiodic/identities.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "biperiodic/errors.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/matforms.hpp"

namespace biperiodic {
namespace {

// Memoised naive terms for one parameter set. Negative indices are resolved
// through the reflection formulas from positive-index u-terms.
class TermCache {
 public:
  explicit TermCache(const Params& p) : p_(p) {}

  Rational u(std::int64_t n) { return get(SequenceKind::u, n); }
  Rational v(std::int64_t n) { return get(SequenceKind::v, n); }
  Rational w(std::int64_t n) { return get(SequenceKind::w, n); }

  Rational get(SequenceKind kind, std::int64_t n) {
    auto& series = series_[static_cast<int>(kind)];
    if (n < 0) {
      auto it = series.negative.find(n);
      if (it == series.negative.end()) {
        it = series.negative.emplace(n, negative_term_from_u(p_, kind, -n, u(-n), u(-n + 1))).first;
      }
      return it->second;
    }
    const auto index = static_cast<std::size_t>(n);
    if (index >= series.positive.size()) {
      series.positive = terms_naive(p_, kind, 0, std::max<std::int64_t>(n, 2 * static_cast<std::int64_t>(series.positive.size())));
    }
    return series.positive[index];
  }

 private:
  struct Series {
    std::vector<Rational> positive;
    std::map<std::int64_t, Rational> negative;
  };

  const Params& p_;
  Series series_[3];
};

Rational pow_int(const Rational& x, std::int64_t e) { return rat_pow(x, e); }

Rational minus_c_pow(const Params& p, std::int64_t e) { return rat_pow(-p.c(), e); }

// (b/a)^e
Rational ratio_pow(const Params& p, std::int64_t e) { return rat_pow(p.b() / p.a(), e); }

// (a/b)^e
Rational inv_ratio_pow(const Params& p, std::int64_t e) { return rat_pow(p.a() / p.b(), e); }

std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

Rational ab_half_pow(const Params& p, std::int64_t n) {
  return pow_int(p.a() * p.b(), floor_half(n));
}

void require_at_least(std::int64_t value, std::int64_t bound, const char* name, const char* what) {
  if (value < bound) {
    throw InvalidParameterError(std::string(what) + " requires " + name + " >= " +
                                std::to_string(bound) + ", got " + std::to_string(value));
  }
}

void require_nondegenerate(const Params& p, const char* what) {
  if (discriminant(p).is_zero()) {
    throw DegenerateParameterError(std::string(what) + ": discriminant a^2 b^2 + 4abc is zero");
  }
}

void require_series(SequenceKind series, const char* what) {
  if (series == SequenceKind::w) {
    throw InvalidParameterError(std::string(what) + " is stated for u and v only");
  }
}

int series_sub(SequenceKind series) { return series == SequenceKind::u ? 0 : 1; }

IdentityReport make_report(IdentityId id, const Params& p, std::vector<NamedIndex> indices,
                           Rational lhs, Rational rhs) {
  IdentityReport report{id, p, std::move(indices), std::move(lhs), std::move(rhs), false,
                        std::nullopt, std::nullopt, std::nullopt, 0};
  report.pass = report.lhs == report.rhs;
  return report;
}

// w1^2 - b w0 w1 - c (b/a) w0^2, the invariant behind the Cassini-type identities.
Rational w_characteristic(const Params& p) {
  const Rational& w0 = p.w0();
  const Rational& w1 = p.w1();
  return w1 * w1 - p.b() * w0 * w1 - p.c() * (p.b() / p.a()) * w0 * w0;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::L1:
      return "L1";
    case Family::L2:
      return "L2";
    case Family::SUM:
      return "SUM";
    case Family::BINOM:
      return "BINOM";
    case Family::CASSINI_W:
      return "CASSINI_W";
    case Family::ADDITION:
      return "ADDITION";
    case Family::CATALAN:
      return "CATALAN";
    case Family::PRODSUM:
      return "PRODSUM";
    case Family::COR31:
      return "COR31";
    case Family::T34:
      return "T34";
  }
  return "?";
}

std::string IdentityId::str() const {
  switch (family) {
    case Family::L1:
    case Family::L2:
      return to_string(family) + "." + std::to_string(sub);
    case Family::SUM:
    case Family::BINOM:
      return to_string(family) + (sub == 0 ? ".u" : ".v");
    default:
      return to_string(family);
  }
}

std::vector<IdentityId> all_identity_ids() {
  std::vector<IdentityId> ids;
  for (int sub = 1; sub <= 4; ++sub) ids.push_back({Family::L1, sub});
  for (int sub = 1; sub <= 7; ++sub) ids.push_back({Family::L2, sub});
  ids.push_back({Family::SUM, 0});
  ids.push_back({Family::SUM, 1});
  ids.push_back({Family::BINOM, 0});
  ids.push_back({Family::BINOM, 1});
  for (Family f : {Family::CASSINI_W, Family::ADDITION, Family::CATALAN, Family::PRODSUM,
                   Family::COR31, Family::T34}) {
    ids.push_back({f, 0});
  }
  return ids;
}

IdentityReport check_lemma1(const Params& p, int sub, std::int64_t m, std::int64_t n) {
  require_at_least(n, 1, "n", "check_lemma1");
  TermCache t(p);
  const Rational& c = p.c();
  if (sub == 1) {
    Rational lhs = inv_ratio_pow(p, zeta(n)) * t.u(n) * t.u(n) -
                   inv_ratio_pow(p, zeta(n + 1)) * t.u(n - 1) * t.u(n + 1);
    Rational rhs = (p.a() / p.b()) * minus_c_pow(p, n - 1);
    return make_report({Family::L1, 1}, p, {{"n", n}}, std::move(lhs), std::move(rhs));
  }
  require_at_least(m, 1, "m", "check_lemma1");
  const Rational first = ratio_pow(p, zeta(m * n + n));
  const Rational second = ratio_pow(p, zeta(m * n + m));
  Rational lhs;
  Rational rhs;
  switch (sub) {
    case 2:
      lhs = first * t.u(m) * t.u(n + 1) + second * c * t.u(n) * t.u(m - 1);
      rhs = t.u(n + m);
      break;
    case 3: {
      // As typeset the two parity weights are swapped; that version only holds
      // when m and n have equal parity. It is kept as the printed form.
      lhs = second * t.u(n) * t.u(m + 1) - first * t.u(m) * t.u(n + 1);
      rhs = minus_c_pow(p, m) * t.u(n - m);
      IdentityReport report = make_report({Family::L1, 3}, p, {{"m", m}, {"n", n}},
                                          std::move(lhs), std::move(rhs));
      report.printed_form_value = first * t.u(n) * t.u(m + 1) - second * t.u(m) * t.u(n + 1);
      report.printed_form_matches = *report.printed_form_value == report.rhs;
      return report;
    }
    case 4:
      lhs = first * t.u(m) * t.u(n - m + 1) +
            c * ratio_pow(p, zeta(m * n)) * t.u(m - 1) * t.u(n - m);
      rhs = t.u(n);
      break;
    default:
      throw InvalidParameterError("check_lemma1: sub must be in 1..4, got " + std::to_string(sub));
  }
  return make_report({Family::L1, sub}, p, {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs));
}

IdentityReport check_lemma2(const Params& p, int sub, std::int64_t m, std::int64_t n) {
  require_nondegenerate(p, "check_lemma2");
  require_at_least(n, 1, "n", "check_lemma2");
  TermCache t(p);
  const Rational d_over_a2 = discriminant(p) / (p.a() * p.a());
  if (sub == 1) {
    Rational lhs = t.v(n) * t.v(n) - d_over_a2 * t.u(n) * t.u(n);
    Rational rhs = Rational(4) * ratio_pow(p, zeta(n)) * minus_c_pow(p, n);
    return make_report({Family::L2, 1}, p, {{"n", n}}, std::move(lhs), std::move(rhs));
  }
  require_at_least(m, 1, "m", "check_lemma2");
  const std::int64_t both_odd = zeta(n) * zeta(m);
  Rational lhs;
  Rational rhs;
  switch (sub) {
    case 2:
      lhs = t.v(m) * t.v(n) + d_over_a2 * t.u(m) * t.u(n);
      rhs = Rational(2) * ratio_pow(p, both_odd) * t.v(n + m);
      break;
    case 3:
      lhs = t.u(m) * t.v(n) + t.u(n) * t.v(m);
      rhs = Rational(2) * ratio_pow(p, both_odd) * t.u(n + m);
      break;
    case 4:
      lhs = t.v(m) * t.v(n) - d_over_a2 * t.u(m) * t.u(n);
      rhs = Rational(2) * minus_c_pow(p, m) * inv_ratio_pow(p, -both_odd) * t.v(n - m);
      break;
    case 5:
      lhs = t.u(n) * t.v(m) - t.u(m) * t.v(n);
      rhs = Rational(2) * minus_c_pow(p, m) * inv_ratio_pow(p, -both_odd) * t.u(n - m);
      break;
    case 6:
      lhs = t.v(n + m) + minus_c_pow(p, m) * t.v(n - m);
      rhs = inv_ratio_pow(p, both_odd) * t.v(m) * t.v(n);
      break;
    case 7:
      lhs = t.u(n + m) + minus_c_pow(p, m) * t.u(n - m);
      rhs = inv_ratio_pow(p, both_odd) * t.u(n) * t.v(m);
      break;
    default:
      throw InvalidParameterError("check_lemma2: sub must be in 1..7, got " + std::to_string(sub));
  }
  return make_report({Family::L2, sub}, p, {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs));
}

SumConstants sum_constants(const Params& p, std::int64_t m) {
  require_at_least(m, 1, "m", "sum_constants");
  const Rational& a = p.a();
  const Rational ab = a * p.b();
  const Rational v_m = term_naive(p, SequenceKind::v, m);
  const Rational a_vm = rat_pow(a, zeta(m)) * v_m;
  return {
      Rational(1) - a_vm + rat_pow(ab, zeta(m)) * minus_c_pow(p, m),
      Rational(1) - ab_half_pow(p, m) * a_vm + rat_pow(-(ab * p.c()), m),
  };
}

SeriesSums sum_oracle(const Params& p, std::int64_t m, std::int64_t n, std::int64_t r) {
  require_at_least(m, 1, "m", "sum_oracle");
  require_at_least(n, 0, "n", "sum_oracle");
  require_at_least(r, 0, "r", "sum_oracle");
  require_nondegenerate(p, "sum_oracle");
  const Mat2 k = build(MatrixTag::K, p);
  const Mat2 step = Mat2::identity() - mat_pow(k, m);
  if (mat_det(step).is_zero()) {
    throw SingularSeriesError("sum_oracle: det(I - K^m) is zero for m = " + std::to_string(m));
  }
  const Mat2 span = mat_pow(k, r) - mat_pow(k, m * n + m + r);
  const Mat2 total = mat_mul(mat_inv(step), span);
  return {Rational(2) * total.m21, Rational(2) * total.m11};
}

Rational sum_direct(const Params& p, SequenceKind series, std::int64_t m, std::int64_t n,
                    std::int64_t r) {
  require_series(series, "sum_direct");
  require_at_least(m, 1, "m", "sum_direct");
  require_at_least(n, 0, "n", "sum_direct");
  require_at_least(r, 0, "r", "sum_direct");
  const int extra = series_sub(series);
  TermCache t(p);
  Rational total = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    const std::int64_t idx = m * j + r;
    total += ab_half_pow(p, idx) * rat_pow(p.a(), zeta(idx) - 1 + extra) * t.get(series, idx);
  }
  return total;
}

namespace {

// (ab)^floor(idx/2) a^(zeta(idx)-1+e) (x_idx + sign s (-c)^m a^(zeta(m)zeta(idx+1)) b^(zeta(m)zeta(idx)) x_low)
Rational sum_bracket(const Params& p, TermCache& t, SequenceKind series, std::int64_t m,
                     std::int64_t idx, std::int64_t low, const Rational& tail_factor) {
  const int zm = zeta(m);
  const Rational tail = tail_factor * minus_c_pow(p, m) * rat_pow(p.a(), zm * zeta(idx + 1)) *
                        rat_pow(p.b(), zm * zeta(idx)) * t.get(series, low);
  return ab_half_pow(p, idx) * rat_pow(p.a(), zeta(idx) - 1 + series_sub(series)) *
         (t.get(series, idx) + tail);
}

}  // namespace

Rational sum_closed_form(const Params& p, SequenceKind series, std::int64_t m, std::int64_t n,
                         std::int64_t r) {
  require_series(series, "sum_closed_form");
  require_at_least(m, 1, "m", "sum_closed_form");
  require_at_least(n, 0, "n", "sum_closed_form");
  require_at_least(r, 0, "r", "sum_closed_form");
  require_nondegenerate(p, "sum_closed_form");
  const Rational d = sum_constants(p, m).d_corrected;
  if (d.is_zero()) {
    throw SingularSeriesError("sum_closed_form: det(I - K^m) is zero for m = " + std::to_string(m));
  }
  TermCache t(p);
  const std::int64_t top = m * n + m + r;
  const Rational minus_s = -ab_half_pow(p, m);
  const Rational head = sum_bracket(p, t, series, m, r, r - m, minus_s);
  const Rational tail = sum_bracket(p, t, series, m, top, m * n + r, minus_s);
  return (head - tail) / d;
}

Rational sum_printed_form(const Params& p, SequenceKind series, std::int64_t m, std::int64_t n,
                          std::int64_t r) {
  require_series(series, "sum_printed_form");
  require_at_least(m, 1, "m", "sum_printed_form");
  require_at_least(n, 0, "n", "sum_printed_form");
  require_at_least(r, 0, "r", "sum_printed_form");
  const Rational d = sum_constants(p, m).d_printed;
  if (d.is_zero()) throw SingularSeriesError("sum_printed_form: printed D is zero");
  TermCache t(p);
  const std::int64_t top = m * n + m + r;
  const Rational head = sum_bracket(p, t, series, m, r, r - m, Rational(-1));
  const Rational tail = sum_bracket(p, t, series, m, top, m * n + r, Rational(1));
  return (head - tail) / d;
}

IdentityReport check_sum_theorem(const Params& p, SequenceKind series, std::int64_t m,
                                 std::int64_t n, std::int64_t r) {
  require_series(series, "check_sum_theorem");
  const SeriesSums oracle = sum_oracle(p, m, n, r);
  IdentityReport report =
      make_report({Family::SUM, series_sub(series)}, p, {{"m", m}, {"n", n}, {"r", r}},
                  sum_direct(p, series, m, n, r), sum_closed_form(p, series, m, n, r));
  report.oracle_value = series == SequenceKind::u ? oracle.u_sum : oracle.v_sum;
  report.pass = report.lhs == report.rhs && report.lhs == *report.oracle_value;
  try {
    report.printed_form_value = sum_printed_form(p, series, m, n, r);
    report.printed_form_matches = *report.printed_form_value == report.lhs;
  } catch (const SingularSeriesError&) {
    report.printed_form_matches = false;
  }
  return report;
}

Rational delta_weight(const Params& p, std::int64_t m, std::int64_t n, std::int64_t r,
                      std::int64_t i) {
  const std::int64_t ab_exp = floor_half(i + r) + n * floor_half(m);
  const std::int64_t a_exp = -zeta(m + 1) * i - 1 + zeta(i + r);
  const std::int64_t b_exp = zeta(m) * (n - i);
  return rat_pow(p.a() * p.b(), ab_exp) * rat_pow(p.a(), a_exp) * rat_pow(p.b(), b_exp);
}

IdentityReport check_binomial_theorem(const Params& p, SequenceKind series, std::int64_t m,
                                      std::int64_t n, std::int64_t r) {
  require_series(series, "check_binomial_theorem");
  require_at_least(m, 2, "m", "check_binomial_theorem");
  require_at_least(n, 0, "n", "check_binomial_theorem");
  require_at_least(r, 0, "r", "check_binomial_theorem");
  TermCache t(p);
  const std::int64_t top = m * n + r;
  const Rational u_m = t.u(m);
  const Rational u_m1 = t.u(m - 1);
  Rational total = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    total += Rational(binom) * rat_pow(p.c(), n - i) * rat_pow(u_m, i) * rat_pow(u_m1, n - i) *
             t.get(series, i + r) * delta_weight(p, m, n, r, i);
  }
  Rational rhs = rat_pow(p.a(), 1 - zeta(top)) / ab_half_pow(p, top) * total;
  return make_report({Family::BINOM, series_sub(series)}, p, {{"m", m}, {"n", n}, {"r", r}},
                     t.get(series, top), std::move(rhs));
}

IdentityReport check_cassini_w(const Params& p, std::int64_t n) {
  require_at_least(n, 1, "n", "check_cassini_w");
  TermCache t(p);
  Rational lhs = ratio_pow(p, zeta(n)) * t.w(n - 1) * t.w(n + 1) -
                 ratio_pow(p, zeta(n + 1)) * t.w(n) * t.w(n);
  Rational rhs = rat_pow(Rational(-1), n) * rat_pow(p.c(), n - 1) * w_characteristic(p);
  return make_report({Family::CASSINI_W, 0}, p, {{"n", n}}, std::move(lhs), std::move(rhs));
}

IdentityReport check_addition(const Params& p, std::int64_t n, std::int64_t q) {
  require_at_least(n, 1, "n", "check_addition");
  require_at_least(q, 1, "q", "check_addition");
  TermCache t(p);
  Rational rhs = ratio_pow(p, zeta(n + 1) * zeta(q)) * t.u(n) * t.w(q + 1) +
                 p.c() * ratio_pow(p, zeta(n) * zeta(q + 1)) * t.u(n - 1) * t.w(q);
  return make_report({Family::ADDITION, 0}, p, {{"n", n}, {"q", q}}, t.w(n + q), std::move(rhs));
}

IdentityReport check_catalan(const Params& p, std::int64_t n, std::int64_t pp, std::int64_t q) {
  require_at_least(n, 1, "n", "check_catalan");
  require_at_least(pp, 1, "p", "check_catalan");
  require_at_least(q, 1, "q", "check_catalan");
  TermCache t(p);
  const std::int64_t shifts_odd = zeta(pp) * zeta(q);
  Rational lhs = ratio_pow(p, zeta(n) * shifts_odd) * t.w(n + pp) * t.w(n + q) -
                 ratio_pow(p, zeta(n + 1) * shifts_odd) * t.w(n) * t.w(n + pp + q);
  Rational rhs = ratio_pow(p, zeta(n) * zeta(pp + 1) * zeta(q + 1)) * minus_c_pow(p, n) *
                 t.u(pp) * t.u(q) * w_characteristic(p);
  return make_report({Family::CATALAN, 0}, p, {{"n", n}, {"p", pp}, {"q", q}}, std::move(lhs),
                     std::move(rhs));
}

IdentityReport check_product_sum(const Params& p, std::int64_t m, std::int64_t n) {
  require_at_least(m, 1, "m", "check_product_sum");
  require_at_least(n, 1, "n", "check_product_sum");
  TermCache t(p);
  const Rational& c = p.c();
  Rational lhs = ratio_pow(p, zeta(m * n + n)) * t.w(n + 1) * t.w(m) +
                 ratio_pow(p, zeta(m * n + m)) * c * t.w(n) * t.w(m - 1);
  Rational rhs = p.w1() * t.w(m + n) + ratio_pow(p, zeta(m + n)) * c * p.w0() * t.w(m + n - 1);
  return make_report({Family::PRODSUM, 0}, p, {{"m", m}, {"n", n}}, std::move(lhs),
                     std::move(rhs));
}

IdentityReport check_square_sum(const Params& p, std::int64_t n) {
  require_at_least(n, 1, "n", "check_square_sum");
  TermCache t(p);
  const Rational& c = p.c();
  Rational lhs = ratio_pow(p, zeta(n)) * t.w(n + 1) * t.w(n + 1) +
                 ratio_pow(p, zeta(n + 1)) * c * t.w(n) * t.w(n);
  Rational rhs = p.w1() * t.w(2 * n + 1) + (p.b() / p.a()) * c * p.w0() * t.w(2 * n);
  return make_report({Family::COR31, 0}, p, {{"n", n}}, std::move(lhs), std::move(rhs));
}

IdentityReport check_square_difference(const Params& p, std::int64_t n) {
  require_at_least(n, 1, "n", "check_square_difference");
  TermCache t(p);
  const Rational& c = p.c();
  Rational lhs = t.w(n + 1) * t.w(n + 1) - c * c * t.w(n - 1) * t.w(n - 1);
  Rational rhs = rat_pow(p.a(), zeta(n)) * rat_pow(p.b(), zeta(n + 1)) *
                 (p.w1() * t.w(2 * n) + c * p.w0() * t.w(2 * n - 1));
  return make_report({Family::T34, 0}, p, {{"n", n}}, std::move(lhs), std::move(rhs));
}

}  // namespace biperiodic
