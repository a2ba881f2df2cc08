#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biperiodic/rational.hpp"
#include "biperiodic/sequence.hpp"

namespace biperiodic {

/// Identity families, in report order.
enum class Family { L1, L2, SUM, BINOM, CASSINI_W, ADDITION, CATALAN, PRODSUM, COR31, T34 };

std::string to_string(Family family);

/// A single identity: family plus sub-index.
///
/// L1 uses 1..4 and L2 uses 1..7. SUM and BINOM use 0 for the u-series and
/// 1 for the v-series. Every other family has sub 0.
struct IdentityId {
  Family family = Family::L1;
  int sub = 0;

  /// "L1.3", "L2.7", "SUM.u", "BINOM.v", "CASSINI_W", ...
  std::string str() const;

  friend auto operator<=>(const IdentityId&, const IdentityId&) = default;
};

/// The identities in canonical order.
std::vector<IdentityId> all_identity_ids();

struct NamedIndex {
  std::string name;
  std::int64_t value = 0;

  friend bool operator==(const NamedIndex&, const NamedIndex&) = default;
};

/// Both sides of one identity at one point.
///
/// `pass` is exactly `lhs == rhs`, except for SUM reports, which also carry
/// the matrix geometric-series value in `oracle_value` and pass only when all
/// three agree. Where the typeset statement of an identity is wrong (the
/// partial sums, and the parity weights of L1.3) the as-typeset value goes
/// into `printed_form_value`; it never affects `pass`.
struct IdentityReport {
  IdentityId id;
  Params params;
  std::vector<NamedIndex> indices;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::optional<Rational> oracle_value;
  std::optional<Rational> printed_form_value;
  std::optional<bool> printed_form_matches;
  std::size_t sample = 0;
};

/// Denominators of the partial-sum closed form for step m.
///   printed   = 1 - a^zeta(m) v_m + (ab)^zeta(m) (-c)^m
///   corrected = det(I - K^m) = 1 - (ab)^floor(m/2) a^zeta(m) v_m + (-abc)^m
struct SumConstants {
  Rational d_printed;
  Rational d_corrected;
};

SumConstants sum_constants(const Params& p, std::int64_t m);

/// The four u-identities (sub 1..4). Sub 1 ignores m. Indices n - m < 0 are
/// resolved through the reflection formulas. Sub 3 is checked as
///   (b/a)^zeta(mn+m) u_n u_{m+1} - (b/a)^zeta(mn+n) u_m u_{n+1} = (-c)^m u_{n-m}
/// and also reports the typeset form, whose weights are exchanged.
IdentityReport check_lemma1(const Params& p, int sub, std::int64_t m, std::int64_t n);

/// The seven mixed u/v identities (sub 1..7). Sub 1 ignores m.
/// Throws DegenerateParameterError when the discriminant is zero.
IdentityReport check_lemma2(const Params& p, int sub, std::int64_t m, std::int64_t n);

struct SeriesSums {
  Rational u_sum;
  Rational v_sum;
};

/// sum_{j=0..n} K^(mj+r) evaluated as (I - K^m)^-1 (K^r - K^(mn+m+r)); the sums
/// are twice its (2,1) and (1,1) entries.
/// Throws DegenerateParameterError (discriminant zero) or SingularSeriesError.
SeriesSums sum_oracle(const Params& p, std::int64_t m, std::int64_t n, std::int64_t r);

/// Weighted partial sum sum_j (ab)^floor((mj+r)/2) a^(zeta(mj+r)-1+e) x_{mj+r}, added
/// term by term (e = 0 for u, 1 for v).
Rational sum_direct(const Params& p, SequenceKind series, std::int64_t m, std::int64_t n,
                    std::int64_t r);

/// Closed form of sum_direct derived from adj(I - K^m) / det(I - K^m).
Rational sum_closed_form(const Params& p, SequenceKind series, std::int64_t m, std::int64_t n,
                         std::int64_t r);

/// The partial-sum formula exactly as typeset, kept for comparison only.
Rational sum_printed_form(const Params& p, SequenceKind series, std::int64_t m, std::int64_t n,
                          std::int64_t r);

/// Three-way partial-sum check; `series` is u or v.
IdentityReport check_sum_theorem(const Params& p, SequenceKind series, std::int64_t m,
                                 std::int64_t n, std::int64_t r);

/// (ab)^(floor((i+r)/2) + n floor(m/2)) a^(-zeta(m+1) i - 1 + zeta(i+r)) b^(zeta(m)(n-i)).
Rational delta_weight(const Params& p, std::int64_t m, std::int64_t n, std::int64_t r,
                      std::int64_t i);

/// x_{mn+r} against its binomial expansion in u_m, u_{m-1}; requires m > 1.
IdentityReport check_binomial_theorem(const Params& p, SequenceKind series, std::int64_t m,
                                      std::int64_t n, std::int64_t r);

/// Cassini-type identity for w, n >= 1.
IdentityReport check_cassini_w(const Params& p, std::int64_t n);

/// w_{n+q} through u_n, u_{n-1}, w_{q+1}, w_q; n, q >= 1.
IdentityReport check_addition(const Params& p, std::int64_t n, std::int64_t q);

/// Catalan / d'Ocagne generalisation with shifts pp and q; all >= 1.
IdentityReport check_catalan(const Params& p, std::int64_t n, std::int64_t pp, std::int64_t q);

/// w_{n+1} w_m product-sum identity; m, n >= 1.
IdentityReport check_product_sum(const Params& p, std::int64_t m, std::int64_t n);

/// Product-sum identity at m = n + 1 written as a sum of squares; n >= 1.
IdentityReport check_square_sum(const Params& p, std::int64_t n);

/// w_{n+1}^2 - c^2 w_{n-1}^2 against w_{2n}, w_{2n-1}; n >= 1.
IdentityReport check_square_difference(const Params& p, std::int64_t n);

}  // namespace biperiodic
