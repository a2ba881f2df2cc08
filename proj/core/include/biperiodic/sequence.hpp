#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "biperiodic/rational.hpp"

namespace biperiodic {

/// Which member of the family a term request refers to.
///
/// `u` starts from (0, 1) and `v` from (2, b), both ignoring the initials
/// stored in Params; `w` uses Params' own (w0, w1).
enum class SequenceKind { u, v, w };

std::string_view to_string(SequenceKind kind);
/// Throws InvalidParameterError for anything but "u", "v", "w".
SequenceKind parse_kind(std::string_view text);
std::ostream& operator<<(std::ostream& os, SequenceKind kind);

/// Parameters of w_n = chi(n) w_{n-1} + c w_{n-2}, chi alternating a (even n)
/// and b (odd n). a, b and c must be nonzero; anything else is accepted,
/// including degenerate discriminants.
class Params {
 public:
  /// Throws InvalidParameterError when a, b or c is zero.
  Params(Rational a, Rational b, Rational c, Rational w0 = 0, Rational w1 = 1);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& w0() const { return w0_; }
  const Rational& w1() const { return w1_; }

  /// Initial pair (term 0, term 1) for `kind`.
  std::pair<Rational, Rational> initials(SequenceKind kind) const;

  friend bool operator==(const Params&, const Params&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Params& p);

 private:
  Rational a_;
  Rational b_;
  Rational c_;
  Rational w0_;
  Rational w1_;
};

/// n mod 2 in {0, 1}, using mathematical parity for negative n.
constexpr int zeta(std::int64_t n) { return static_cast<int>(((n % 2) + 2) % 2); }

/// a for even n, b for odd n.
const Rational& chi(const Params& p, std::int64_t n);

/// a^2 b^2 + 4abc.
Rational discriminant(const Params& p);

/// Ground-truth term by stepping the recurrence |n| times, forward for n >= 0
/// and backward (w_{-n} from w_{-n+1}, w_{-n+2}) for n < 0.
Rational term_naive(const Params& p, SequenceKind kind, std::int64_t n);

/// Terms for every index in [from, to], one linear sweep. Empty if from > to.
std::vector<Rational> terms_naive(const Params& p, SequenceKind kind, std::int64_t from,
                                  std::int64_t to);

// Relations expressing w_n and v_n through u_n and u_{n-1}:
//   w_n = u_n w1 + c (b/a)^zeta(n) u_{n-1} w0
//   v_n = b u_n + 2c (b/a)^zeta(n) u_{n-1}
Rational w_from_u_terms(const Params& p, std::int64_t n, const Rational& u_n,
                        const Rational& u_prev);
Rational v_from_u_terms(const Params& p, std::int64_t n, const Rational& u_n,
                        const Rational& u_prev);

/// w_from_u_terms fed with naive u-terms. Requires n >= 1.
Rational w_from_u(const Params& p, std::int64_t n);
/// v_from_u_terms fed with naive u-terms. Requires n >= 1.
Rational v_from_u(const Params& p, std::int64_t n);

/// Term at index -n (n >= 1) from u_n and u_{n+1} via the reflection formulas
///   (-c)^n w_{-n} = (b/a)^zeta(n) w0 u_{n+1} - w1 u_n
///   u_{-n} = (-1)^(n+1) c^(-n) u_n,   v_{-n} = (-1)^n c^(-n) v_n.
Rational negative_term_from_u(const Params& p, SequenceKind kind, std::int64_t n,
                              const Rational& u_n, const Rational& u_next);

/// negative_term_from_u fed with naive u-terms. Requires n >= 1.
Rational negative_term(const Params& p, SequenceKind kind, std::int64_t n);

}  // namespace biperiodic
