#include "biperiodic/sequence.hpp"

#include <ostream>
#include <string>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) {
    throw InvalidParameterError(std::string(what) + " requires n >= 1, got " + std::to_string(n));
  }
}

// (-1)^k
Rational sign_power(std::int64_t k) { return zeta(k) == 0 ? Rational(1) : Rational(-1); }

}  // namespace

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::u:
      return "u";
    case SequenceKind::v:
      return "v";
    case SequenceKind::w:
      return "w";
  }
  return "?";
}

SequenceKind parse_kind(std::string_view text) {
  if (text == "u") return SequenceKind::u;
  if (text == "v") return SequenceKind::v;
  if (text == "w") return SequenceKind::w;
  throw InvalidParameterError("unknown sequence kind '" + std::string(text) +
                              "' (expected u, v or w)");
}

std::ostream& operator<<(std::ostream& os, SequenceKind kind) { return os << to_string(kind); }

Params::Params(Rational a, Rational b, Rational c, Rational w0, Rational w1)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), w0_(std::move(w0)), w1_(std::move(w1)) {
  if (a_.is_zero() || b_.is_zero() || c_.is_zero()) {
    throw InvalidParameterError("a, b and c must be nonzero (got a=" + a_.str() +
                                ", b=" + b_.str() + ", c=" + c_.str() + ")");
  }
}

std::pair<Rational, Rational> Params::initials(SequenceKind kind) const {
  switch (kind) {
    case SequenceKind::u:
      return {Rational(0), Rational(1)};
    case SequenceKind::v:
      return {Rational(2), b_};
    case SequenceKind::w:
      break;
  }
  return {w0_, w1_};
}

std::ostream& operator<<(std::ostream& os, const Params& p) {
  return os << "w(" << p.w0() << "," << p.w1() << ";" << p.a() << "," << p.b() << "," << p.c()
            << ")";
}

const Rational& chi(const Params& p, std::int64_t n) { return zeta(n) == 0 ? p.a() : p.b(); }

Rational discriminant(const Params& p) {
  const Rational ab = p.a() * p.b();
  return ab * ab + Rational(4) * ab * p.c();
}

Rational term_naive(const Params& p, SequenceKind kind, std::int64_t n) {
  auto [prev, cur] = p.initials(kind);  // (w_0, w_1)
  if (n == 0) return prev;
  if (n == 1) return cur;
  if (n > 1) {
    for (std::int64_t k = 2; k <= n; ++k) {
      Rational next = chi(p, k) * cur + p.c() * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Backward: w_{-k} = -(a^zeta(k+1) b^zeta(k) / c) w_{-k+1} + (1/c) w_{-k+2}.
  // The coefficient is chi(-k+2), i.e. a for even k and b for odd k.
  Rational later = cur;   // w_{-k+2}
  Rational earlier = prev;  // w_{-k+1}
  for (std::int64_t k = 1; k <= -n; ++k) {
    Rational next = (later - chi(p, k) * earlier) / p.c();
    later = std::move(earlier);
    earlier = std::move(next);
  }
  return earlier;
}

std::vector<Rational> terms_naive(const Params& p, SequenceKind kind, std::int64_t from,
                                  std::int64_t to) {
  std::vector<Rational> out;
  if (from > to) return out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  // Seed with the two consecutive terms at the low end, then step forward.
  Rational prev = term_naive(p, kind, from);
  out.push_back(prev);
  if (from == to) return out;
  Rational cur = term_naive(p, kind, from + 1);
  out.push_back(cur);
  for (std::int64_t k = from + 2; k <= to; ++k) {
    Rational next = chi(p, k) * cur + p.c() * prev;
    prev = std::move(cur);
    cur = std::move(next);
    out.push_back(cur);
  }
  return out;
}

Rational w_from_u_terms(const Params& p, std::int64_t n, const Rational& u_n,
                        const Rational& u_prev) {
  Rational tail = p.c() * u_prev * p.w0();
  if (zeta(n) == 1) tail = tail * p.b() / p.a();
  return u_n * p.w1() + tail;
}

Rational v_from_u_terms(const Params& p, std::int64_t n, const Rational& u_n,
                        const Rational& u_prev) {
  Rational tail = Rational(2) * p.c() * u_prev;
  if (zeta(n) == 1) tail = tail * p.b() / p.a();
  return p.b() * u_n + tail;
}

Rational w_from_u(const Params& p, std::int64_t n) {
  require_positive(n, "w_from_u");
  return w_from_u_terms(p, n, term_naive(p, SequenceKind::u, n),
                        term_naive(p, SequenceKind::u, n - 1));
}

Rational v_from_u(const Params& p, std::int64_t n) {
  require_positive(n, "v_from_u");
  return v_from_u_terms(p, n, term_naive(p, SequenceKind::u, n),
                        term_naive(p, SequenceKind::u, n - 1));
}

Rational negative_term_from_u(const Params& p, SequenceKind kind, std::int64_t n,
                              const Rational& u_n, const Rational& u_next) {
  require_positive(n, "negative_term");
  const Rational c_pow = rat_pow(p.c(), n);
  switch (kind) {
    case SequenceKind::u:
      return sign_power(n + 1) * u_n / c_pow;
    case SequenceKind::v: {
      // c u_{n-1} = u_{n+1} - chi(n+1) u_n
      const Rational u_prev = (u_next - chi(p, n + 1) * u_n) / p.c();
      return sign_power(n) * v_from_u_terms(p, n, u_n, u_prev) / c_pow;
    }
    case SequenceKind::w:
      break;
  }
  Rational lead = p.w0() * u_next;
  if (zeta(n) == 1) lead = lead * p.b() / p.a();
  return (lead - p.w1() * u_n) / rat_pow(-p.c(), n);
}

Rational negative_term(const Params& p, SequenceKind kind, std::int64_t n) {
  require_positive(n, "negative_term");
  return negative_term_from_u(p, kind, n, term_naive(p, SequenceKind::u, n),
                              term_naive(p, SequenceKind::u, n + 1));
}

}  // namespace biperiodic
