#include "biperiodic/fastpath.hpp"

#include <bit>
#include <string>

#include "biperiodic/errors.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/matforms.hpp"

namespace biperiodic {
namespace {

// u_{n-1}, u_n, u_{n+1} for n >= 0 read off a single power of U.
struct UTriple {
  Rational prev;
  Rational cur;
  Rational next;
};

UTriple u_triple_matrix(const Params& p, std::int64_t n) {
  const Mat2 power = mat_pow(build(MatrixTag::U, p), n);
  const Rational scale = half_power_scale(p, n);
  const int z = zeta(n);
  const Rational b_z = z == 1 ? p.b() : Rational(1);
  const Rational a_z = z == 1 ? p.a() : Rational(1);
  return {
      power.m22 / (scale * p.c() * b_z),
      power.m21 / (scale * a_z),
      power.m11 / (scale * b_z),
  };
}

Rational w_matrix_positive(const Params& p, std::int64_t n) {
  // T U^(n-1) has (2,1) entry (ab)^floor(n/2) a^zeta(n) w_n.
  const Mat2 tu = mat_mul(build(MatrixTag::T, p), mat_pow(build(MatrixTag::U, p), n - 1));
  Rational scale = half_power_scale(p, n);
  if (zeta(n) == 1) scale *= p.a();
  return tu.m21 / scale;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::naive:
      return "naive";
    case Method::matrix:
      return "matrix";
    case Method::doubling:
      return "doubling";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "naive") return Method::naive;
  if (text == "matrix") return Method::matrix;
  if (text == "doubling") return Method::doubling;
  throw InvalidParameterError("unknown method '" + std::string(text) +
                              "' (expected naive, matrix or doubling)");
}

Rational term_matrix(const Params& p, SequenceKind kind, std::int64_t n) {
  if (n == 0 || n == 1) {
    auto [first, second] = p.initials(kind);
    return n == 0 ? first : second;
  }
  if (n < 0) {
    const UTriple t = u_triple_matrix(p, -n);
    return negative_term_from_u(p, kind, -n, t.cur, t.next);
  }
  switch (kind) {
    case SequenceKind::u: {
      const Mat2 power = mat_pow(build(MatrixTag::U, p), n);
      Rational scale = half_power_scale(p, n);
      if (zeta(n) == 1) scale *= p.a();
      return power.m21 / scale;
    }
    case SequenceKind::v: {
      const UTriple t = u_triple_matrix(p, n);
      return v_from_u_terms(p, n, t.cur, t.prev);
    }
    case SequenceKind::w:
      break;
  }
  return w_matrix_positive(p, n);
}

std::pair<Rational, Rational> uv_doubling(const Params& p, std::int64_t n) {
  if (n < 0) throw InvalidParameterError("uv_doubling requires n >= 0");
  const Rational ratio = p.b() / p.a();
  Rational cur = 0;   // u_k
  Rational next = 1;  // u_{k+1}
  std::int64_t k = 0;
  const auto bits = static_cast<std::uint64_t>(n);
  for (int shift = std::bit_width(bits) - 1; shift >= 0; --shift) {
    // c u_{k-1} = u_{k+1} - chi(k+1) u_k
    const Rational c_prev = next - chi(p, k + 1) * cur;
    Rational even = cur * (next + c_prev);
    Rational odd_left = next * next;
    Rational odd_right = p.c() * (cur * cur);
    if (zeta(k) == 1) {
      odd_left *= ratio;
    } else {
      odd_right *= ratio;
    }
    Rational odd = odd_left + odd_right;
    k *= 2;
    if ((bits >> shift) & 1U) {
      // Step (u_{2k}, u_{2k+1}) -> (u_{2k+1}, u_{2k+2}); index 2k+2 is even.
      Rational after = p.a() * odd + p.c() * even;
      cur = std::move(odd);
      next = std::move(after);
      k += 1;
    } else {
      cur = std::move(even);
      next = std::move(odd);
    }
  }
  return {cur, next};
}

Rational term_doubling(const Params& p, SequenceKind kind, std::int64_t n) {
  if (n < 0) {
    auto [u_n, u_next] = uv_doubling(p, -n);
    return negative_term_from_u(p, kind, -n, u_n, u_next);
  }
  if (kind == SequenceKind::u) return uv_doubling(p, n).first;
  if (n == 0) return p.initials(kind).first;
  auto [u_prev, u_n] = uv_doubling(p, n - 1);
  return kind == SequenceKind::v ? v_from_u_terms(p, n, u_n, u_prev)
                                 : w_from_u_terms(p, n, u_n, u_prev);
}

Rational term_fast(const Params& p, SequenceKind kind, std::int64_t n, Method method) {
  switch (method) {
    case Method::naive:
      return term_naive(p, kind, n);
    case Method::matrix:
      return term_matrix(p, kind, n);
    case Method::doubling:
      break;
  }
  return term_doubling(p, kind, n);
}

}  // namespace biperiodic
