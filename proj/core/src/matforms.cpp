#include "biperiodic/matforms.hpp"

#include <string>

#include "biperiodic/errors.hpp"

namespace biperiodic {
namespace {

std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) {
    throw InvalidParameterError(std::string(what) + " requires n >= 0, got " + std::to_string(n));
  }
}

void require_nondegenerate(const Params& p, const char* what) {
  if (discriminant(p).is_zero()) {
    throw DegenerateParameterError(std::string(what) +
                                   ": discriminant a^2 b^2 + 4abc is zero");
  }
}

Rational u_at(const Params& p, std::int64_t n) { return term_naive(p, SequenceKind::u, n); }

}  // namespace

std::string_view to_string(MatrixTag tag) {
  switch (tag) {
    case MatrixTag::U:
      return "U";
    case MatrixTag::K:
      return "K";
    case MatrixTag::H:
      return "H";
    case MatrixTag::T:
      return "T";
    case MatrixTag::A:
      return "A";
  }
  return "?";
}

Mat2 build(MatrixTag tag, const Params& p) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& c = p.c();
  const Rational ab = a * b;
  switch (tag) {
    case MatrixTag::U:
      return {ab, c * b, a, 0};
    case MatrixTag::K: {
      const Rational half(1, 2);
      return {half * ab, half * discriminant(p), half, half * ab};
    }
    case MatrixTag::H:
      return {0, discriminant(p), 1, 0};
    case MatrixTag::T: {
      const Rational cb = c * b;
      return {ab * p.w1() + cb * p.w0(), cb * p.w1(), a * p.w1(), cb * p.w0()};
    }
    case MatrixTag::A:
      return {ab, ab * c, 1, 0};
  }
  throw InvalidParameterError("unknown matrix tag");
}

Rational half_power_scale(const Params& p, std::int64_t n) {
  return rat_pow(p.a() * p.b(), floor_half(n));
}

Mat2 u_power_closed(const Params& p, std::int64_t n) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& c = p.c();
  if (n >= 0) {
    const int z = zeta(n);
    const Rational entries_scale = half_power_scale(p, n);
    const Mat2 inner{
        rat_pow(b, z) * u_at(p, n + 1),
        c * b * rat_pow(a, -zeta(n + 1)) * u_at(p, n),
        rat_pow(a, z) * u_at(p, n),
        c * rat_pow(b, z) * u_at(p, n - 1),
    };
    return entries_scale * inner;
  }
  const std::int64_t k = -n;
  const int z = zeta(k);
  const Rational scale = half_power_scale(p, k) / rat_pow(-(a * b * c), k);
  const Mat2 inner{
      c * rat_pow(b, z) * u_at(p, k - 1),
      -(c * b * rat_pow(a, -zeta(k + 1)) * u_at(p, k)),
      -(rat_pow(a, z) * u_at(p, k)),
      rat_pow(b, z) * u_at(p, k + 1),
  };
  return scale * inner;
}

Mat2 k_power_closed(const Params& p, std::int64_t n) {
  require_nonnegative(n, "k_power_closed");
  require_nondegenerate(p, "k_power_closed");
  const Rational& a = p.a();
  const int z = zeta(n);
  const Rational scale = half_power_scale(p, n) / Rational(2);
  const Rational v_n = term_naive(p, SequenceKind::v, n);
  const Rational u_n = u_at(p, n);
  const Rational diag = rat_pow(a, z) * v_n;
  const Rational low = rat_pow(a, z - 1) * u_n;
  return scale * Mat2{diag, discriminant(p) * low, low, diag};
}

Mat2 KPowerDecomposition::via_h(const Params& p) const {
  return alpha * build(MatrixTag::H, p) + beta * Mat2::identity();
}

Mat2 KPowerDecomposition::via_k(const Params& p) const {
  return gamma * build(MatrixTag::K, p) + delta * Mat2::identity();
}

KPowerDecomposition k_power_decompose(const Params& p, std::int64_t n) {
  require_nonnegative(n, "k_power_decompose");
  require_nondegenerate(p, "k_power_decompose");
  const Rational& a = p.a();
  const int z = zeta(n);
  const Rational scale = half_power_scale(p, n);
  const Rational half(1, 2);
  const Rational u_n = u_at(p, n);
  const Rational a_low = rat_pow(a, z - 1);
  return {
      half * scale * a_low * u_n,
      half * scale * rat_pow(a, z) * term_naive(p, SequenceKind::v, n),
      scale * a_low * u_n,
      scale * p.c() * rat_pow(p.b(), z) * u_at(p, n - 1),
  };
}

Mat2 tu_power_closed(const Params& p, std::int64_t n) {
  require_nonnegative(n, "tu_power_closed");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& c = p.c();
  const int z1 = zeta(n + 1);
  const auto w = terms_naive(p, SequenceKind::w, n, n + 2);  // w_n, w_{n+1}, w_{n+2}
  const Mat2 inner{
      rat_pow(b, z1) * w[2],
      c * b * rat_pow(a, -zeta(n)) * w[1],
      rat_pow(a, z1) * w[1],
      c * rat_pow(b, z1) * w[0],
  };
  return half_power_scale(p, n + 1) * inner;
}

Mat2 a_power_closed(const Params& p, std::int64_t n) {
  require_nonnegative(n, "a_power_closed");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational& c = p.c();
  const int z = zeta(n);
  const Mat2 inner{
      rat_pow(b, z) * u_at(p, n + 1),
      c * b * rat_pow(a, z) * u_at(p, n),
      rat_pow(a, -zeta(n + 1)) * u_at(p, n),
      c * rat_pow(b, z) * u_at(p, n - 1),
  };
  return half_power_scale(p, n) * inner;
}

}  // namespace biperiodic
