#include "biperiodic/mat2.hpp"

#include <ostream>

#include "biperiodic/errors.hpp"

namespace biperiodic {

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.m11 << ", " << m.m12 << "], [" << m.m21 << ", " << m.m22 << "]]";
}

Mat2 operator+(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.m11 + rhs.m11, lhs.m12 + rhs.m12, lhs.m21 + rhs.m21, lhs.m22 + rhs.m22};
}

Mat2 operator-(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.m11 - rhs.m11, lhs.m12 - rhs.m12, lhs.m21 - rhs.m21, lhs.m22 - rhs.m22};
}

Mat2 operator*(const Rational& s, const Mat2& m) {
  return {s * m.m11, s * m.m12, s * m.m21, s * m.m22};
}

Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs) {
  return {
      lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21,
      lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
      lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21,
      lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22,
  };
}

Rational mat_det(const Mat2& m) { return m.m11 * m.m22 - m.m12 * m.m21; }

Mat2 mat_inv(const Mat2& m) {
  const Rational det = mat_det(m);
  if (det.is_zero()) throw DomainError("inverse of a singular matrix");
  const Rational inv = Rational(1) / det;
  return {inv * m.m22, -(inv * m.m12), -(inv * m.m21), inv * m.m11};
}

Mat2 mat_pow(const Mat2& m, std::int64_t e) {
  Mat2 base = e < 0 ? mat_inv(m) : m;
  std::uint64_t bits = e < 0 ? 0 - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  Mat2 result = Mat2::identity();
  bool have_result = false;
  while (bits != 0) {
    if (bits & 1U) {
      result = have_result ? mat_mul(result, base) : base;
      have_result = true;
    }
    bits >>= 1U;
    if (bits != 0) base = mat_mul(base, base);
  }
  return result;
}

}  // namespace biperiodic
