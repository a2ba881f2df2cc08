#pragma once

#include <cstdint>
#include <iosfwd>

#include "biperiodic/rational.hpp"

namespace biperiodic {

/// 2x2 matrix over exact rationals, [[m11, m12], [m21, m22]].
struct Mat2 {
  Rational m11;
  Rational m12;
  Rational m21;
  Rational m22;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {0, 0, 0, 0}; }

  Rational trace() const { return m11 + m22; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Mat2& m);
};

Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
Mat2 operator-(const Mat2& lhs, const Mat2& rhs);
Mat2 operator*(const Rational& s, const Mat2& m);

/// Exact product, eight rational multiplications.
Mat2 mat_mul(const Mat2& lhs, const Mat2& rhs);
inline Mat2 operator*(const Mat2& lhs, const Mat2& rhs) { return mat_mul(lhs, rhs); }

Rational mat_det(const Mat2& m);

/// Adjugate over determinant. Throws DomainError when det(m) == 0.
Mat2 mat_inv(const Mat2& m);

/// Square-and-multiply power; negative exponents invert first.
/// Throws DomainError for a singular matrix with e < 0.
Mat2 mat_pow(const Mat2& m, std::int64_t e);

}  // namespace biperiodic
