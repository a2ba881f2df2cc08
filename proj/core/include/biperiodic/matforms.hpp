#pragma once

#include <cstdint>
#include <string_view>

#include "biperiodic/mat2.hpp"
#include "biperiodic/sequence.hpp"

namespace biperiodic {

/// The companion-style matrices of the family.
///
///   U = [[ab, cb], [a, 0]]
///   K = 1/2 [[ab, D], [1, ab]]          D = a^2 b^2 + 4abc
///   H = [[0, D], [1, 0]]                 (= K + abc K^-1)
///   T = [[ab w1 + cb w0, cb w1], [a w1, cb w0]]
///   A = [[ab, abc], [1, 0]]
enum class MatrixTag { U, K, H, T, A };

std::string_view to_string(MatrixTag tag);

Mat2 build(MatrixTag tag, const Params& p);

/// U^n from u-terms: (ab)^floor(n/2) [[b^z u_{n+1}, cb a^-z' u_n], [a^z u_n, c b^z u_{n-1}]]
/// with z = zeta(n), z' = zeta(n+1). Negative n uses the adjugate form
/// (ab)^floor(n/2) / (-abc)^n [[c b^z u_{n-1}, -cb a^-z' u_n], [-a^z u_n, b^z u_{n+1}]].
Mat2 u_power_closed(const Params& p, std::int64_t n);

/// K^n from u- and v-terms. Requires discriminant != 0 and n >= 0.
Mat2 k_power_closed(const Params& p, std::int64_t n);

/// K^n as alpha H + beta I and as gamma K + delta I.
struct KPowerDecomposition {
  Rational alpha;  // H coefficient
  Rational beta;   // I coefficient alongside H
  Rational gamma;  // K coefficient
  Rational delta;  // I coefficient alongside K

  Mat2 via_h(const Params& p) const;
  Mat2 via_k(const Params& p) const;
};

/// Requires discriminant != 0 and n >= 0.
KPowerDecomposition k_power_decompose(const Params& p, std::int64_t n);

/// T U^n from w-terms. Requires n >= 0.
Mat2 tu_power_closed(const Params& p, std::int64_t n);

/// A^n from u-terms. Requires n >= 0.
Mat2 a_power_closed(const Params& p, std::int64_t n);

/// Common scale (ab)^floor(n/2), kept separate from the entries.
Rational half_power_scale(const Params& p, std::int64_t n);

}  // namespace biperiodic
