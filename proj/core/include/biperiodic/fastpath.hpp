#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "biperiodic/rational.hpp"
#include "biperiodic/sequence.hpp"

namespace biperiodic {

enum class Method { naive, matrix, doubling };

std::string_view to_string(Method method);
/// Throws InvalidParameterError for an unknown method name.
Method parse_method(std::string_view text);

/// Term via binary powers of U (kind u, v) or T U^(n-1) (kind w), unscaling the
/// (2,1) entry. Non-positive indices go through the initials and reflection.
Rational term_matrix(const Params& p, SequenceKind kind, std::int64_t n);

/// (u_n, u_{n+1}) by recursive halving:
///   u_{2k}   = u_k (u_{k+1} + c u_{k-1})
///   u_{2k+1} = (b/a)^zeta(k) u_{k+1}^2 + (b/a)^zeta(k+1) c u_k^2
/// with c u_{k-1} recovered from the recurrence. Requires n >= 0.
std::pair<Rational, Rational> uv_doubling(const Params& p, std::int64_t n);

/// Term via fast doubling for u, then the w/v relations and reflection.
Rational term_doubling(const Params& p, SequenceKind kind, std::int64_t n);

Rational term_fast(const Params& p, SequenceKind kind, std::int64_t n,
                   Method method = Method::doubling);

}  // namespace biperiodic
