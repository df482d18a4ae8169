#pragma once

#include <cstdint>

#include "x0quartic/curvedb.hpp"

namespace x0quartic::traces {

/// #E(F_p) including the point at infinity, by exhaustive enumeration.
/// Requires p prime with good reduction; throws BadReductionError otherwise.
std::int64_t count_points(CurveRecord const& curve, std::int64_t p);

/// Same count, enumerating x in descending order. Used to check determinism.
std::int64_t count_points_descending(CurveRecord const& curve, std::int64_t p);

/// Frobenius trace: p + 1 - #E(F_p) at good primes, stored trace at bad primes.
std::int64_t ap(CurveRecord const& curve, std::int64_t p);

/// For p >= 5 of multiplicative reduction, a_p = +1 iff -c6 is a nonzero square mod p.
/// Returns the predicted sign; throws DomainError if p is not multiplicative or p < 5.
int predicted_multiplicative_trace(CurveRecord const& curve, std::int64_t p);

/// Legendre symbol (a | p) for odd prime p.
int legendre(std::int64_t a, std::int64_t p);

}  // namespace x0quartic::traces
