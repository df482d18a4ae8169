#pragma once

#include <cstdint>
#include <unordered_map>

#include "x0quartic/curvedb.hpp"

namespace x0quartic::hecke {

/// Memoised Hecke eigenvalues a_n of the newform attached to one curve.
/// Single-owner: copy the context to use it from another thread.
class EigenvalueContext {
public:
    explicit EigenvalueContext(CurveRecord curve);

    CurveRecord const& curve() const noexcept { return curve_; }

    /// a_n via the prime-power recurrences and multiplicativity.
    std::int64_t an(std::int64_t n);

    /// sum_{m^2 | d} mu(m) a_{d/m^2}: the eigenvalue of the cyclic-subgroup operator T'_d.
    std::int64_t cyclic_eigenvalue(std::int64_t d);

    /// The coefficient a of the Gram-entry formula for divisors d1, d2.
    std::int64_t moebius_coefficient(std::int64_t d1, std::int64_t d2);

    std::size_t cache_size() const noexcept { return cache_.size(); }

private:
    std::int64_t ap(std::int64_t p);
    std::int64_t prime_power(std::int64_t p, int e);

    CurveRecord curve_;
    std::unordered_map<std::int64_t, std::int64_t> cache_;
};

/// Stateless equivalents; identical results to a fresh context.
std::int64_t an(CurveRecord const& curve, std::int64_t n);
std::int64_t moebius_coefficient(CurveRecord const& curve, std::int64_t d1, std::int64_t d2);

}  // namespace x0quartic::hecke
