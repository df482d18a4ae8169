#include "x0quartic/traces.hpp"

#include <string>

#include "x0quartic/error.hpp"
#include "x0quartic/numthy.hpp"

namespace x0quartic::traces {

namespace {

std::int64_t mod(__int128 a, std::int64_t p) {
    auto r = static_cast<std::int64_t>(a % p);
    return r < 0 ? r + p : r;
}

void require_good(CurveRecord const& curve, std::int64_t p) {
    if (!numthy::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (curve.conductor % p == 0)
        throw BadReductionError(curve.label + " has bad reduction at " + std::to_string(p));
    if (mod(weierstrass_invariants(curve.ainvs).discriminant, p) == 0)
        throw BadReductionError("model of " + curve.label + " is singular mod " + std::to_string(p));
}

// p = 2, 3: every (x, y) pair against the long Weierstrass equation.
std::int64_t count_small(CurveRecord const& c, std::int64_t p, bool descending) {
    std::int64_t a1 = mod(c.ainvs[0], p), a2 = mod(c.ainvs[1], p), a3 = mod(c.ainvs[2], p);
    std::int64_t a4 = mod(c.ainvs[3], p), a6 = mod(c.ainvs[4], p);
    std::int64_t n = 1;
    for (std::int64_t i = 0; i < p; ++i) {
        std::int64_t x = descending ? p - 1 - i : i;
        for (std::int64_t y = 0; y < p; ++y) {
            std::int64_t lhs = y * y + a1 * x * y + a3 * y;
            std::int64_t rhs = x * x * x + a2 * x * x + a4 * x + a6;
            if ((lhs - rhs) % p == 0) ++n;
        }
    }
    return n;
}

// p >= 5: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
std::int64_t count_large(CurveRecord const& c, std::int64_t p, bool descending) {
    auto w = weierstrass_invariants(c.ainvs);
    std::int64_t b2 = mod(w.b2, p), b4 = mod(w.b4, p), b6 = mod(w.b6, p);
    std::int64_t n = 1;
    for (std::int64_t i = 0; i < p; ++i) {
        std::int64_t x = descending ? p - 1 - i : i;
        __int128 f = 4 * static_cast<__int128>(x) * x % p * x + static_cast<__int128>(b2) * x % p * x +
                     2 * static_cast<__int128>(b4) * x + b6;
        n += 1 + legendre(mod(f, p), p);
    }
    return n;
}

std::int64_t count(CurveRecord const& curve, std::int64_t p, bool descending) {
    require_good(curve, p);
    return p <= 3 ? count_small(curve, p, descending) : count_large(curve, p, descending);
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
    a = mod(a, p);
    if (a == 0) return 0;
    // Euler's criterion
    __int128 result = 1, base = a;
    std::int64_t e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

std::int64_t count_points(CurveRecord const& curve, std::int64_t p) { return count(curve, p, false); }

std::int64_t count_points_descending(CurveRecord const& curve, std::int64_t p) { return count(curve, p, true); }

std::int64_t ap(CurveRecord const& curve, std::int64_t p) {
    if (!numthy::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (curve.conductor % p == 0) {
        auto it = curve.bad_traces.find(p);
        if (it == curve.bad_traces.end())
            throw MissingTraceError(curve.label + " has no stored trace at bad prime " + std::to_string(p));
        return it->second;
    }
    return p + 1 - count_points(curve, p);
}

int predicted_multiplicative_trace(CurveRecord const& curve, std::int64_t p) {
    if (p < 5 || !numthy::is_prime(p) || curve.conductor % p != 0 || (curve.conductor / p) % p == 0)
        throw DomainError("prime " + std::to_string(p) + " is not a multiplicative prime >= 5 of " + curve.label);
    auto w = weierstrass_invariants(curve.ainvs);
    int s = legendre(mod(-w.c6, p), p);
    if (s == 0) throw DomainError("c6 vanishes mod " + std::to_string(p) + " for " + curve.label);
    return s;
}

}  // namespace x0quartic::traces
