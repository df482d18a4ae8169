#include "x0quartic/hecke.hpp"

#include <string>
#include <utility>

#include "x0quartic/checked.hpp"
#include "x0quartic/error.hpp"
#include "x0quartic/numthy.hpp"
#include "x0quartic/traces.hpp"

namespace x0quartic::hecke {

EigenvalueContext::EigenvalueContext(CurveRecord curve) : curve_(std::move(curve)) { cache_.emplace(1, 1); }

std::int64_t EigenvalueContext::ap(std::int64_t p) {
    if (auto it = cache_.find(p); it != cache_.end()) return it->second;
    std::int64_t v = traces::ap(curve_, p);
    cache_.emplace(p, v);
    return v;
}

std::int64_t EigenvalueContext::prime_power(std::int64_t p, int e) {
    std::int64_t a_p = ap(p);
    if (curve_.conductor % p == 0) {
        // T_{p^r} = T_p^r
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i) r = checked::mul(r, a_p);
        return r;
    }
    // T_{p^r} = T_{p^{r-1}} T_p - p T_{p^{r-2}}
    std::int64_t prev = 1, cur = a_p;
    for (int i = 1; i < e; ++i) {
        std::int64_t next = checked::sub(checked::mul(cur, a_p), checked::mul(p, prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

std::int64_t EigenvalueContext::an(std::int64_t n) {
    if (n < 1) throw DomainError("a_n needs n >= 1, got " + std::to_string(n));
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    std::int64_t r = 1;
    for (auto const& [p, e] : numthy::factorize(n)) r = checked::mul(r, prime_power(p, e));
    cache_.emplace(n, r);
    return r;
}

std::int64_t EigenvalueContext::cyclic_eigenvalue(std::int64_t d) {
    if (d < 1) throw DomainError("cyclic_eigenvalue needs d >= 1");
    std::int64_t s = 0;
    for (std::int64_t m = 1; m <= d / m; ++m) {
        if (d % (m * m) != 0) continue;
        int mu = numthy::moebius(m);
        if (mu != 0) s = checked::add(s, checked::mul(mu, an(d / (m * m))));
    }
    return s;
}

std::int64_t EigenvalueContext::moebius_coefficient(std::int64_t d1, std::int64_t d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("moebius_coefficient needs positive divisors");
    std::int64_t g = numthy::gcd(d1, d2);
    return checked::mul(cyclic_eigenvalue(d1 / g), cyclic_eigenvalue(d2 / g));
}

std::int64_t an(CurveRecord const& curve, std::int64_t n) { return EigenvalueContext(curve).an(n); }

std::int64_t moebius_coefficient(CurveRecord const& curve, std::int64_t d1, std::int64_t d2) {
    return EigenvalueContext(curve).moebius_coefficient(d1, d2);
}

}  // namespace x0quartic::hecke
