#include "x0quartic/oggfilter.hpp"

#include "x0quartic/checked.hpp"
#include "x0quartic/error.hpp"
#include "x0quartic/numthy.hpp"

namespace x0quartic::oggfilter {

Rational ogg_lower_bound(std::int64_t level, std::int64_t p) {
    if (level < 1) throw DomainError("level must be positive");
    if (!numthy::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (level % p == 0)
        throw DomainError(std::to_string(p) + " divides the level " + std::to_string(level));
    Rational slope(p - 1, 12);
    return slope * Rational(numthy::psi(level)) + Rational(std::int64_t{1} << numthy::omega(level));
}

std::optional<OggCertificate> d_elliptic_excluded(std::int64_t level, std::int64_t degree,
                                                  std::int64_t prime_bound) {
    if (degree < 1) throw DomainError("degree must be positive");
    for (std::int64_t p : numthy::primes_up_to(prime_bound)) {
        if (level % p == 0) continue;
        OggCertificate c{level, degree, p, ogg_lower_bound(level, p),
                         checked::mul(degree, checked::mul(p + 1, p + 1))};
        if (c.excludes()) return c;
    }
    return std::nullopt;
}

}  // namespace x0quartic::oggfilter
