#pragma once

#include <cstdint>
#include <optional>

#include "x0quartic/rational.hpp"

namespace x0quartic::oggfilter {

/// A prime p not dividing N at which X_0(N) has more F_{p^2}-points than a
/// degree-d cover of an elliptic curve can have.
struct OggCertificate {
    std::int64_t level = 0;
    std::int64_t degree = 0;
    std::int64_t prime = 0;
    Rational lower_bound;
    std::int64_t capacity = 0;  // d (p+1)^2

    bool excludes() const { return Rational(capacity) < lower_bound; }
    friend bool operator==(OggCertificate const&, OggCertificate const&) = default;
};

/// (p-1)/12 psi(N) + 2^omega(N). Throws DomainError if p is not prime or p | N.
Rational ogg_lower_bound(std::int64_t level, std::int64_t p);

/// First prime p <= prime_bound, p not dividing N, with d (p+1)^2 < L_p(N).
/// Absence is inconclusive.
std::optional<OggCertificate> d_elliptic_excluded(std::int64_t level, std::int64_t degree,
                                                  std::int64_t prime_bound = 23);

}  // namespace x0quartic::oggfilter
