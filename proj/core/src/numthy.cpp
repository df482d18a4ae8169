#include "x0quartic/numthy.hpp"

#include <string>

#include "x0quartic/checked.hpp"
#include "x0quartic/error.hpp"

namespace x0quartic::numthy {

namespace {

void require_positive(std::int64_t n, char const* op) {
    if (n < 1) throw DomainError(std::string(op) + ": argument must be >= 1, got " + std::to_string(n));
}

// Kronecker symbol (-4 | p) and (-3 | p) for a prime p.
int kronecker_minus4(std::int64_t p) {
    if (p == 2) return 0;
    return p % 4 == 1 ? 1 : -1;
}

int kronecker_minus3(std::int64_t p) {
    if (p == 3) return 0;
    return p % 3 == 1 ? 1 : -1;
}

}  // namespace

Factorization factorize(std::int64_t n) {
    require_positive(n, "factorize");
    Factorization out;
    for (std::int64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN) throw OverflowError("gcd: INT64_MIN has no positive counterpart");
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    std::int64_t g = gcd(a, b);
    std::int64_t r = checked::mul(a / g, b);
    return r < 0 ? -r : r;
}

bool is_squarefree(std::int64_t n) {
    for (auto const& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int moebius(std::int64_t n) {
    require_positive(n, "moebius");
    int sign = 1;
    for (auto const& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::int64_t euler_phi(std::int64_t n) {
    require_positive(n, "euler_phi");
    std::int64_t r = n;
    for (auto const& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::int64_t psi(std::int64_t n) {
    require_positive(n, "psi");
    std::int64_t r = n;
    for (auto const& [p, e] : factorize(n)) r = checked::mul(r / p, p + 1);
    return r;
}

int omega(std::int64_t n) {
    require_positive(n, "omega");
    return static_cast<int>(factorize(n).size());
}

std::int64_t elliptic_points_order2(std::int64_t n) {
    require_positive(n, "elliptic_points_order2");
    if (n % 4 == 0) return 0;
    std::int64_t r = 1;
    for (auto const& [p, e] : factorize(n)) r *= 1 + kronecker_minus4(p);
    return r;
}

std::int64_t elliptic_points_order3(std::int64_t n) {
    require_positive(n, "elliptic_points_order3");
    if (n % 9 == 0) return 0;
    std::int64_t r = 1;
    for (auto const& [p, e] : factorize(n)) r *= 1 + kronecker_minus3(p);
    return r;
}

std::int64_t cusp_count(std::int64_t n) {
    std::int64_t r = 0;
    for (std::int64_t d : divisors(n)) r = checked::add(r, euler_phi(gcd(d, n / d)));
    return r;
}

std::int64_t genus_x0(std::int64_t n) {
    require_positive(n, "genus_x0");
    // 12g = 12 + psi - 3 nu2 - 4 nu3 - 6 nu_inf
    std::int64_t twelve_g = checked::add(12, psi(n));
    twelve_g -= 3 * elliptic_points_order2(n);
    twelve_g -= 4 * elliptic_points_order3(n);
    twelve_g = checked::sub(twelve_g, checked::mul(6, cusp_count(n)));
    if (twelve_g % 12 != 0 || twelve_g < 0)
        throw InternalError("genus formula gave non-integral value for N=" + std::to_string(n));
    return twelve_g / 12;
}

LevelProfile level_profile(std::int64_t n) {
    require_positive(n, "level_profile");
    return LevelProfile{n, psi(n), omega(n), genus_x0(n), divisors(n)};
}

}  // namespace x0quartic::numthy
