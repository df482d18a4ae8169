#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace x0quartic::numthy {

/// Prime factorisation as ascending (prime, exponent) pairs; empty for n = 1.
using Factorization = std::vector<std::pair<std::int64_t, int>>;

Factorization factorize(std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
bool is_squarefree(std::int64_t n);

/// All divisors of n in ascending order. Throws DomainError for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

int moebius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Index of Gamma_0(n) in SL_2(Z): n * prod_{q | n} (1 + 1/q).
std::int64_t psi(std::int64_t n);

/// Number of distinct prime divisors.
int omega(std::int64_t n);

/// Elliptic points of order 2 and 3 and the cusp count of X_0(n).
std::int64_t elliptic_points_order2(std::int64_t n);
std::int64_t elliptic_points_order3(std::int64_t n);
std::int64_t cusp_count(std::int64_t n);

/// Genus of X_0(n): 1 + psi/12 - nu2/4 - nu3/3 - nu_inf/2.
std::int64_t genus_x0(std::int64_t n);

struct LevelProfile {
    std::int64_t level;
    std::int64_t psi;
    int omega;
    std::int64_t genus;
    std::vector<std::int64_t> divisors;
};

LevelProfile level_profile(std::int64_t n);

}  // namespace x0quartic::numthy
