#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "x0quartic/curvedb.hpp"
#include "x0quartic/matrix.hpp"

namespace x0quartic::pairing {

/// Degree pairing <f o iota_{d_i}, f o iota_{d_j}> on the degeneracy basis of
/// Hom(J_0(N), E), with the basis indexed by the divisors of N/M in ascending order.
struct GramMatrix {
    std::int64_t level = 0;
    std::string curve_label;
    std::int64_t conductor = 0;
    std::vector<std::int64_t> basis;
    IntMatrix entries;

    std::size_t dim() const noexcept { return basis.size(); }
    friend bool operator==(GramMatrix const&, GramMatrix const&) = default;
};

/// N/M squarefree or coprime to M. Throws DomainError if M does not divide N.
bool hypothesis_check(std::int64_t level, std::int64_t conductor);

/// a * psi(N)/psi(M lcm/gcd) * deg f.
std::int64_t gram_entry(std::int64_t level, CurveRecord const& curve, std::int64_t d1, std::int64_t d2);

GramMatrix gram_matrix(std::int64_t level, CurveRecord const& curve);

/// Renders x^T G x with zero terms omitted. Binary forms read "6x^2-4xy+6y^2";
/// larger forms list the squares first, then cross terms in (1,2), (1,3), (2,3), ... order.
std::string form_string(IntMatrix const& gram);
inline std::string form_string(GramMatrix const& g) { return form_string(g.entries); }

std::string to_json(GramMatrix const& g);
GramMatrix gram_from_json(std::string_view text);

}  // namespace x0quartic::pairing
