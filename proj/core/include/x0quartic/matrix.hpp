#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace x0quartic {

/// Dense row-major integer matrix; small (n <= 16) in every use here.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

bool is_square(IntMatrix const& m);
bool is_symmetric(IntMatrix const& m);

/// Parses a literal such as "[[6,-2],[-2,6]]". Throws ParseError on malformed
/// input and DomainError if the matrix is not square.
IntMatrix parse_matrix_literal(std::string_view text);
std::string matrix_literal(IntMatrix const& m);

/// x^T G x in checked 64-bit arithmetic.
std::int64_t quadratic_value(IntMatrix const& gram, std::vector<std::int64_t> const& x);

}  // namespace x0quartic
