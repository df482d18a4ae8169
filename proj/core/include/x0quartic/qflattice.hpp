#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "x0quartic/matrix.hpp"
#include "x0quartic/rational.hpp"

namespace x0quartic::qflattice {

/// A positive-definite integer form together with its exact factorisation
/// gram = L * diag(D) * L^T, L lower unitriangular.
struct PDForm {
    std::size_t dim = 0;
    IntMatrix gram;
    std::vector<std::vector<Rational>> L;
    std::vector<Rational> D;
};

struct LatticeVector {
    std::vector<std::int64_t> coords;
    std::int64_t value = 0;

    friend bool operator==(LatticeVector const&, LatticeVector const&) = default;
};

struct TargetCheck {
    std::int64_t target = 0;
    bool found = false;
    std::optional<std::vector<std::int64_t>> witness;
};

/// Nonzero vectors with value <= bound, one per +-pair with the first nonzero
/// coordinate positive. Sorted by value, ties in descending lexicographic order.
struct EnumerationResult {
    std::int64_t bound = 0;
    std::vector<LatticeVector> vectors;
    std::optional<std::int64_t> minimum;
    std::optional<TargetCheck> target;
};

/// Throws DomainError for a non-symmetric or empty matrix and
/// NotPositiveDefiniteError naming the first leading minor with a pivot <= 0.
PDForm ldl_decompose(IntMatrix const& gram);

/// Fincke-Pohst enumeration, last coordinate outermost. Every emitted vector is
/// re-evaluated in integer arithmetic; a mismatch throws InternalError.
EnumerationResult enumerate_up_to(PDForm const& form, std::int64_t bound);

/// As above, additionally recording whether `target` is attained.
EnumerationResult enumerate_for_target(PDForm const& form, std::int64_t target);

TargetCheck represents(PDForm const& form, std::int64_t k);

struct Minimum {
    std::int64_t value = 0;
    std::vector<std::int64_t> witness;
};

/// Searches up to the least diagonal entry, which always bounds the minimum.
Minimum minimum(PDForm const& form);

}  // namespace x0quartic::qflattice
