#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "x0quartic/curvedb.hpp"

namespace x0quartic {

/// A cited set of levels, optionally closed upward from `from`.
struct LevelSet {
    std::set<std::int64_t> levels;
    std::optional<std::int64_t> from;
    std::string citation;

    bool contains(std::int64_t n) const { return levels.count(n) > 0 || (from && n >= *from); }
};

struct BiellipticWitness {
    std::int64_t level = 0;
    std::string quotient;
    std::string citation;
};

enum class WitnessConstruction { StarQuotient, ModularParametrization };

/// A cited degree-4 map from X_0(level) to the positive-rank curve `curve`.
struct TetraellipticWitness {
    std::int64_t level = 0;
    std::string curve;
    WitnessConstruction construction = WitnessConstruction::StarQuotient;
    std::int64_t degree = 0;
    std::optional<int> atkin_lehner_generators;
    std::string citation;
};

struct Rank0Degree4 {
    std::int64_t level = 0;
    std::string target;
};

struct SpecialFinite {
    std::int64_t level = 0;
    std::string rule;
    std::string citation;
};

struct AuxFacts {
    std::string source_note;
    /// Levels below this bound outside quadratic_infinite and gonality4 have Q-gonality > 4.
    std::optional<std::int64_t> gonality_complete_below;
    LevelSet quadratic_infinite;
    LevelSet cubic_infinite;
    LevelSet gonality4;
    LevelSet ogg_excluded;
    std::vector<BiellipticWitness> bielliptic_witnesses;
    std::vector<TetraellipticWitness> tetraelliptic_witnesses;
    std::vector<Rank0Degree4> rank0_degree4;
    std::vector<SpecialFinite> special_finite;

    TetraellipticWitness const* tetraelliptic_witness(std::int64_t level) const;
    BiellipticWitness const* bielliptic_witness(std::int64_t level) const;
    SpecialFinite const* special_case(std::int64_t level) const;
    bool gonality_known_above_4(std::int64_t level) const;
};

/// "1-5,7,9-10" <-> {1,2,3,4,5,7,9,10}; ranges must be ascending and disjoint.
std::set<std::int64_t> parse_level_ranges(std::string_view text);
std::string format_level_ranges(std::set<std::int64_t> const& levels);

std::string_view to_string(WitnessConstruction c);

/// Throws InvariantError when the facts contradict each other.
void validate_aux(AuxFacts const& aux);

/// Checks every witness against the curve tables: the curve exists, has
/// positive rank and conductor dividing the level, and a modular
/// parametrisation witness has the recorded modular degree.
void cross_check(AuxFacts const& aux, CurveDatabase const& db);

AuxFacts parse_aux(std::istream& in, std::string const& source_name = "<stream>");
AuxFacts load_aux(std::filesystem::path const& path);

/// Resolution order: explicit path, then $X0_AUX_DB, then the bundled file.
std::filesystem::path default_aux_path(std::optional<std::filesystem::path> const& explicit_path = {});

}  // namespace x0quartic
