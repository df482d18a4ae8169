#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "x0quartic/auxdata.hpp"
#include "x0quartic/curvedb.hpp"
#include "x0quartic/oggfilter.hpp"
#include "x0quartic/pairing.hpp"
#include "x0quartic/qflattice.hpp"

namespace x0quartic::classifier {

/// Exclusion of every degree-4 map by point counts over F_{p^2}. When the
/// level is on the cited list but no prime up to the search bound certifies
/// it, `certificate` is empty and the step rests on the citation alone.
struct OggStep {
    std::optional<oggfilter::OggCertificate> certificate;
    bool cited = false;
    std::string citation;
};

/// A non-strong-Weil member of a class; maps to it have degree isogeny_degree * q(v).
struct NonStrongWeilDivisibility {
    std::string label;
    std::string strong_label;
    std::int64_t isogeny_degree = 1;
    std::int64_t modular_degree = 0;
};

struct GramNonRepresentation {
    std::string label;
    pairing::GramMatrix gram;
    qflattice::EnumerationResult enumeration;  // bound 4
    std::vector<std::int64_t> attained;        // values in 1..4 taken by the form
    std::vector<NonStrongWeilDivisibility> covered;
};

struct ConductorEqualsLevelModularDegree {
    std::string label;
    std::int64_t modular_degree = 0;
    std::vector<NonStrongWeilDivisibility> covered;
};

struct CitedWitness {
    TetraellipticWitness record;
};

/// A degree-4 map found by the form itself: q(v) = 4 / isogeny_degree for
/// the strong Weil curve `strong_label`, composed with the isogeny to `label`.
struct IsogenyComposition {
    std::string label;
    std::string strong_label;
    std::int64_t isogeny_degree = 1;
    pairing::GramMatrix gram;
    std::vector<std::int64_t> vector;
    std::int64_t value = 0;
};

using EvidenceStep = std::variant<OggStep, GramNonRepresentation, ConductorEqualsLevelModularDegree,
                                  NonStrongWeilDivisibility, CitedWitness, IsogenyComposition>;

enum class TetraStatus { PositiveRankTetraelliptic, NotPositiveRankTetraelliptic, Unresolved };

struct TetraellipticVerdict {
    std::int64_t level = 0;
    TetraStatus status = TetraStatus::Unresolved;
    std::optional<EvidenceStep> witness;  // CitedWitness or IsogenyComposition
    std::vector<EvidenceStep> evidence;
    std::string reason;  // Unresolved only
};

struct Options {
    std::int64_t ogg_prime_bound = 23;
    /// Levels at or above this bound get no Gram-based conclusions.
    std::int64_t gram_level_limit = 408;
};

TetraellipticVerdict tetraelliptic_status(std::int64_t level, CurveDatabase const& db, AuxFacts const& aux,
                                          Options const& opts = {});

enum class QuarticStatus { InfinitelyManyQuartic, FinitelyManyQuartic, Unresolved };
enum class Mechanism { Genus0, QuadraticInfinite, BiellipticQuotient, Gonality4, Tetraelliptic };

/// Genus at least 8, gonality above 4 and no positive-rank degree-4 map
/// together leave only finitely many quartic points.
struct GenusRule {
    std::int64_t genus = 0;
    std::string gonality_citation;
};

struct Classification {
    std::int64_t level = 0;
    std::int64_t genus = 0;
    QuarticStatus status = QuarticStatus::Unresolved;
    std::optional<Mechanism> mechanism;
    std::string mechanism_citation;
    std::optional<GenusRule> genus_rule;
    std::optional<SpecialFinite> special_case;
    TetraellipticVerdict tetraelliptic;
    std::string reason;  // Unresolved only
};

inline constexpr std::int64_t kScanLimit = 407;

Classification classify(std::int64_t level, CurveDatabase const& db, AuxFacts const& aux, Options const& opts = {});

struct ScanReport {
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::vector<Classification> levels;  // ascending by level

    std::vector<std::int64_t> infinitely_many_quartic() const;
    std::vector<std::int64_t> finitely_many_quartic() const;
    std::vector<std::int64_t> positive_rank_tetraelliptic() const;
    std::vector<std::int64_t> unresolved() const;
    bool has_unresolved() const;
};

/// Classifies every level in [from, to]; with jobs > 1 levels are spread over
/// worker threads. The report does not depend on `jobs`.
ScanReport scan(std::int64_t from, std::int64_t to, CurveDatabase const& db, AuxFacts const& aux,
                unsigned jobs = 1, Options const& opts = {});

std::string_view to_string(TetraStatus s);
std::string_view to_string(QuarticStatus s);
std::string_view to_string(Mechanism m);

}  // namespace x0quartic::classifier
