#include "x0quartic/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "x0quartic/error.hpp"
#include "x0quartic/numthy.hpp"

namespace x0quartic::classifier {

namespace {

TetraellipticVerdict unresolved(std::int64_t level, std::string reason) {
    TetraellipticVerdict v;
    v.level = level;
    v.status = TetraStatus::Unresolved;
    v.reason = std::move(reason);
    return v;
}

TetraellipticVerdict negative(std::int64_t level, std::vector<EvidenceStep> evidence) {
    TetraellipticVerdict v;
    v.level = level;
    v.status = TetraStatus::NotPositiveRankTetraelliptic;
    v.evidence = std::move(evidence);
    return v;
}

TetraellipticVerdict positive(std::int64_t level, EvidenceStep witness) {
    TetraellipticVerdict v;
    v.level = level;
    v.status = TetraStatus::PositiveRankTetraelliptic;
    v.evidence.push_back(witness);
    v.witness = std::move(witness);
    return v;
}

// A computed Ogg certificate rescues a level the class checks could not settle.
TetraellipticVerdict fall_back_to_ogg(TetraellipticVerdict v, Options const& opts) {
    if (auto cert = oggfilter::d_elliptic_excluded(v.level, 4, opts.ogg_prime_bound))
        return negative(v.level, {OggStep{cert, false, "computed point-count certificate"}});
    return v;
}

std::vector<NonStrongWeilDivisibility> non_strong_members(CurveDatabase const& db, CurveRecord const& strong) {
    std::vector<NonStrongWeilDivisibility> out;
    for (auto const* m : db.isogeny_class_of(strong.label))
        if (!m->strong_weil) out.push_back({m->label, strong.label, m->isogeny_degree, m->modular_degree});
    return out;
}

struct ClassOutcome {
    std::optional<EvidenceStep> negative_step;
    std::optional<EvidenceStep> witness;
    std::string unresolved;
};

ClassOutcome check_class(std::int64_t level, CurveRecord const& strong, CurveDatabase const& db) {
    ClassOutcome out;
    auto covered = non_strong_members(db, strong);
    if (strong.conductor == level && strong.modular_degree > 4) {
        out.negative_step = ConductorEqualsLevelModularDegree{strong.label, strong.modular_degree, covered};
        return out;
    }
    if (!pairing::hypothesis_check(level, strong.conductor)) {
        out.unresolved = "N/M is neither squarefree nor coprime to M for " + strong.label;
        return out;
    }
    pairing::GramMatrix gram = pairing::gram_matrix(level, strong);
    qflattice::PDForm form = qflattice::ldl_decompose(gram.entries);
    qflattice::EnumerationResult en = qflattice::enumerate_up_to(form, 4);
    std::set<std::int64_t> attained;
    for (auto const& v : en.vectors) attained.insert(v.value);

    std::vector<NonStrongWeilDivisibility> routes{{strong.label, strong.label, 1, strong.modular_degree}};
    routes.insert(routes.end(), covered.begin(), covered.end());
    for (auto const& r : routes) {
        if (4 % r.isogeny_degree != 0 || attained.count(4 / r.isogeny_degree) == 0) continue;
        std::int64_t want = 4 / r.isogeny_degree;
        auto hit = std::find_if(en.vectors.begin(), en.vectors.end(),
                                [&](qflattice::LatticeVector const& v) { return v.value == want; });
        out.witness = IsogenyComposition{r.label, strong.label, r.isogeny_degree, gram, hit->coords, want};
        return out;
    }
    out.negative_step = GramNonRepresentation{strong.label, std::move(gram), std::move(en),
                                              {attained.begin(), attained.end()}, std::move(covered)};
    return out;
}

}  // namespace

TetraellipticVerdict tetraelliptic_status(std::int64_t level, CurveDatabase const& db, AuxFacts const& aux,
                                          Options const& opts) {
    if (level < 1) throw DomainError("level must be >= 1");
    if (auto const* w = aux.tetraelliptic_witness(level)) return positive(level, CitedWitness{*w});
    if (aux.ogg_excluded.contains(level))
        return negative(level, {OggStep{oggfilter::d_elliptic_excluded(level, 4, opts.ogg_prime_bound), true,
                                        aux.ogg_excluded.citation}});
    if (level >= opts.gram_level_limit)
        return fall_back_to_ogg(unresolved(level, "no degree-pairing basis is certified at this level"), opts);
    if (!db.covers_conductor(level))
        return fall_back_to_ogg(unresolved(level, "curve tables are not declared complete up to this conductor"),
                                opts);

    std::vector<EvidenceStep> evidence;
    for (auto const& strong : positive_rank_factors(db, level)) {
        ClassOutcome c;
        try {
            c = check_class(level, strong, db);
        } catch (MissingTraceError const& e) {
            c.unresolved = e.what();
        } catch (NotPositiveDefiniteError const& e) {
            c.unresolved = std::string("degree pairing is not positive definite: ") + e.what();
        }
        if (c.witness) return positive(level, *c.witness);
        if (!c.unresolved.empty()) return fall_back_to_ogg(unresolved(level, c.unresolved), opts);
        evidence.push_back(std::move(*c.negative_step));
    }
    return negative(level, std::move(evidence));
}

Classification classify(std::int64_t level, CurveDatabase const& db, AuxFacts const& aux, Options const& opts) {
    Classification c;
    c.level = level;
    c.genus = numthy::genus_x0(level);
    c.tetraelliptic = tetraelliptic_status(level, db, aux, opts);
    if (level > kScanLimit) {
        c.reason = "levels above 407 are outside the classification range";
        return c;
    }
    auto infinite = [&c](Mechanism m, std::string citation) {
        c.status = QuarticStatus::InfinitelyManyQuartic;
        c.mechanism = m;
        c.mechanism_citation = std::move(citation);
        return c;
    };
    if (c.genus == 0) return infinite(Mechanism::Genus0, "X_0(N) has genus 0 and rational points");
    if (aux.quadratic_infinite.contains(level))
        return infinite(Mechanism::QuadraticInfinite, aux.quadratic_infinite.citation);
    if (auto const* b = aux.bielliptic_witness(level))
        return infinite(Mechanism::BiellipticQuotient, b->quotient + ": " + b->citation);
    if (aux.gonality4.contains(level)) return infinite(Mechanism::Gonality4, aux.gonality4.citation);
    if (c.tetraelliptic.status == TetraStatus::PositiveRankTetraelliptic) {
        std::string why = std::visit(
            [](auto const& s) -> std::string {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, CitedWitness>)
                    return s.record.curve + ": " + s.record.citation;
                else if constexpr (std::is_same_v<T, IsogenyComposition>)
                    return s.label + ": degree " + std::to_string(s.value) + " map to " + s.strong_label +
                           " composed with a degree " + std::to_string(s.isogeny_degree) + " isogeny";
                else
                    return "positive-rank degree-4 map";
            },
            *c.tetraelliptic.witness);
        return infinite(Mechanism::Tetraelliptic, why);
    }
    if (auto const* s = aux.special_case(level)) {
        c.status = QuarticStatus::FinitelyManyQuartic;
        c.special_case = *s;
        return c;
    }
    if (c.tetraelliptic.status == TetraStatus::Unresolved) {
        c.reason = c.tetraelliptic.reason;
        return c;
    }
    if (c.genus < 8) {
        c.reason = "genus " + std::to_string(c.genus) + " is below 8 and no special rule applies";
        return c;
    }
    if (!aux.gonality_known_above_4(level)) {
        c.reason = "no gonality bound recorded for this level";
        return c;
    }
    c.status = QuarticStatus::FinitelyManyQuartic;
    c.genus_rule = GenusRule{c.genus, "Q-gonality > 4: level is on neither the quadratic-points list nor the gonality-4 list, "
                                         "and those lists are complete below " +
                                         std::to_string(*aux.gonality_complete_below)};
    return c;
}

namespace {

std::vector<std::int64_t> select(ScanReport const& r, auto pred) {
    std::vector<std::int64_t> out;
    for (auto const& c : r.levels)
        if (pred(c)) out.push_back(c.level);
    return out;
}

}  // namespace

std::vector<std::int64_t> ScanReport::infinitely_many_quartic() const {
    return select(*this, [](Classification const& c) { return c.status == QuarticStatus::InfinitelyManyQuartic; });
}
std::vector<std::int64_t> ScanReport::finitely_many_quartic() const {
    return select(*this, [](Classification const& c) { return c.status == QuarticStatus::FinitelyManyQuartic; });
}
std::vector<std::int64_t> ScanReport::positive_rank_tetraelliptic() const {
    return select(*this, [](Classification const& c) {
        return c.tetraelliptic.status == TetraStatus::PositiveRankTetraelliptic;
    });
}
std::vector<std::int64_t> ScanReport::unresolved() const {
    return select(*this, [](Classification const& c) {
        return c.status == QuarticStatus::Unresolved || c.tetraelliptic.status == TetraStatus::Unresolved;
    });
}
bool ScanReport::has_unresolved() const { return !unresolved().empty(); }

ScanReport scan(std::int64_t from, std::int64_t to, CurveDatabase const& db, AuxFacts const& aux, unsigned jobs,
                Options const& opts) {
    if (from < 1 || to < from || to > kScanLimit)
        throw DomainError("scan range must satisfy 1 <= from <= to <= 407");
    ScanReport report;
    report.from = from;
    report.to = to;
    report.levels.resize(static_cast<std::size_t>(to - from + 1));
    std::atomic<std::int64_t> next{from};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (std::int64_t n; (n = next.fetch_add(1)) <= to;) {
            try {
                report.levels[static_cast<std::size_t>(n - from)] = classify(n, db, aux, opts);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return report;
}

std::string_view to_string(TetraStatus s) {
    switch (s) {
        case TetraStatus::PositiveRankTetraelliptic: return "PositiveRankTetraelliptic";
        case TetraStatus::NotPositiveRankTetraelliptic: return "NotPositiveRankTetraelliptic";
        case TetraStatus::Unresolved: return "Unresolved";
    }
    return "?";
}

std::string_view to_string(QuarticStatus s) {
    switch (s) {
        case QuarticStatus::InfinitelyManyQuartic: return "InfinitelyManyQuartic";
        case QuarticStatus::FinitelyManyQuartic: return "FinitelyManyQuartic";
        case QuarticStatus::Unresolved: return "Unresolved";
    }
    return "?";
}

std::string_view to_string(Mechanism m) {
    switch (m) {
        case Mechanism::Genus0: return "Genus0";
        case Mechanism::QuadraticInfinite: return "QuadraticInfinite";
        case Mechanism::BiellipticQuotient: return "BiellipticQuotient";
        case Mechanism::Gonality4: return "Gonality4";
        case Mechanism::Tetraelliptic: return "Tetraelliptic";
    }
    return "?";
}

}  // namespace x0quartic::classifier
