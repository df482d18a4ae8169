#include "x0quartic/pairing.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "x0quartic/checked.hpp"
#include "x0quartic/error.hpp"
#include "x0quartic/hecke.hpp"
#include "x0quartic/numthy.hpp"
#include "x0quartic/rational.hpp"

namespace x0quartic::pairing {

namespace {

constexpr std::string_view kVariables = "xyzwvutsrqponmlk";

void require_divisor(std::int64_t d, std::int64_t quotient) {
    if (d < 1 || quotient % d != 0)
        throw DomainError(std::to_string(d) + " is not a divisor of " + std::to_string(quotient));
}

std::int64_t psi_factor(std::int64_t level, std::int64_t conductor, std::int64_t d1, std::int64_t d2) {
    std::int64_t g = numthy::gcd(d1, d2);
    std::int64_t target = checked::mul(conductor, numthy::lcm(d1, d2) / g);
    Rational ratio(numthy::psi(level), numthy::psi(target));
    if (!ratio.is_integer())
        throw InternalError("psi(" + std::to_string(level) + ")/psi(" + std::to_string(target) +
                            ") is not integral");
    return ratio.num();
}

std::int64_t entry_with(hecke::EigenvalueContext& ctx, std::int64_t level, std::int64_t d1, std::int64_t d2) {
    auto const& c = ctx.curve();
    std::int64_t a = ctx.moebius_coefficient(d1, d2);
    return checked::mul(checked::mul(a, psi_factor(level, c.conductor, d1, d2)), c.modular_degree);
}

void require_hypothesis(std::int64_t level, CurveRecord const& curve) {
    if (!hypothesis_check(level, curve.conductor))
        throw HypothesisError("N/M = " + std::to_string(level / curve.conductor) +
                              " is neither squarefree nor coprime to M = " + std::to_string(curve.conductor));
}

}  // namespace

bool hypothesis_check(std::int64_t level, std::int64_t conductor) {
    if (level < 1 || conductor < 1 || level % conductor != 0)
        throw DomainError("conductor " + std::to_string(conductor) + " does not divide level " +
                          std::to_string(level));
    std::int64_t q = level / conductor;
    return numthy::is_squarefree(q) || numthy::gcd(q, conductor) == 1;
}

std::int64_t gram_entry(std::int64_t level, CurveRecord const& curve, std::int64_t d1, std::int64_t d2) {
    require_hypothesis(level, curve);
    std::int64_t q = level / curve.conductor;
    require_divisor(d1, q);
    require_divisor(d2, q);
    hecke::EigenvalueContext ctx(curve);
    return entry_with(ctx, level, d1, d2);
}

GramMatrix gram_matrix(std::int64_t level, CurveRecord const& curve) {
    require_hypothesis(level, curve);
    GramMatrix g;
    g.level = level;
    g.curve_label = curve.label;
    g.conductor = curve.conductor;
    g.basis = numthy::divisors(level / curve.conductor);
    std::size_t n = g.basis.size();
    g.entries.assign(n, std::vector<std::int64_t>(n, 0));
    hecke::EigenvalueContext ctx(curve);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            g.entries[i][j] = g.entries[j][i] = entry_with(ctx, level, g.basis[i], g.basis[j]);
    return g;
}

std::string form_string(IntMatrix const& gram) {
    if (!is_symmetric(gram)) throw DomainError("form_string needs a symmetric matrix");
    if (gram.size() > kVariables.size()) throw DomainError("too many variables for form rendering");
    std::string out;
    auto term = [&out](std::int64_t coeff, std::string const& monomial) {
        if (coeff == 0) return;
        if (coeff < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out += std::to_string(mag);
        out += monomial;
    };
    std::size_t n = gram.size();
    if (n == 2) {
        term(gram[0][0], "x^2");
        term(checked::mul(2, gram[0][1]), "xy");
        term(gram[1][1], "y^2");
        return out.empty() ? "0" : out;
    }
    for (std::size_t i = 0; i < n; ++i) term(gram[i][i], std::string(1, kVariables[i]) + "^2");
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            term(checked::mul(2, gram[i][j]), std::string{kVariables[i], kVariables[j]});
    return out.empty() ? "0" : out;
}

std::string to_json(GramMatrix const& g) {
    nlohmann::ordered_json j;
    j["level"] = g.level;
    j["curve"] = g.curve_label;
    j["basis"] = g.basis;
    j["matrix"] = g.entries;
    return j.dump();
}

GramMatrix gram_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        GramMatrix g;
        g.level = j.at("level").get<std::int64_t>();
        g.curve_label = j.at("curve").get<std::string>();
        g.basis = j.at("basis").get<std::vector<std::int64_t>>();
        g.entries = j.at("matrix").get<IntMatrix>();
        if (!g.basis.empty()) g.conductor = g.level / g.basis.back();
        if (!is_symmetric(g.entries) || g.entries.size() != g.basis.size())
            throw DomainError("gram matrix shape does not match its basis");
        return g;
    } catch (nlohmann::json::exception const& e) {
        throw ParseError("<gram>", 1, e.what());
    }
}

}  // namespace x0quartic::pairing
