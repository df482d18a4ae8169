#include "x0quartic/auxdata.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <map>

#include "data_paths.hpp"
#include "x0quartic/error.hpp"
#include "x0quartic/numthy.hpp"

namespace x0quartic {

namespace {

using nlohmann::json;

std::int64_t to_level(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v < 1)
        throw DomainError("bad level '" + std::string(s) + "'");
    return v;
}

template <class T>
T const* find_level(std::vector<T> const& v, std::int64_t level) {
    auto it = std::find_if(v.begin(), v.end(), [&](T const& r) { return r.level == level; });
    return it == v.end() ? nullptr : &*it;
}

void require_keys(json const& j, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
    for (auto k : required)
        if (!j.contains(std::string(k))) throw DomainError("missing key '" + std::string(k) + "'");
    for (auto const& [k, _] : j.items()) {
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) throw DomainError("unexpected key '" + k + "'");
    }
}

WitnessConstruction parse_construction(std::string const& s) {
    if (s == "star_quotient") return WitnessConstruction::StarQuotient;
    if (s == "modular_parametrization") return WitnessConstruction::ModularParametrization;
    throw DomainError("unknown construction '" + s + "'");
}

void ingest(AuxFacts& aux, std::map<std::string, bool>& seen_sets, json const& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "level_set") {
        require_keys(j, {"kind", "name", "levels", "citation"}, {"from"});
        std::string name = j.at("name").get<std::string>();
        LevelSet* target = name == "quadratic_infinite" ? &aux.quadratic_infinite
                           : name == "cubic_infinite"   ? &aux.cubic_infinite
                           : name == "gonality4"        ? &aux.gonality4
                           : name == "ogg_excluded"     ? &aux.ogg_excluded
                                                        : nullptr;
        if (target == nullptr) throw DomainError("unknown level set '" + name + "'");
        if (seen_sets[name]) throw DomainError("level set '" + name + "' given twice");
        seen_sets[name] = true;
        target->levels = parse_level_ranges(j.at("levels").get<std::string>());
        if (j.contains("from")) target->from = j.at("from").get<std::int64_t>();
        target->citation = j.at("citation").get<std::string>();
    } else if (kind == "bielliptic_quotient") {
        require_keys(j, {"kind", "level", "quotient", "citation"}, {});
        aux.bielliptic_witnesses.push_back(
            {j.at("level").get<std::int64_t>(), j.at("quotient").get<std::string>(), j.at("citation").get<std::string>()});
    } else if (kind == "tetraelliptic_witness") {
        require_keys(j, {"kind", "level", "curve", "construction", "degree", "citation"}, {"atkin_lehner_generators"});
        TetraellipticWitness w;
        w.level = j.at("level").get<std::int64_t>();
        w.curve = j.at("curve").get<std::string>();
        w.construction = parse_construction(j.at("construction").get<std::string>());
        w.degree = j.at("degree").get<std::int64_t>();
        if (j.contains("atkin_lehner_generators")) w.atkin_lehner_generators = j.at("atkin_lehner_generators").get<int>();
        w.citation = j.at("citation").get<std::string>();
        aux.tetraelliptic_witnesses.push_back(std::move(w));
    } else if (kind == "rank0_degree4") {
        require_keys(j, {"kind", "level", "target"}, {});
        aux.rank0_degree4.push_back({j.at("level").get<std::int64_t>(), j.at("target").get<std::string>()});
    } else if (kind == "special_finite") {
        require_keys(j, {"kind", "level", "rule", "citation"}, {});
        aux.special_finite.push_back(
            {j.at("level").get<std::int64_t>(), j.at("rule").get<std::string>(), j.at("citation").get<std::string>()});
    } else {
        throw DomainError("unknown record kind '" + kind + "'");
    }
}

}  // namespace

TetraellipticWitness const* AuxFacts::tetraelliptic_witness(std::int64_t level) const {
    return find_level(tetraelliptic_witnesses, level);
}
BiellipticWitness const* AuxFacts::bielliptic_witness(std::int64_t level) const {
    return find_level(bielliptic_witnesses, level);
}
SpecialFinite const* AuxFacts::special_case(std::int64_t level) const { return find_level(special_finite, level); }

bool AuxFacts::gonality_known_above_4(std::int64_t level) const {
    return gonality_complete_below && level < *gonality_complete_below && !quadratic_infinite.contains(level) &&
           !gonality4.contains(level);
}

std::set<std::int64_t> parse_level_ranges(std::string_view text) {
    std::set<std::int64_t> out;
    std::int64_t last = 0;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        auto dash = item.find('-');
        std::int64_t lo = to_level(item.substr(0, dash));
        std::int64_t hi = dash == std::string_view::npos ? lo : to_level(item.substr(dash + 1));
        if (hi < lo || lo <= last) throw DomainError("level ranges must be ascending and disjoint near '" + std::string(item) + "'");
        for (std::int64_t n = lo; n <= hi; ++n) out.insert(n);
        last = hi;
    }
    return out;
}

std::string format_level_ranges(std::set<std::int64_t> const& levels) {
    std::string out;
    for (auto it = levels.begin(); it != levels.end();) {
        std::int64_t lo = *it, hi = lo;
        for (++it; it != levels.end() && *it == hi + 1; ++it) ++hi;
        if (!out.empty()) out += ',';
        out += std::to_string(lo);
        if (hi > lo) out += '-' + std::to_string(hi);
    }
    return out;
}

std::string_view to_string(WitnessConstruction c) {
    return c == WitnessConstruction::StarQuotient ? "star_quotient" : "modular_parametrization";
}

void validate_aux(AuxFacts const& aux) {
    for (std::int64_t n : aux.cubic_infinite.levels)
        if (!aux.quadratic_infinite.contains(n) && aux.bielliptic_witness(n) == nullptr)
            throw InvariantError("level " + std::to_string(n) +
                                 " has infinitely many cubic points but no quadratic or bielliptic mechanism");
    std::set<std::int64_t> seen;
    for (auto const& w : aux.tetraelliptic_witnesses) {
        if (!seen.insert(w.level).second)
            throw InvariantError("two tetraelliptic witnesses for level " + std::to_string(w.level));
        if (w.degree != 4)
            throw InvariantError("tetraelliptic witness for " + std::to_string(w.level) + " has degree " +
                                 std::to_string(w.degree));
        if (w.construction == WitnessConstruction::StarQuotient) {
            if (!w.atkin_lehner_generators)
                throw InvariantError("quotient witness for " + std::to_string(w.level) + " lacks a generator count");
            int g = *w.atkin_lehner_generators;
            if ((std::int64_t{1} << g) != w.degree || g != numthy::omega(w.level))
                throw InvariantError("quotient witness for " + std::to_string(w.level) +
                                     ": 2^generators does not match the degree or omega(N)");
        }
    }
    seen.clear();
    for (auto const& b : aux.bielliptic_witnesses)
        if (!seen.insert(b.level).second)
            throw InvariantError("two bielliptic witnesses for level " + std::to_string(b.level));
}

void cross_check(AuxFacts const& aux, CurveDatabase const& db) {
    for (auto const& w : aux.tetraelliptic_witnesses) {
        std::string where = "witness for level " + std::to_string(w.level) + ": ";
        CurveRecord const* c = db.find(w.curve);
        if (c == nullptr) throw InvariantError(where + "curve " + w.curve + " is not in the tables");
        if (c->rank < 1) throw InvariantError(where + w.curve + " has rank 0");
        if (w.level % c->conductor != 0) throw InvariantError(where + "conductor does not divide the level");
        if (w.construction == WitnessConstruction::ModularParametrization &&
            (c->conductor != w.level || c->modular_degree != w.degree))
            throw InvariantError(where + "modular degree of " + w.curve + " is " + std::to_string(c->modular_degree));
    }
}

AuxFacts parse_aux(std::istream& in, std::string const& source_name) {
    AuxFacts aux;
    std::map<std::string, bool> seen_sets;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            body.erase(0, body.find_first_not_of(' '));
            if (body.rfind("source:", 0) == 0) {
                std::string text = body.substr(7);
                text.erase(0, text.find_first_not_of(' '));
                if (!aux.source_note.empty()) aux.source_note += '\n';
                aux.source_note += text;
            } else if (body.rfind("gonality-complete-below:", 0) == 0) {
                try {
                    aux.gonality_complete_below = std::stoll(body.substr(24));
                } catch (std::exception const&) {
                    throw ParseError(source_name, line_no, "malformed gonality-complete-below header");
                }
            }
            continue;
        }
        try {
            ingest(aux, seen_sets, json::parse(line));
        } catch (json::exception const& e) {
            throw ParseError(source_name, line_no, e.what());
        } catch (DomainError const& e) {
            throw ParseError(source_name, line_no, e.what());
        }
    }
    for (char const* name : {"quadratic_infinite", "cubic_infinite", "gonality4", "ogg_excluded"})
        if (!seen_sets[name]) throw ParseError(source_name, line_no, std::string("missing level set '") + name + "'");
    try {
        validate_aux(aux);
    } catch (InvariantError const& e) {
        throw InvariantError(source_name + ": " + e.what());
    }
    return aux;
}

AuxFacts load_aux(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open auxiliary data " + path.string());
    return parse_aux(in, path.string());
}

std::filesystem::path default_aux_path(std::optional<std::filesystem::path> const& explicit_path) {
    return detail::resolve_data_file(explicit_path, "X0_AUX_DB", "aux.jsonl");
}

}  // namespace x0quartic
