#include "x0quartic/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace x0quartic::report {

namespace {

using nlohmann::ordered_json;
using namespace classifier;

std::string dump(ordered_json const& j, int indent) { return j.dump(indent); }

ordered_json rational(Rational const& r) {
    if (r.is_integer()) return r.num();
    return r.to_string();
}

ordered_json json_of(oggfilter::OggCertificate const& c) {
    ordered_json j;
    j["level"] = c.level;
    j["degree"] = c.degree;
    j["prime"] = c.prime;
    j["lower_bound"] = rational(c.lower_bound);
    j["capacity"] = c.capacity;
    return j;
}

ordered_json json_of(pairing::GramMatrix const& g) {
    ordered_json j;
    j["level"] = g.level;
    j["curve"] = g.curve_label;
    j["basis"] = g.basis;
    j["matrix"] = g.entries;
    j["form"] = pairing::form_string(g);
    return j;
}

ordered_json json_of(qflattice::EnumerationResult const& r) {
    ordered_json j;
    j["bound"] = r.bound;
    ordered_json vs = ordered_json::array();
    for (auto const& v : r.vectors) vs.push_back({{"coords", v.coords}, {"value", v.value}});
    j["vectors"] = vs;
    j["minimum"] = r.minimum ? ordered_json(*r.minimum) : ordered_json(nullptr);
    if (r.target) {
        ordered_json t;
        t["target"] = r.target->target;
        t["found"] = r.target->found;
        t["witness"] = r.target->witness ? ordered_json(*r.target->witness) : ordered_json(nullptr);
        j["represents_target"] = t;
    }
    return j;
}

ordered_json json_of(NonStrongWeilDivisibility const& s) {
    return {{"label", s.label},
            {"strong_label", s.strong_label},
            {"isogeny_degree", s.isogeny_degree},
            {"modular_degree", s.modular_degree}};
}

ordered_json json_of(std::vector<NonStrongWeilDivisibility> const& v) {
    ordered_json a = ordered_json::array();
    for (auto const& s : v) a.push_back(json_of(s));
    return a;
}

ordered_json json_of(TetraellipticWitness const& w) {
    ordered_json j;
    j["level"] = w.level;
    j["curve"] = w.curve;
    j["construction"] = to_string(w.construction);
    j["degree"] = w.degree;
    if (w.atkin_lehner_generators) j["atkin_lehner_generators"] = *w.atkin_lehner_generators;
    j["citation"] = w.citation;
    return j;
}

ordered_json json_of(EvidenceStep const& step) {
    return std::visit(
        [](auto const& s) -> ordered_json {
            using T = std::decay_t<decltype(s)>;
            ordered_json j;
            if constexpr (std::is_same_v<T, OggStep>) {
                j["kind"] = "OggCertificate";
                j["certificate"] = s.certificate ? json_of(*s.certificate) : ordered_json(nullptr);
                j["cited"] = s.cited;
                j["citation"] = s.citation;
            } else if constexpr (std::is_same_v<T, GramNonRepresentation>) {
                j["kind"] = "GramNonRepresentation";
                j["label"] = s.label;
                j["gram"] = json_of(s.gram);
                j["enumeration"] = json_of(s.enumeration);
                j["attained"] = s.attained;
                j["covered"] = json_of(s.covered);
            } else if constexpr (std::is_same_v<T, ConductorEqualsLevelModularDegree>) {
                j["kind"] = "ConductorEqualsLevelModularDegree";
                j["label"] = s.label;
                j["modular_degree"] = s.modular_degree;
                j["covered"] = json_of(s.covered);
            } else if constexpr (std::is_same_v<T, NonStrongWeilDivisibility>) {
                j = json_of(s);
                j["kind"] = "NonStrongWeilDivisibility";
            } else if constexpr (std::is_same_v<T, CitedWitness>) {
                j["kind"] = "CitedWitness";
                j["record"] = json_of(s.record);
            } else {
                j["kind"] = "IsogenyComposition";
                j["label"] = s.label;
                j["strong_label"] = s.strong_label;
                j["isogeny_degree"] = s.isogeny_degree;
                j["gram"] = json_of(s.gram);
                j["vector"] = s.vector;
                j["value"] = s.value;
            }
            return j;
        },
        step);
}

ordered_json json_of(TetraellipticVerdict const& v) {
    ordered_json j;
    j["level"] = v.level;
    j["status"] = to_string(v.status);
    j["witness"] = v.witness ? json_of(*v.witness) : ordered_json(nullptr);
    ordered_json ev = ordered_json::array();
    for (auto const& s : v.evidence) ev.push_back(json_of(s));
    j["evidence"] = ev;
    if (v.status == TetraStatus::Unresolved) j["reason"] = v.reason;
    return j;
}

ordered_json json_of(Classification const& c) {
    ordered_json j;
    j["level"] = c.level;
    j["genus"] = c.genus;
    j["status"] = to_string(c.status);
    j["mechanism"] = c.mechanism ? ordered_json(to_string(*c.mechanism)) : ordered_json(nullptr);
    if (c.mechanism) j["mechanism_citation"] = c.mechanism_citation;
    if (c.genus_rule)
        j["genus_rule"] = {{"genus", c.genus_rule->genus}, {"gonality_citation", c.genus_rule->gonality_citation}};
    if (c.special_case)
        j["special_case"] = {{"level", c.special_case->level},
                             {"rule", c.special_case->rule},
                             {"citation", c.special_case->citation}};
    j["tetraelliptic"] = json_of(c.tetraelliptic);
    if (c.status == QuarticStatus::Unresolved) j["reason"] = c.reason;
    return j;
}

std::string join(std::vector<std::int64_t> const& v) {
    std::string out;
    for (auto n : v) out += (out.empty() ? "" : ",") + std::to_string(n);
    return out;
}

std::string describe_step(EvidenceStep const& step) {
    return std::visit(
        [](auto const& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, OggStep>) {
                if (s.certificate)
                    os << "Ogg: p=" << s.certificate->prime << ", L_p(N)=" << s.certificate->lower_bound
                       << " > " << s.certificate->capacity;
                else
                    os << "Ogg: cited exclusion without a certificate for p <= bound";
                if (s.cited) os << " [cited: " << s.citation << "]";
            } else if constexpr (std::is_same_v<T, GramNonRepresentation>) {
                os << s.label << ": form " << pairing::form_string(s.gram) << " does not give a degree-4 map";
                if (!s.attained.empty()) os << " (values <= 4: " << join(s.attained) << ")";
                for (auto const& m : s.covered) os << "; covers " << m.label << " (isogeny degree " << m.isogeny_degree << ")";
            } else if constexpr (std::is_same_v<T, ConductorEqualsLevelModularDegree>) {
                os << s.label << ": conductor equals level, modular degree " << s.modular_degree << " > 4";
                for (auto const& m : s.covered) os << "; covers " << m.label;
            } else if constexpr (std::is_same_v<T, NonStrongWeilDivisibility>) {
                os << s.label << ": covered by " << s.strong_label;
            } else if constexpr (std::is_same_v<T, CitedWitness>) {
                os << "witness " << s.record.curve << " (" << to_string(s.record.construction) << ", degree "
                   << s.record.degree << "): " << s.record.citation;
            } else {
                os << "computed witness: form " << pairing::form_string(s.gram) << " takes " << s.value
                   << " at (" << join(s.vector) << "), composed with a degree " << s.isogeny_degree
                   << " isogeny " << s.strong_label << " -> " << s.label;
            }
            return os.str();
        },
        step);
}

}  // namespace

std::string to_json(oggfilter::OggCertificate const& c, int indent) { return dump(json_of(c), indent); }
std::string to_json(qflattice::EnumerationResult const& r, int indent) { return dump(json_of(r), indent); }
std::string to_json(TetraellipticVerdict const& v, int indent) { return dump(json_of(v), indent); }
std::string to_json(Classification const& c, int indent) { return dump(json_of(c), indent); }

std::string to_json(ScanReport const& r, int indent) {
    ordered_json j;
    j["from"] = r.from;
    j["to"] = r.to;
    ordered_json summary;
    summary["infinitely_many_quartic"] = r.infinitely_many_quartic();
    summary["finitely_many_quartic"] = r.finitely_many_quartic();
    summary["positive_rank_tetraelliptic"] = r.positive_rank_tetraelliptic();
    summary["unresolved"] = r.unresolved();
    j["summary"] = summary;
    ordered_json levels = ordered_json::array();
    for (auto const& c : r.levels) levels.push_back(json_of(c));
    j["levels"] = levels;
    return dump(j, indent);
}

std::string describe(oggfilter::OggCertificate const& c) {
    std::ostringstream os;
    os << "N=" << c.level << " d=" << c.degree << " p=" << c.prime << " L_p(N)=" << c.lower_bound
       << " capacity=" << c.capacity << (c.excludes() ? " excluded" : " not excluded");
    return os.str();
}

std::string describe(TetraellipticVerdict const& v) {
    std::ostringstream os;
    os << "tetraelliptic (positive rank): " << to_string(v.status) << '\n';
    for (auto const& s : v.evidence) os << "  - " << describe_step(s) << '\n';
    if (v.status == TetraStatus::Unresolved) os << "  reason: " << v.reason << '\n';
    return os.str();
}

std::string describe(Classification const& c) {
    std::ostringstream os;
    os << "N=" << c.level << " genus=" << c.genus << ": " << to_string(c.status);
    if (c.mechanism) os << " via " << to_string(*c.mechanism) << " (" << c.mechanism_citation << ")";
    os << '\n';
    if (c.special_case) os << "  special case: " << c.special_case->rule << '\n';
    if (c.genus_rule) os << "  genus rule: genus " << c.genus_rule->genus << " >= 8, " << c.genus_rule->gonality_citation << '\n';
    if (c.status == QuarticStatus::Unresolved) os << "  reason: " << c.reason << '\n';
    os << describe(c.tetraelliptic);
    return os.str();
}

std::string describe(ScanReport const& r) {
    std::ostringstream os;
    auto ranges = [](std::vector<std::int64_t> const& v) { return format_level_ranges({v.begin(), v.end()}); };
    os << "levels " << r.from << ".." << r.to << '\n';
    os << "infinitely many quartic points: {" << ranges(r.infinitely_many_quartic()) << "}\n";
    os << "positive rank tetraelliptic: {" << join(r.positive_rank_tetraelliptic()) << "}\n";
    os << "unresolved: {" << join(r.unresolved()) << "}\n";
    return os.str();
}

}  // namespace x0quartic::report
