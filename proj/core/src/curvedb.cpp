#include "x0quartic/curvedb.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "data_paths.hpp"
#include "x0quartic/error.hpp"
#include "x0quartic/numthy.hpp"

namespace x0quartic {

using nlohmann::json;

std::string CurveRecord::isogeny_class() const {
    std::size_t end = label.size();
    while (end > 0 && label[end - 1] >= '0' && label[end - 1] <= '9') --end;
    return label.substr(0, end);
}

WeierstrassInvariants weierstrass_invariants(std::array<std::int64_t, 5> const& a) {
    __int128 a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    WeierstrassInvariants w{};
    w.b2 = a1 * a1 + 4 * a2;
    w.b4 = 2 * a4 + a1 * a3;
    w.b6 = a3 * a3 + 4 * a6;
    w.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    w.c4 = w.b2 * w.b2 - 24 * w.b4;
    w.c6 = -w.b2 * w.b2 * w.b2 + 36 * w.b2 * w.b4 - 216 * w.b6;
    w.discriminant = -w.b2 * w.b2 * w.b8 - 8 * w.b4 * w.b4 * w.b4 - 27 * w.b6 * w.b6 + 9 * w.b2 * w.b4 * w.b6;
    return w;
}

void validate_record(CurveRecord const& r) {
    auto fail = [&](std::string const& what) { throw InvariantError("record " + r.label + ": " + what); };
    if (r.label.empty()) throw InvariantError("record with empty label");
    if (r.conductor < 1) fail("conductor must be positive");
    std::string prefix = std::to_string(r.conductor) + ".";
    if (r.label.rfind(prefix, 0) != 0) fail("label does not start with the conductor");
    if (r.isogeny_class().size() <= prefix.size() || r.isogeny_class().size() == r.label.size())
        fail("label is not of the form N.<class><index>");
    if (r.rank < 0 || r.analytic_rank < 0) fail("negative rank");
    if (r.modular_degree < 1) fail("modular degree must be positive");
    if (r.isogeny_degree < 1) fail("isogeny degree must be positive");
    if (r.strong_weil && r.isogeny_degree != 1) fail("strong Weil curve must have isogeny degree 1");
    for (auto const& [p, ap] : r.bad_traces) {
        if (!numthy::is_prime(p)) fail("bad trace key " + std::to_string(p) + " is not prime");
        if (r.conductor % p != 0) fail("bad prime " + std::to_string(p) + " does not divide the conductor");
        if (ap < -1 || ap > 1) fail("bad trace outside {-1,0,1}");
        if ((r.conductor / p) % p == 0 && ap != 0) fail("additive prime " + std::to_string(p) + " must have trace 0");
    }
    if (weierstrass_invariants(r.ainvs).discriminant == 0) fail("singular Weierstrass model");
}

namespace {

std::set<std::string> const kRecordKeys = {"label",          "conductor",   "ainvs", "rank", "analytic_rank",
                                            "modular_degree", "strong_weil", "bad_traces",
                                            "isogeny_degree", "cremona"};
std::set<std::string> const kRequiredKeys = {"label",          "conductor",   "ainvs",     "rank", "analytic_rank",
                                             "modular_degree", "strong_weil", "bad_traces"};

std::int64_t as_int(json const& v, char const* key) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

}  // namespace

CurveRecord parse_record(std::string_view json_line, std::string const& source_name, std::size_t line_no) {
    json j;
    try {
        j = json::parse(json_line);
    } catch (json::parse_error const& e) {
        throw ParseError(source_name, line_no, e.what());
    }
    try {
        if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
        for (auto const& [k, v] : j.items())
            if (!kRecordKeys.contains(k)) throw std::invalid_argument("unknown key '" + k + "'");
        for (auto const& k : kRequiredKeys)
            if (!j.contains(k)) throw std::invalid_argument("missing key '" + k + "'");

        CurveRecord r;
        if (!j["label"].is_string()) throw std::invalid_argument("field 'label' must be a string");
        r.label = j["label"].get<std::string>();
        r.conductor = as_int(j["conductor"], "conductor");
        auto const& a = j["ainvs"];
        if (!a.is_array() || a.size() != 5) throw std::invalid_argument("field 'ainvs' must list five integers");
        for (std::size_t i = 0; i < 5; ++i) r.ainvs[i] = as_int(a[i], "ainvs");
        r.rank = static_cast<int>(as_int(j["rank"], "rank"));
        r.analytic_rank = static_cast<int>(as_int(j["analytic_rank"], "analytic_rank"));
        r.modular_degree = as_int(j["modular_degree"], "modular_degree");
        if (!j["strong_weil"].is_boolean()) throw std::invalid_argument("field 'strong_weil' must be a boolean");
        r.strong_weil = j["strong_weil"].get<bool>();
        if (j.contains("isogeny_degree")) r.isogeny_degree = as_int(j["isogeny_degree"], "isogeny_degree");
        if (j.contains("cremona")) {
            if (!j["cremona"].is_string()) throw std::invalid_argument("field 'cremona' must be a string");
            r.cremona = j["cremona"].get<std::string>();
        }
        auto const& bt = j["bad_traces"];
        if (!bt.is_object()) throw std::invalid_argument("field 'bad_traces' must be an object");
        for (auto const& [k, v] : bt.items()) {
            std::size_t used = 0;
            std::int64_t p = std::stoll(k, &used);
            if (used != k.size()) throw std::invalid_argument("bad_traces key '" + k + "' is not an integer");
            r.bad_traces[p] = static_cast<int>(as_int(v, "bad_traces"));
        }
        return r;
    } catch (std::invalid_argument const& e) {
        throw ParseError(source_name, line_no, e.what());
    } catch (std::out_of_range const& e) {
        throw ParseError(source_name, line_no, e.what());
    }
}

std::string serialize_record(CurveRecord const& r) {
    json bt = json::object();
    for (auto const& [p, ap] : r.bad_traces) bt[std::to_string(p)] = ap;
    json j = json::object();
    j["label"] = r.label;
    j["conductor"] = r.conductor;
    j["ainvs"] = r.ainvs;
    j["rank"] = r.rank;
    j["analytic_rank"] = r.analytic_rank;
    j["modular_degree"] = r.modular_degree;
    j["strong_weil"] = r.strong_weil;
    j["isogeny_degree"] = r.isogeny_degree;
    j["bad_traces"] = bt;
    if (!r.cremona.empty()) j["cremona"] = r.cremona;
    return j.dump();
}

std::string serialize_database(CurveDatabase const& db) {
    std::ostringstream os;
    if (!db.source_note().empty()) {
        std::istringstream notes(db.source_note());
        for (std::string line; std::getline(notes, line);) os << "# source: " << line << '\n';
    }
    if (db.complete_below()) os << "# complete-below: " << *db.complete_below() << '\n';
    for (auto const& r : db.records()) os << serialize_record(r) << '\n';
    return os.str();
}

CurveDatabase::CurveDatabase(std::vector<CurveRecord> records, std::string source_note,
                             std::optional<std::int64_t> complete_below)
    : records_(std::move(records)), source_note_(std::move(source_note)), complete_below_(complete_below) {
    std::map<std::string, int> strong_per_class;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        auto const& r = records_[i];
        validate_record(r);
        if (!by_label_.emplace(r.label, i).second) throw InvariantError("duplicate label " + r.label);
        strong_per_class[r.isogeny_class()] += r.strong_weil ? 1 : 0;
        by_class_[r.isogeny_class()].push_back(i);
    }
    for (auto& [cls, members] : by_class_)
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) { return records_[a].label < records_[b].label; });
    for (auto const& [cls, count] : strong_per_class)
        if (count != 1)
            throw InvariantError("isogeny class " + cls + " has " + std::to_string(count) +
                                 " strong Weil records, expected exactly one");
}

CurveRecord const* CurveDatabase::find(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    return it == by_label_.end() ? nullptr : &records_[it->second];
}

CurveRecord const& CurveDatabase::at(std::string_view label) const {
    if (auto const* r = find(label)) return *r;
    throw UnknownLabelError(std::string(label));
}

std::vector<CurveRecord const*> CurveDatabase::isogeny_class_of(std::string_view label) const {
    std::vector<CurveRecord const*> out;
    for (std::size_t i : by_class_.at(at(label).isogeny_class())) out.push_back(&records_[i]);
    return out;
}

CurveDatabase parse_database(std::istream& in, std::string const& source_name) {
    std::vector<CurveRecord> records;
    std::string note;
    std::optional<std::int64_t> complete_below;
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
                if (!note.empty()) note += '\n';
                note += text;
            } else if (body.rfind("complete-below:", 0) == 0) {
                try {
                    complete_below = std::stoll(body.substr(15));
                } catch (std::exception const&) {
                    throw ParseError(source_name, line_no, "malformed complete-below header");
                }
            }
            continue;
        }
        CurveRecord r = parse_record(line, source_name, line_no);
        try {
            validate_record(r);
        } catch (InvariantError const& e) {
            throw InvariantError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
        }
        records.push_back(std::move(r));
    }
    return CurveDatabase(std::move(records), std::move(note), complete_below);
}

CurveDatabase load_database(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open curve database " + path.string());
    return parse_database(in, path.string());
}

std::vector<CurveRecord> positive_rank_factors(CurveDatabase const& db, std::int64_t level) {
    if (level < 1) throw DomainError("level must be >= 1");
    std::vector<CurveRecord> out;
    for (auto const& r : db.records())
        if (r.strong_weil && r.rank >= 1 && level % r.conductor == 0) out.push_back(r);
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return a.conductor != b.conductor ? a.conductor < b.conductor : a.label < b.label;
    });
    return out;
}

CurveRecord strong_weil(CurveDatabase const& db, std::string_view label) {
    for (auto const* r : db.isogeny_class_of(label))
        if (r->strong_weil) return *r;
    throw InvariantError("isogeny class of " + std::string(label) + " has no strong Weil record");
}

std::filesystem::path default_curve_db_path(std::optional<std::filesystem::path> const& explicit_path) {
    return detail::resolve_data_file(explicit_path, "X0_CURVE_DB", "curves.jsonl");
}

}  // namespace x0quartic
