#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "x0quartic/auxdata.hpp"
#include "x0quartic/classifier.hpp"
#include "x0quartic/curvedb.hpp"
#include "x0quartic/error.hpp"
#include "x0quartic/oggfilter.hpp"
#include "x0quartic/pairing.hpp"
#include "x0quartic/qflattice.hpp"
#include "x0quartic/report.hpp"

namespace {

using namespace x0quartic;

constexpr int kOk = 0;
constexpr int kUnresolved = 1;
constexpr int kInputError = 2;

std::optional<std::filesystem::path> opt_path(std::string const& s) {
    if (s.empty()) return std::nullopt;
    return std::filesystem::path(s);
}

std::string join(std::vector<std::int64_t> const& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct DataOptions {
    std::string db;
    std::string aux;
};

void add_data_options(CLI::App* cmd, DataOptions& d, bool with_aux) {
    cmd->add_option("--db", d.db, "curve table (default: $X0_CURVE_DB or the bundled file)");
    if (with_aux) cmd->add_option("--aux", d.aux, "auxiliary facts (default: $X0_AUX_DB or the bundled file)");
}

struct Loaded {
    CurveDatabase db;
    AuxFacts aux;
};

Loaded load_all(DataOptions const& d) {
    Loaded l{load_database(default_curve_db_path(opt_path(d.db))), load_aux(default_aux_path(opt_path(d.aux)))};
    cross_check(l.aux, l.db);
    return l;
}

int run_gram(std::int64_t level, std::string const& label, DataOptions const& d, bool as_json) {
    CurveDatabase db = load_database(default_curve_db_path(opt_path(d.db)));
    pairing::GramMatrix g = pairing::gram_matrix(level, db.at(label));
    if (as_json) {
        std::cout << pairing::to_json(g) << '\n';
        return kOk;
    }
    qflattice::PDForm f = qflattice::ldl_decompose(g.entries);
    auto m = qflattice::minimum(f);
    std::cout << "level " << g.level << ", curve " << g.curve_label << ", basis {" << join(g.basis) << "}\n"
              << "matrix " << matrix_literal(g.entries) << '\n'
              << "form   " << pairing::form_string(g) << '\n'
              << "minimum " << m.value << " at (" << join(m.witness) << ")\n";
    return kOk;
}

int run_represents(std::string const& literal, std::string const& file, std::int64_t k, bool as_json) {
    if (literal.empty() == file.empty()) throw DomainError("give exactly one of --gram or --gram-file");
    IntMatrix g = parse_matrix_literal(literal.empty() ? read_file(file) : literal);
    auto res = qflattice::enumerate_for_target(qflattice::ldl_decompose(g), k);
    if (as_json) {
        std::cout << report::to_json(res) << '\n';
        return kOk;
    }
    auto const& t = *res.target;
    std::cout << pairing::form_string(g) << (t.found ? " represents " : " does not represent ") << k;
    if (t.witness) std::cout << " at (" << join(*t.witness) << ")";
    std::cout << '\n';
    return kOk;
}

int run_ogg(std::int64_t level, std::int64_t degree, std::int64_t bound, bool as_json) {
    auto cert = oggfilter::d_elliptic_excluded(level, degree, bound);
    if (as_json) {
        std::cout << (cert ? report::to_json(*cert) : std::string("null")) << '\n';
        return kOk;
    }
    if (cert)
        std::cout << report::describe(*cert) << '\n';
    else
        std::cout << "inconclusive: no prime p <= " << bound << " with " << degree << "(p+1)^2 < L_p(" << level
                  << ")\n";
    return kOk;
}

int run_classify(std::int64_t level, DataOptions const& d, bool as_json, classifier::Options const& opts) {
    Loaded l = load_all(d);
    auto c = classifier::classify(level, l.db, l.aux, opts);
    std::cout << (as_json ? report::to_json(c, 2) + "\n" : report::describe(c));
    bool unresolved = c.status == classifier::QuarticStatus::Unresolved ||
                      c.tetraelliptic.status == classifier::TetraStatus::Unresolved;
    return unresolved ? kUnresolved : kOk;
}

int run_scan(std::int64_t from, std::int64_t to, std::string const& out, unsigned jobs, DataOptions const& d,
             classifier::Options const& opts) {
    Loaded l = load_all(d);
    auto r = classifier::scan(from, to, l.db, l.aux, jobs, opts);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << report::to_json(r, 2) << '\n';
    }
    std::cout << report::describe(r);
    return r.has_unresolved() ? kUnresolved : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-4 maps from X_0(N) to positive-rank elliptic curves"};
    app.require_subcommand(1);

    std::int64_t level = 0;
    std::string label, gram_literal, gram_file, out;
    std::int64_t target = 0, degree = 4, prime_bound = 23, from = 1, to = classifier::kScanLimit;
    unsigned jobs = 1;
    bool as_json = false;
    DataOptions data;

    CLI::Validator const positive(
        [](std::string& v) -> std::string {
            return v.find_first_not_of("0123456789") == std::string::npos && v.find_first_not_of('0') != std::string::npos
                       ? std::string()
                       : "expected a positive integer, got '" + v + "'";
        },
        "POSITIVE");

    auto* gram = app.add_subcommand("gram", "Gram matrix of the degree pairing on the degeneracy basis");
    gram->add_option("--level", level, "level N")->required();
    gram->add_option("--curve", label, "curve label, e.g. 61.a1")->required();
    add_data_options(gram, data, false);
    gram->add_flag("--json", as_json);

    auto* rep = app.add_subcommand("represents", "Does a positive-definite form take the value K?");
    rep->add_option("--gram", gram_literal, "matrix literal such as [[6,-2],[-2,6]]");
    rep->add_option("--gram-file", gram_file, "file holding a matrix literal");
    rep->add_option("--target", target, "value K")->required()->check(positive);
    rep->add_flag("--json", as_json);

    auto* ogg = app.add_subcommand("ogg", "Point-count exclusion certificate");
    ogg->add_option("--level", level, "level N")->required()->check(positive);
    ogg->add_option("--degree", degree, "map degree d")->check(positive);
    ogg->add_option("--prime-bound", prime_bound, "largest prime to try");
    ogg->add_flag("--json", as_json);

    classifier::Options opts;
    auto* cls = app.add_subcommand("classify", "Classify one level");
    cls->add_option("--level", level, "level N")->required()->check(positive);
    add_data_options(cls, data, true);
    cls->add_option("--prime-bound", opts.ogg_prime_bound, "largest prime for Ogg certificates");
    cls->add_flag("--json", as_json);

    auto* sc = app.add_subcommand("scan", "Classify a range of levels");
    sc->add_option("--from", from, "first level")->check(positive);
    sc->add_option("--to", to, "last level");
    sc->add_option("--out", out, "write the JSON report here");
    sc->add_option("--jobs", jobs, "worker threads (0: hardware concurrency)");
    add_data_options(sc, data, true);
    sc->add_option("--prime-bound", opts.ogg_prime_bound, "largest prime for Ogg certificates");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*gram) return run_gram(level, label, data, as_json);
        if (*rep) return run_represents(gram_literal, gram_file, target, as_json);
        if (*ogg) return run_ogg(level, degree, prime_bound, as_json);
        if (*cls) return run_classify(level, data, as_json, opts);
        if (*sc) {
            if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
            return run_scan(from, to, out, jobs, data, opts);
        }
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
