#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "x0quartic/auxdata.hpp"
#include "x0quartic/error.hpp"
#include "x0quartic/numthy.hpp"

namespace x0quartic {
namespace {

using testing::bundled_aux;
using testing::bundled_db;

std::string const kHeader =
    "# source: test\n# gonality-complete-below: 408\n"
    R"({"kind": "level_set", "name": "quadratic_infinite", "levels": "1-5", "citation": "q"})"
    "\n"
    R"({"kind": "level_set", "name": "cubic_infinite", "levels": "1-3", "citation": "c"})"
    "\n"
    R"({"kind": "level_set", "name": "gonality4", "levels": "38", "citation": "g"})"
    "\n"
    R"({"kind": "level_set", "name": "ogg_excluded", "levels": "154", "from": 402, "citation": "o"})"
    "\n";

AuxFacts parse(std::string const& text) {
    std::istringstream in(text);
    return parse_aux(in, "<test>");
}

std::size_t error_line(std::string const& text) {
    try {
        parse(text);
    } catch (ParseError const& e) {
        return e.line();
    }
    return 0;
}

TEST(Aux, BundledLookups) {
    auto const& aux = bundled_aux();
    EXPECT_TRUE(aux.quadratic_infinite.contains(131));
    EXPECT_FALSE(aux.quadratic_infinite.contains(132));
    EXPECT_TRUE(aux.gonality4.contains(191));
    EXPECT_FALSE(aux.gonality4.contains(190));
    EXPECT_TRUE(aux.ogg_excluded.contains(154));
    EXPECT_TRUE(aux.ogg_excluded.contains(5000));
    EXPECT_FALSE(aux.ogg_excluded.contains(122));
    ASSERT_NE(aux.tetraelliptic_witness(159), nullptr);
    EXPECT_EQ(aux.tetraelliptic_witness(159)->curve, "53.a1");
    EXPECT_EQ(aux.tetraelliptic_witness(122), nullptr);
    ASSERT_NE(aux.special_case(97), nullptr);
    ASSERT_NE(aux.bielliptic_witness(34), nullptr);
    EXPECT_EQ(aux.gonality_complete_below, 408);
    EXPECT_TRUE(aux.gonality_known_above_4(122));
    EXPECT_FALSE(aux.gonality_known_above_4(191));
    EXPECT_FALSE(aux.gonality_known_above_4(131));
    EXPECT_FALSE(aux.gonality_known_above_4(500));
    EXPECT_EQ(aux.rank0_degree4.size(), 9u);
}

TEST(Aux, BundledInvariants) {
    auto const& aux = bundled_aux();
    EXPECT_NO_THROW(validate_aux(aux));
    EXPECT_NO_THROW(cross_check(aux, bundled_db()));
    for (auto n : aux.cubic_infinite.levels)
        EXPECT_TRUE(aux.quadratic_infinite.contains(n) || aux.bielliptic_witness(n)) << n;
    for (auto const& w : aux.tetraelliptic_witnesses) {
        EXPECT_EQ(w.degree, 4);
        if (w.construction == WitnessConstruction::StarQuotient) {
            ASSERT_TRUE(w.atkin_lehner_generators.has_value());
            EXPECT_EQ(1 << *w.atkin_lehner_generators, 4);
            EXPECT_EQ(numthy::omega(w.level), *w.atkin_lehner_generators) << w.level;
        }
        auto const& curve = bundled_db().at(w.curve);
        EXPECT_GE(curve.rank, 1);
        EXPECT_EQ(w.level % curve.conductor, 0);
    }
}

TEST(Aux, ModularParametrizationWitnessesHaveDegreeFour) {
    int seen = 0;
    for (auto const& w : bundled_aux().tetraelliptic_witnesses) {
        if (w.construction != WitnessConstruction::ModularParametrization) continue;
        ++seen;
        auto const& curve = bundled_db().at(w.curve);
        EXPECT_EQ(curve.conductor, w.level);
        EXPECT_EQ(curve.modular_degree, 4);
    }
    EXPECT_EQ(seen, 2);
    EXPECT_EQ(bundled_aux().tetraelliptic_witness(128)->curve, "128.a2");
}

TEST(Aux, ParsesMinimalFile) {
    auto a = parse(kHeader);
    EXPECT_EQ(a.source_note, "test");
    EXPECT_EQ(a.quadratic_infinite.levels, (std::set<std::int64_t>{1, 2, 3, 4, 5}));
    EXPECT_EQ(a.ogg_excluded.from, 402);
    EXPECT_EQ(a.gonality_complete_below, 408);
}

TEST(Aux, ParseErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line(kHeader + "not json\n"), 7u);
    EXPECT_EQ(error_line(kHeader + R"({"kind": "mystery"})" "\n"), 7u);
    EXPECT_EQ(error_line(kHeader + R"({"kind": "special_finite", "level": 97, "rule": "r", "citation": "c", "extra": 1})" "\n"), 7u);
    // a required set is missing
    std::string no_gon4 = kHeader;
    no_gon4.erase(no_gon4.find(R"({"kind": "level_set", "name": "gonality4")"),
                  no_gon4.find('\n', no_gon4.find("gonality4\"")) + 1 - no_gon4.find(R"({"kind": "level_set", "name": "gonality4")"));
    EXPECT_THROW(parse(no_gon4), ParseError);
    EXPECT_THROW(parse(kHeader + R"({"kind": "level_set", "name": "gonality4", "levels": "1", "citation": "dup"})" "\n"),
                 ParseError);
}

TEST(Aux, ValidationRejectsInconsistentFacts) {
    auto a = parse(kHeader);
    a.cubic_infinite.levels.insert(34);
    EXPECT_THROW(validate_aux(a), InvariantError);

    auto b = parse(kHeader);
    b.tetraelliptic_witnesses.push_back({82, "82.a2", WitnessConstruction::StarQuotient, 4, 2, ""});
    b.tetraelliptic_witnesses.push_back({82, "82.a2", WitnessConstruction::StarQuotient, 4, 2, ""});
    EXPECT_THROW(validate_aux(b), InvariantError);

    auto c = parse(kHeader);
    c.tetraelliptic_witnesses.push_back({82, "82.a2", WitnessConstruction::StarQuotient, 4, 3, ""});
    EXPECT_THROW(validate_aux(c), InvariantError);

    auto d = parse(kHeader);
    d.tetraelliptic_witnesses.push_back({122, "11.a1", WitnessConstruction::StarQuotient, 4, 2, ""});
    EXPECT_NO_THROW(validate_aux(d));
    EXPECT_THROW(cross_check(d, bundled_db()), InvariantError);
}

TEST(Aux, LevelRanges) {
    EXPECT_EQ(parse_level_ranges("1-3,7,9-10"), (std::set<std::int64_t>{1, 2, 3, 7, 9, 10}));
    EXPECT_EQ(parse_level_ranges(""), std::set<std::int64_t>{});
    EXPECT_THROW(parse_level_ranges("5,3"), DomainError);
    EXPECT_THROW(parse_level_ranges("1-3,3"), DomainError);
    EXPECT_THROW(parse_level_ranges("4-2"), DomainError);
    EXPECT_THROW(parse_level_ranges("a"), DomainError);
    for (auto const* s : {"1-33,35-37,39-41,43", "5", "1-2", "38,42,44,51"})
        EXPECT_EQ(format_level_ranges(parse_level_ranges(s)), s);
    auto const& aux = bundled_aux();
    EXPECT_EQ(parse_level_ranges(format_level_ranges(aux.gonality4.levels)), aux.gonality4.levels);
}

}  // namespace
}  // namespace x0quartic
