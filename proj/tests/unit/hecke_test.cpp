#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "x0quartic/hecke.hpp"
#include "x0quartic/numthy.hpp"
#include "x0quartic/traces.hpp"

namespace x0quartic::hecke {
namespace {

using testing::bundled_db;

// Coefficients a_1..a_16 of the newform attached to 37.a1.
constexpr std::int64_t k37[] = {1, -2, -3, 2, -2, 6, -1, 0, 6, 4, -5, -6, -2, 2, 6, -4};

TEST(Hecke, KnownCoefficientsOf37a) {
    EigenvalueContext ctx(bundled_db().at("37.a1"));
    for (std::int64_t n = 1; n <= 16; ++n) EXPECT_EQ(ctx.an(n), k37[n - 1]) << n;
}

TEST(Hecke, SmallExamples) {
    auto const& db = bundled_db();
    EigenvalueContext c61(db.at("61.a1"));
    EXPECT_EQ(c61.an(1), 1);
    EXPECT_EQ(c61.an(6), c61.an(2) * c61.an(3));
    EXPECT_EQ(c61.moebius_coefficient(1, 2), -1);
    EigenvalueContext c37(db.at("37.a1"));
    EXPECT_EQ(c37.an(4), 2);
    EXPECT_EQ(c37.moebius_coefficient(1, 4), 1);
    for (std::int64_t d = 1; d <= 30; ++d) EXPECT_EQ(c37.moebius_coefficient(d, d), 1);
}

TEST(Hecke, BadPrimePowers) {
    auto const& c = bundled_db().at("61.a1");
    EigenvalueContext ctx(c);
    EXPECT_EQ(ctx.an(61), -1);
    EXPECT_EQ(ctx.an(61 * 61), 1);
    auto const& c88 = bundled_db().at("88.a1");
    EXPECT_EQ(an(c88, 8), 0);
}

TEST(Hecke, MultiplicativityOnCoprimePairs) {
    for (auto const* label : {"37.a1", "43.a1", "61.a1", "389.a1", "88.a1", "121.b2"}) {
        EigenvalueContext ctx(bundled_db().at(label));
        for (std::int64_t m = 1; m <= 100; ++m)
            for (std::int64_t n = 1; n <= 100; ++n)
                if (std::gcd(m, n) == 1) { ASSERT_EQ(ctx.an(m * n), ctx.an(m) * ctx.an(n)) << label << " " << m << "," << n; }
    }
}

TEST(Hecke, GoodPrimeSquareRecurrence) {
    for (auto const& r : bundled_db().records()) {
        EigenvalueContext ctx(r);
        for (std::int64_t p : numthy::primes_up_to(11)) {
            if (r.conductor % p == 0) continue;
            std::int64_t a = traces::ap(r, p);
            ASSERT_EQ(ctx.an(p * p), a * a - p) << r.label << " p=" << p;
        }
    }
}

TEST(Hecke, SquarefreeShortcutAndSymmetry) {
    for (auto const* label : {"37.a1", "57.a1", "389.a1", "99.a2"}) {
        EigenvalueContext ctx(bundled_db().at(label));
        for (std::int64_t d1 = 1; d1 <= 24; ++d1)
            for (std::int64_t d2 = 1; d2 <= 24; ++d2) {
                std::int64_t g = std::gcd(d1, d2);
                std::int64_t m = d1 * d2 / (g * g);
                ASSERT_EQ(ctx.moebius_coefficient(d1, d2), ctx.moebius_coefficient(d2, d1));
                if (numthy::is_squarefree(m)) { ASSERT_EQ(ctx.moebius_coefficient(d1, d2), ctx.an(m)) << d1 << "," << d2; }
            }
    }
}

TEST(Hecke, StatelessMatchesContext) {
    auto const& c = bundled_db().at("389.a1");
    EigenvalueContext ctx(c);
    for (std::int64_t n = 1; n <= 200; ++n) ASSERT_EQ(an(c, n), ctx.an(n));
    for (std::int64_t d1 = 1; d1 <= 12; ++d1)
        for (std::int64_t d2 = 1; d2 <= 12; ++d2) ASSERT_EQ(moebius_coefficient(c, d1, d2), ctx.moebius_coefficient(d1, d2));
    EXPECT_GT(ctx.cache_size(), 1u);
}

}  // namespace
}  // namespace x0quartic::hecke

#include <fstream>
#include <nlohmann/json.hpp>

namespace x0quartic::hecke {
namespace {

TEST(Hecke, MatchesPariReferenceCoefficients) {
    std::ifstream in(std::string(X0Q_TEST_FIXTURE_DIR) + "/an_reference.jsonl");
    ASSERT_TRUE(in) << "missing fixture";
    std::size_t checked = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        auto j = nlohmann::json::parse(line);
        EigenvalueContext ctx(bundled_db().at(j["label"].get<std::string>()));
        auto const& ref = j["an"];
        for (std::size_t n = 1; n <= ref.size(); ++n)
            ASSERT_EQ(ctx.an(static_cast<std::int64_t>(n)), ref[n - 1].get<std::int64_t>())
                << j["label"] << " n=" << n;
        ++checked;
    }
    EXPECT_EQ(checked, bundled_db().size());
}

}  // namespace
}  // namespace x0quartic::hecke
