#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "x0quartic/report.hpp"

namespace x0quartic::report {
namespace {

using nlohmann::json;
using testing::bundled_aux;
using testing::bundled_db;

TEST(Report, OggCertificate) {
    auto c = oggfilter::d_elliptic_excluded(398, 4, 23);
    ASSERT_TRUE(c);
    auto j = json::parse(to_json(*c));
    EXPECT_EQ(j["prime"], 3);
    EXPECT_EQ(j["degree"], 4);
    EXPECT_EQ(j["capacity"], 64);
    EXPECT_NE(describe(*c).find("p=3"), std::string::npos);
}

TEST(Report, Enumeration) {
    auto r = qflattice::enumerate_for_target(qflattice::ldl_decompose({{6, -2}, {-2, 6}}), 6);
    auto j = json::parse(to_json(r, 2));
    EXPECT_EQ(j["vectors"].size(), 2u);
    EXPECT_EQ(j["represents_target"]["found"], true);
    EXPECT_EQ(j["represents_target"]["witness"], json::array({1, 0}));
}

TEST(Report, ClassificationParsesBack) {
    for (std::int64_t n : {1, 65, 97, 122, 128, 148, 398, 408}) {
        auto c = classifier::classify(n, bundled_db(), bundled_aux());
        auto j = json::parse(to_json(c));
        EXPECT_EQ(j["level"], n);
        EXPECT_EQ(j["genus"], c.genus);
        EXPECT_EQ(j["status"], std::string(classifier::to_string(c.status)));
        EXPECT_FALSE(describe(c).empty());
    }
    auto j = json::parse(to_json(classifier::classify(122, bundled_db(), bundled_aux())));
    auto const& ev = j["tetraelliptic"]["evidence"];
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_EQ(ev[0]["kind"], "GramNonRepresentation");
    EXPECT_EQ(ev[0]["gram"]["form"], "6x^2-4xy+6y^2");
}

TEST(Report, ScanSummary) {
    auto r = classifier::scan(120, 130, bundled_db(), bundled_aux());
    auto j = json::parse(to_json(r));
    EXPECT_EQ(j["levels"].size(), 11u);
    EXPECT_EQ(j["summary"]["unresolved"].size(), 0u);
    EXPECT_FALSE(describe(r).empty());
}

}  // namespace
}  // namespace x0quartic::report
