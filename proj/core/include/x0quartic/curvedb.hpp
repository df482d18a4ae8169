#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace x0quartic {

/// One elliptic curve over Q as ingested from the bundled tables.
///
/// Rank, analytic rank and modular degree are data, never computed here.
/// `isogeny_degree` is the degree of the cyclic isogeny from the strong Weil
/// curve of the class to this curve (1 for the strong Weil curve itself).
struct CurveRecord {
    std::string label;  // LMFDB style, "61.a1"
    std::int64_t conductor = 0;
    std::array<std::int64_t, 5> ainvs{};  // a1, a2, a3, a4, a6
    int rank = 0;
    int analytic_rank = 0;
    std::int64_t modular_degree = 0;
    bool strong_weil = false;
    std::int64_t isogeny_degree = 1;
    std::map<std::int64_t, int> bad_traces;  // p | conductor -> a_p
    std::string cremona;                      // optional provenance label

    /// "61.a" for "61.a1".
    std::string isogeny_class() const;

    friend bool operator==(CurveRecord const&, CurveRecord const&) = default;
};

/// Weierstrass invariants of a long model, computed in 128-bit arithmetic.
struct WeierstrassInvariants {
    __int128 b2, b4, b6, b8, c4, c6, discriminant;
};
WeierstrassInvariants weierstrass_invariants(std::array<std::int64_t, 5> const& a);

/// Immutable after loading; safe to share between threads.
class CurveDatabase {
public:
    CurveDatabase() = default;
    explicit CurveDatabase(std::vector<CurveRecord> records, std::string source_note = {},
                           std::optional<std::int64_t> complete_below = std::nullopt);

    std::vector<CurveRecord> const& records() const noexcept { return records_; }
    std::string const& source_note() const noexcept { return source_note_; }

    /// Conductor bound below which the tables claim to list every positive-rank class.
    std::optional<std::int64_t> complete_below() const noexcept { return complete_below_; }
    bool covers_conductor(std::int64_t m) const noexcept {
        return complete_below_.has_value() && m < *complete_below_;
    }

    bool empty() const noexcept { return records_.empty(); }
    std::size_t size() const noexcept { return records_.size(); }

    CurveRecord const* find(std::string_view label) const;
    CurveRecord const& at(std::string_view label) const;  // UnknownLabelError

    /// Members of the isogeny class of `label`, in label order.
    std::vector<CurveRecord const*> isogeny_class_of(std::string_view label) const;

private:
    std::vector<CurveRecord> records_;
    std::string source_note_;
    std::optional<std::int64_t> complete_below_;
    std::unordered_map<std::string, std::size_t> by_label_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_class_;
};

/// Parses the line-delimited record format. Lines starting with '#' are
/// header comments: "# source: ..." feeds source_note (several lines are
/// joined) and "# complete-below: M" sets the coverage bound.
CurveDatabase parse_database(std::istream& in, std::string const& source_name = "<stream>");
CurveDatabase load_database(std::filesystem::path const& path);

CurveRecord parse_record(std::string_view json_line, std::string const& source_name = "<line>",
                         std::size_t line_no = 1);
std::string serialize_record(CurveRecord const& r);
std::string serialize_database(CurveDatabase const& db);

/// Throws InvariantError naming the record when a per-record invariant fails.
void validate_record(CurveRecord const& r);

/// Strong Weil records with rank >= 1 whose conductor divides `level`,
/// ascending by conductor then label.
std::vector<CurveRecord> positive_rank_factors(CurveDatabase const& db, std::int64_t level);

/// The strong Weil representative of the class of `label`.
CurveRecord strong_weil(CurveDatabase const& db, std::string_view label);

/// Resolution order: explicit path, then $X0_CURVE_DB, then the bundled file.
std::filesystem::path default_curve_db_path(std::optional<std::filesystem::path> const& explicit_path = {});

}  // namespace x0quartic
