#include "x0quartic/matrix.hpp"

#include <nlohmann/json.hpp>

#include "x0quartic/checked.hpp"
#include "x0quartic/error.hpp"

namespace x0quartic {

bool is_square(IntMatrix const& m) {
    for (auto const& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

bool is_symmetric(IntMatrix const& m) {
    if (!is_square(m)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

IntMatrix parse_matrix_literal(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
        throw ParseError("<matrix>", 1, e.what());
    }
    if (!j.is_array()) throw ParseError("<matrix>", 1, "matrix literal must be a list of rows");
    IntMatrix m;
    for (auto const& row : j) {
        if (!row.is_array()) throw ParseError("<matrix>", 1, "every row must be a list");
        auto& out = m.emplace_back();
        for (auto const& v : row) {
            if (!v.is_number_integer()) throw ParseError("<matrix>", 1, "matrix entries must be integers");
            out.push_back(v.get<std::int64_t>());
        }
    }
    if (!is_square(m)) throw DomainError("matrix is not square");
    return m;
}

std::string matrix_literal(IntMatrix const& m) { return nlohmann::json(m).dump(); }

std::int64_t quadratic_value(IntMatrix const& gram, std::vector<std::int64_t> const& x) {
    if (gram.size() != x.size()) throw DomainError("vector length does not match the form dimension");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < x.size(); ++j) row = checked::add(row, checked::mul(gram[i][j], x[j]));
        total = checked::add(total, checked::mul(x[i], row));
    }
    return total;
}

}  // namespace x0quartic
