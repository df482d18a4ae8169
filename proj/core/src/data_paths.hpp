#pragma once

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>

namespace x0quartic::detail {

inline std::filesystem::path resolve_data_file(std::optional<std::filesystem::path> const& explicit_path,
                                               char const* env_var, char const* file_name) {
    if (explicit_path) return *explicit_path;
    if (char const* env = std::getenv(env_var); env != nullptr && *env != '\0') return env;
    std::filesystem::path source = std::filesystem::path(X0Q_SOURCE_DATA_DIR) / file_name;
    if (std::filesystem::exists(source)) return source;
    return std::filesystem::path(X0Q_DEFAULT_DATA_DIR) / file_name;
}

}  // namespace x0quartic::detail
