#pragma once

// Plain-text rendering of the JSON reports for --pretty.

#include <string>

#include <nlohmann/json.hpp>

namespace srt::tools {

/// Objects become indented "key: value" blocks; lists of objects with the
/// same scalar keys become aligned tables; cyclotomic numbers are printed
/// as polynomials in z_N.
std::string pretty(const nlohmann::json& j);

}  // namespace srt::tools
