#pragma once

#include <json.hpp> // vendored nlohmann/json

#include <string>

namespace spinobstruct {

/// Parse the TOML subset used by config files into a JSON object:
/// - [table] and [[array-of-tables]] headers (dotted keys not supported)
/// - key = value with string, integer, boolean or flat array values
/// - '#' comments
/// Anything else raises parse_error.
nlohmann::json toml_lite_parse(const std::string& text);

} // namespace spinobstruct
