#pragma once

#include "spinobstruct/catalog.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace spinobstruct::catalog {

struct AnalyzeConfig {
    ManifoldSpec manifold;
    std::vector<GaugeTargetSpec> targets;
};

/// Load a config file; TOML (the documented subset) and JSON are both
/// accepted, chosen by extension (.toml / .json) with a content sniff as
/// fallback. Relative file references resolve against the config directory.
AnalyzeConfig load_config(const std::string& path);
AnalyzeConfig config_from_json(const nlohmann::json& j, const std::string& base_dir);

/// FramedGroup interchange:
/// {"label": ..., "i_star_injective": ...,
///  "finite": {"order", "table", "labels", "identity", "generators", "z"}}
/// or
/// {"label": ..., "i_star_injective": ...,
///  "presentation": {"generators": [...], "relators": [...]}, "z": "word"}
groups::FramedGroup framed_from_json(const nlohmann::json& j);
nlohmann::json framed_to_json(const groups::FramedGroup& f);

} // namespace spinobstruct::catalog
