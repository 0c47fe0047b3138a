#pragma once

#include "spinobstruct/config.hpp"
#include "spinobstruct/gauge.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace spinobstruct::catalog {

struct TargetResult {
    std::string target;
    groups::GaugeDecision decision;
    double seconds = 0.0;
};

struct AnalysisReport {
    std::string manifold;
    std::string group_summary;
    std::string z_status;
    bool i_star_injective = false;
    bool spin_c = false;
    bool spin = false;
    std::string spin_count; // exact count as a decimal string
    std::vector<TargetResult> targets;
    double total_seconds = 0.0;

    bool any_exists() const;
};

struct AnalyzeOptions {
    bool witnesses = false;
    bool conjugacy_dedup = true;
    long long max_cosets = groups::kDefaultMaxCosets;
};

/// Run the full decision pipeline for a config.
AnalysisReport analyze(const AnalyzeConfig& cfg, const AnalyzeOptions& options);

/// Canonical JSON (sorted keys, no timings unless asked): identical configs
/// give byte-identical output.
nlohmann::json report_to_json(const AnalysisReport& report, bool include_timings = false);
std::string report_to_text(const AnalysisReport& report);

} // namespace spinobstruct::catalog
