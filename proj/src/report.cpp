#include "spinobstruct/report.hpp"

#include <chrono>
#include <sstream>

namespace spinobstruct::catalog {

using nlohmann::json;

bool AnalysisReport::any_exists() const {
    for (const auto& t : targets)
        if (t.decision.exists)
            return true;
    return false;
}

AnalysisReport analyze(const AnalyzeConfig& cfg, const AnalyzeOptions& options) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    AnalysisReport rep;

    groups::FramedGroup framed = build_framed(cfg.manifold, options.max_cosets);
    rep.manifold = cfg.manifold.name();
    rep.i_star_injective = framed.i_star_injective;
    if (framed.is_finite()) {
        rep.group_summary = "finite of order " + std::to_string(framed.finite().order());
        rep.z_status = framed.z_index() == framed.finite().identity() ? "trivial" : "central of order 2";
    } else {
        rep.group_summary = "finitely presented (" +
                            std::to_string(framed.presented().num_generators()) + " generators, " +
                            std::to_string(framed.presented().relators.size()) + " relators)";
        rep.z_status = groups::abelianization(framed.presented(), framed.z_word()).z_is_trivial()
                           ? "dies in the abelianization"
                           : "central of order 2";
    }

    rep.spin_c = groups::spinc_exists(framed);
    rep.spin = groups::spin_exists(framed);
    rep.spin_count = spinobstruct::to_string(groups::count_spin_structures(framed));

    groups::SpingOptions sopts;
    sopts.witnesses = options.witnesses;
    sopts.conjugacy_dedup = options.conjugacy_dedup;
    for (const auto& tspec : cfg.targets) {
        auto tstart = clock::now();
        TargetResult tr;
        tr.target = tspec.name();
        groups::GaugeTargetHandle handle = build_target(tspec, options.max_cosets);
        tr.decision = groups::exists_sping(framed, handle, sopts);
        tr.seconds = std::chrono::duration<double>(clock::now() - tstart).count();
        rep.targets.push_back(std::move(tr));
    }
    rep.total_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    return rep;
}

json report_to_json(const AnalysisReport& report, bool include_timings) {
    json j;
    j["manifold"] = report.manifold;
    j["framed_group"] = report.group_summary;
    j["z"] = report.z_status;
    j["i_star_injective"] = report.i_star_injective;
    j["spin_c"] = report.spin_c;
    j["spin"] = report.spin;
    j["spin_count"] = report.spin_count;
    json targets = json::array();
    for (const auto& t : report.targets) {
        json tj;
        tj["target"] = t.target;
        tj["exists"] = t.decision.exists;
        tj["reason"] = t.decision.reason;
        json ws = json::array();
        for (const auto& w : t.decision.witnesses) {
            json wj;
            wj["model"] = w.model;
            json images = json::array();
            for (size_t i = 0; i < w.generator_names.size(); ++i) {
                json e;
                e["generator"] = w.generator_names[i];
                e["image"] = i < w.image_labels.size() ? w.image_labels[i] : "?";
                images.push_back(e);
            }
            wj["images"] = images;
            ws.push_back(wj);
        }
        tj["witnesses"] = ws;
        if (include_timings)
            tj["seconds"] = t.seconds;
        targets.push_back(tj);
    }
    j["targets"] = targets;
    if (include_timings)
        j["total_seconds"] = report.total_seconds;
    return j;
}

std::string report_to_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "manifold: " << report.manifold << "\n";
    out << "  pi_1(F+): " << report.group_summary << ", z " << report.z_status
        << ", i* " << (report.i_star_injective ? "injective" : "NOT injective") << "\n";
    out << "  spin_c: " << (report.spin_c ? "yes" : "no") << "\n";
    out << "  spin:   " << (report.spin ? "yes" : "no");
    if (report.spin)
        out << " (" << report.spin_count << " structures)";
    out << "\n";
    for (const auto& t : report.targets) {
        out << "  target " << t.target << ": ";
        if (t.decision.exists)
            out << "exists";
        else
            out << "obstructed (" << t.decision.reason << ")";
        out << "  [" << t.seconds << " s]\n";
        constexpr size_t kShown = 8; // the JSON report carries the full list
        for (size_t k = 0; k < t.decision.witnesses.size() && k < kShown; ++k) {
            const auto& w = t.decision.witnesses[k];
            out << "    witness in " << w.model << ": ";
            for (size_t i = 0; i < w.generator_names.size(); ++i) {
                if (i)
                    out << ", ";
                out << w.generator_names[i] << " -> "
                    << (i < w.image_labels.size() ? w.image_labels[i] : "?");
            }
            out << "\n";
        }
        if (t.decision.witnesses.size() > kShown)
            out << "    ... " << (t.decision.witnesses.size() - kShown)
                << " more witnesses (see the JSON report)\n";
    }
    out << "  total: " << report.total_seconds << " s\n";
    return out.str();
}

} // namespace spinobstruct::catalog
