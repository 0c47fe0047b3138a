#include "spinobstruct/catalog.hpp"
#include "spinobstruct/report.hpp"
#include "spinobstruct/todd_coxeter.hpp"
#include "spinobstruct/verify_suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

// Exit codes: 0 = at least one requested structure exists, 1 = usage or
// config error, 2 = resource cap exceeded, 3 = every target obstructed.
constexpr int kExitExists = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitObstructed = 3;

long long max_cosets_from_env(long long fallback) {
    if (const char* env = std::getenv("SPINOBSTRUCT_MAX_COSETS")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw spinobstruct::parse_error("SPINOBSTRUCT_MAX_COSETS is not an integer");
        }
    }
    return fallback;
}

int run_analyze(const std::string& config_path, const std::string& json_path, bool witnesses,
                bool conjugacy_dedup, long long max_cosets) {
    spinobstruct::catalog::AnalyzeConfig cfg;
    try {
        cfg = spinobstruct::catalog::load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    spinobstruct::catalog::AnalyzeOptions opts;
    opts.witnesses = witnesses;
    opts.conjugacy_dedup = conjugacy_dedup;
    opts.max_cosets = max_cosets;
    spinobstruct::catalog::AnalysisReport rep;
    try {
        rep = spinobstruct::catalog::analyze(cfg, opts);
    } catch (const spinobstruct::groups::coset_limit_exceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << spinobstruct::catalog::report_to_text(rep);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return kExitUsage;
        }
        out << spinobstruct::catalog::report_to_json(rep).dump(2) << "\n";
    }
    return rep.any_exists() ? kExitExists : kExitObstructed;
}

int run_algebra(const std::string& suite, int n, int K, int k, unsigned seed, int count) {
    spinobstruct::verify::SuiteResult res;
    try {
        if (suite == "vec1-ideals") {
            res = spinobstruct::verify::suite_vec1_ideals(K);
        } else if (suite == "sl-span") {
            res = spinobstruct::verify::suite_sl_span(n, K);
        } else if (suite == "jet-jacobi") {
            res = spinobstruct::verify::suite_jet_jacobi(n, k, seed, count);
        } else if (suite == "cocycle") {
            res = spinobstruct::verify::suite_cocycle(n, seed, count);
        } else {
            std::cerr << "unknown suite: " << suite
                      << " (expected vec1-ideals | sl-span | jet-jacobi | cocycle)\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& line : res.lines)
        std::cout << "  " << line << "\n";
    std::cout << (res.pass ? "pass" : "FAIL") << ": " << res.summary << "\n";
    return res.pass ? 0 : kExitUsage;
}

int run_catalog(bool as_json) {
    auto entries = spinobstruct::catalog::catalog_entries();
    if (as_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json ej;
            ej["tag"] = e.tag;
            ej["kind"] = e.kind;
            ej["note"] = e.note;
            j.push_back(ej);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& e : entries)
            std::cout << e.kind << "  " << e.tag << "  -- " << e.note << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinobstruct: spin / spin^c / spin^G existence on catalogued manifolds, "
                 "plus symbolic verification of the underlying algebra"};
    app.require_subcommand(1);

    // analyze
    std::string config_path, json_path;
    bool witnesses = false;
    bool dedup = true;
    long long max_cosets = 0;
    auto* analyze = app.add_subcommand("analyze", "decide structures for a manifold/gauge config");
    analyze->add_option("config", config_path, "config file (TOML or JSON)")->required();
    analyze->add_option("--json", json_path, "write a machine-readable report here");
    analyze->add_flag("--witnesses", witnesses, "enumerate witness homomorphisms");
    analyze->add_flag("--conjugacy-dedup,!--no-conjugacy-dedup", dedup,
                      "deduplicate witnesses up to target conjugacy (default on)");
    analyze->add_option("--max-cosets", max_cosets, "coset enumeration cap");

    // algebra
    std::string suite;
    int n = 2, K = 3, k = 2, count = 100;
    unsigned seed = 42;
    auto* algebra = app.add_subcommand("algebra", "run a symbolic verification suite");
    algebra->add_option("suite", suite, "vec1-ideals | sl-span | jet-jacobi | cocycle")->required();
    algebra->add_option("--n", n, "ambient dimension");
    algebra->add_option("--K", K, "truncation degree");
    algebra->add_option("--k", k, "jet order");
    algebra->add_option("--seed", seed, "random seed");
    algebra->add_option("--count", count, "sample count");

    // catalog
    bool catalog_json = false;
    auto* catalog = app.add_subcommand("catalog", "list catalogued manifolds and gauge targets");
    catalog->add_flag("--json", catalog_json, "machine-readable listing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*analyze) {
            long long cap = max_cosets > 0
                                ? max_cosets
                                : max_cosets_from_env(spinobstruct::groups::kDefaultMaxCosets);
            return run_analyze(config_path, json_path, witnesses, dedup, cap);
        }
        if (*algebra)
            return run_algebra(suite, n, K, k, seed, count);
        if (*catalog)
            return run_catalog(catalog_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
