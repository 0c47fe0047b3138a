#include "spinobstruct/config.hpp"

#include "spinobstruct/polynomial.hpp" // parse_error
#include "spinobstruct/toml_lite.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace spinobstruct::catalog {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GammaSpec parse_gamma(const std::string& text) {
    GammaSpec g;
    auto colon = text.find(':');
    std::string name = colon == std::string::npos ? text : text.substr(0, colon);
    int param = colon == std::string::npos ? 0 : std::stoi(text.substr(colon + 1));
    if (name == "cyclic") {
        g.kind = GammaSpec::Kind::Cyclic;
        g.param = param ? param : 2;
    } else if (name == "binary_dihedral") {
        g.kind = GammaSpec::Kind::BinaryDihedral;
        g.param = param ? param : 2;
    } else if (name == "binary_tetrahedral") {
        g.kind = GammaSpec::Kind::BinaryTetrahedral;
    } else if (name == "binary_octahedral") {
        g.kind = GammaSpec::Kind::BinaryOctahedral;
    } else if (name == "binary_icosahedral") {
        g.kind = GammaSpec::Kind::BinaryIcosahedral;
    } else {
        throw parse_error("unknown gamma spec: " + text);
    }
    return g;
}

GaugeTargetSpec::Factor parse_factor(std::string text) {
    GaugeTargetSpec::Factor f;
    if (!text.empty() && text.back() == '!') {
        f.carries_z = true;
        text.pop_back();
    }
    auto colon = text.find(':');
    std::string name = colon == std::string::npos ? text : text.substr(0, colon);
    int param = colon == std::string::npos ? 0 : std::stoi(text.substr(colon + 1));
    using Atom = GaugeTargetSpec::Factor::Atom;
    if (name == "cyclic") {
        f.atom = Atom::Cyclic;
        f.param = param ? param : 2;
    } else if (name == "binary_dihedral") {
        f.atom = Atom::BinaryDihedral;
        f.param = param ? param : 2;
    } else if (name == "sl2_3") {
        f.atom = Atom::Sl2_3;
    } else if (name == "binary_octahedral") {
        f.atom = Atom::BinaryOctahedral;
    } else if (name == "sl2_5") {
        f.atom = Atom::Sl2_5;
    } else if (name == "z2") {
        f.atom = Atom::Z2;
    } else {
        throw parse_error("unknown product factor: " + text);
    }
    return f;
}

ManifoldSpec manifold_from_json(const json& j, const std::string& base_dir) {
    std::string type = j.at("type").get<std::string>();
    ManifoldSpec spec;
    if (type == "torus") {
        spec.spec = ManifoldSpec::Torus{j.value("n", 3)};
    } else if (type == "sphere") {
        spec.spec = ManifoldSpec::Sphere{j.value("n", 3)};
    } else if (type == "cp2") {
        spec.spec = ManifoldSpec::CP2{};
    } else if (type == "lens_space") {
        spec.spec = ManifoldSpec::LensSpace{j.value("p", 2)};
    } else if (type == "spherical_space_form") {
        spec.spec = ManifoldSpec::SphericalSpaceForm{parse_gamma(j.at("gamma").get<std::string>())};
    } else if (type == "de_sitter_quotient") {
        spec.spec = ManifoldSpec::DeSitterQuotient{parse_gamma(j.at("gamma").get<std::string>())};
    } else if (type == "explicit") {
        json fj;
        if (j.contains("file")) {
            std::filesystem::path p = j.at("file").get<std::string>();
            if (p.is_relative())
                p = std::filesystem::path(base_dir) / p;
            fj = json::parse(read_file(p.string()));
        } else {
            fj = j.at("framed");
        }
        spec.spec = ManifoldSpec::Explicit{framed_from_json(fj)};
    } else {
        throw parse_error("unknown manifold type: " + type);
    }
    return spec;
}

GaugeTargetSpec target_from_json(const json& j, const std::string& base_dir) {
    std::string type = j.at("type").get<std::string>();
    GaugeTargetSpec t;
    if (type == "u1") {
        t.kind = GaugeTargetSpec::Kind::Circle;
    } else if (type == "cyclic_z2m") {
        t.kind = GaugeTargetSpec::Kind::CyclicZ2m;
        t.m = j.at("m").get<long long>();
    } else if (type == "su2_finite_models") {
        t.kind = GaugeTargetSpec::Kind::Su2FiniteModels;
    } else if (type == "su2_finite_models_x_z2") {
        t.kind = GaugeTargetSpec::Kind::Su2FiniteModelsTimesZ2;
    } else if (type == "finite_model") {
        t.kind = GaugeTargetSpec::Kind::FiniteModel;
        json gj;
        if (j.contains("file")) {
            std::filesystem::path p = j.at("file").get<std::string>();
            if (p.is_relative())
                p = std::filesystem::path(base_dir) / p;
            gj = json::parse(read_file(p.string()));
        } else {
            gj = j.at("group");
        }
        auto g = groups::finite_group_from_json(gj.dump());
        t.model = std::make_shared<const groups::FiniteGroup>(std::move(g));
        if (!gj.contains("z"))
            throw parse_error("finite_model target: missing z");
        t.z_g = gj.at("z").get<int>();
        t.label = j.value("label", std::string("finite_model"));
    } else if (type == "product") {
        t.kind = GaugeTargetSpec::Kind::Product;
        for (const auto& f : j.at("factors"))
            t.factors.push_back(parse_factor(f.get<std::string>()));
    } else if (type == "sm_model") {
        t.kind = GaugeTargetSpec::Kind::Sm;
    } else if (type == "pati_salam") {
        t.kind = GaugeTargetSpec::Kind::PatiSalam;
    } else {
        throw parse_error("unknown gauge target type: " + type);
    }
    return t;
}

} // namespace

groups::FramedGroup framed_from_json(const json& j) {
    std::string label = j.value("label", std::string("explicit"));
    bool istar = j.value("i_star_injective", true);
    if (j.contains("finite")) {
        const json& fj = j.at("finite");
        auto g = groups::finite_group_from_json(fj.dump());
        int z = fj.at("z").get<int>();
        return groups::make_framed(std::move(g), z, istar, label);
    }
    if (j.contains("presentation")) {
        const json& pj = j.at("presentation");
        auto p = groups::make_presentation(pj.at("generators").get<std::vector<std::string>>(),
                                           pj.at("relators").get<std::vector<std::string>>());
        groups::Word z = groups::parse_word(j.at("z").get<std::string>(), p);
        return groups::make_framed(std::move(p), std::move(z), istar, label);
    }
    throw parse_error("framed group JSON needs 'finite' or 'presentation'");
}

json framed_to_json(const groups::FramedGroup& f) {
    json j;
    j["label"] = f.label;
    j["i_star_injective"] = f.i_star_injective;
    if (f.is_finite()) {
        json fj = json::parse(groups::finite_group_to_json(f.finite()));
        fj["z"] = f.z_index();
        j["finite"] = fj;
    } else {
        const auto& p = f.presented();
        json pj;
        pj["generators"] = p.generators;
        std::vector<std::string> rels;
        for (const auto& r : p.relators)
            rels.push_back(groups::word_to_string(r, p));
        pj["relators"] = rels;
        j["presentation"] = pj;
        j["z"] = groups::word_to_string(f.z_word(), p);
    }
    return j;
}

AnalyzeConfig config_from_json(const json& j, const std::string& base_dir) {
    AnalyzeConfig cfg;
    cfg.manifold = manifold_from_json(j.at("manifold"), base_dir);
    if (!j.contains("gauge"))
        throw parse_error("config: missing gauge targets");
    const json& targets = j.at("gauge");
    if (!targets.is_array() || targets.empty())
        throw parse_error("config: gauge must be a non-empty array");
    for (const auto& t : targets)
        cfg.targets.push_back(target_from_json(t, base_dir));
    return cfg;
}

AnalyzeConfig load_config(const std::string& path) {
    std::string text = read_file(path);
    std::filesystem::path p(path);
    std::string base = p.has_parent_path() ? p.parent_path().string() : ".";
    std::string ext = p.extension().string();
    json j;
    if (ext == ".json") {
        j = json::parse(text);
    } else if (ext == ".toml") {
        j = toml_lite_parse(text);
    } else {
        // sniff: JSON starts with '{'
        size_t first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            j = json::parse(text);
        else
            j = toml_lite_parse(text);
    }
    return config_from_json(j, base);
}

} // namespace spinobstruct::catalog
