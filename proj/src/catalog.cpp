#include "spinobstruct/catalog.hpp"

#include "spinobstruct/todd_coxeter.hpp"

#include <stdexcept>

namespace spinobstruct::catalog {

using groups::cyclic_group;
using groups::direct_product;
using groups::FiniteModelTarget;
using groups::ModelListTarget;
using groups::product_index;
using groups::Word;

std::string GammaSpec::name() const {
    switch (kind) {
    case Kind::Cyclic:
        return "cyclic(" + std::to_string(param) + ")";
    case Kind::BinaryDihedral:
        return "binary_dihedral(" + std::to_string(param) + ")";
    case Kind::BinaryTetrahedral:
        return "binary_tetrahedral";
    case Kind::BinaryOctahedral:
        return "binary_octahedral";
    case Kind::BinaryIcosahedral:
        return "binary_icosahedral";
    }
    return "?";
}

std::string ManifoldSpec::name() const {
    if (const auto* t = std::get_if<Torus>(&spec))
        return "T^" + std::to_string(t->n);
    if (const auto* s = std::get_if<Sphere>(&spec))
        return "S^" + std::to_string(s->n);
    if (std::holds_alternative<CP2>(spec))
        return "CP^2";
    if (const auto* l = std::get_if<LensSpace>(&spec))
        return "L(" + std::to_string(l->p) + ")";
    if (const auto* f = std::get_if<SphericalSpaceForm>(&spec))
        return "S^3/" + f->gamma.name();
    if (const auto* d = std::get_if<DeSitterQuotient>(&spec))
        return "H/" + d->gamma.name();
    return std::get<Explicit>(spec).framed.label;
}

FiniteGroup gamma_group(const GammaSpec& gamma, long long max_cosets) {
    switch (gamma.kind) {
    case GammaSpec::Kind::Cyclic:
        if (gamma.param < 1)
            throw std::invalid_argument("gamma cyclic: p must be >= 1");
        return cyclic_group(gamma.param);
    case GammaSpec::Kind::BinaryDihedral:
        if (gamma.param < 1)
            throw std::invalid_argument("gamma binary dihedral: n must be >= 1");
        return groups::dicyclic_group(gamma.param, max_cosets);
    case GammaSpec::Kind::BinaryTetrahedral:
        return groups::sl2p(3);
    case GammaSpec::Kind::BinaryOctahedral:
        return groups::binary_octahedral(max_cosets);
    case GammaSpec::Kind::BinaryIcosahedral:
        return groups::sl2p(5);
    }
    throw std::invalid_argument("unknown gamma spec");
}

namespace {

FramedGroup framed_from_gamma(const FiniteGroup& gamma, const std::string& label) {
    FiniteGroup c2 = cyclic_group(2);
    FiniteGroup g = direct_product(gamma, c2);
    int z = product_index(c2, gamma.identity(), 1);
    return groups::make_framed(std::move(g), z, true, label);
}

} // namespace

FramedGroup build_framed(const ManifoldSpec& spec, long long max_cosets) {
    if (const auto* t = std::get_if<ManifoldSpec::Torus>(&spec.spec)) {
        if (t->n < 3)
            throw std::invalid_argument("torus fingerprint needs n >= 3 (the fiber class has infinite order below)");
        std::vector<std::string> gens;
        for (int i = 1; i <= t->n; ++i)
            gens.push_back("a" + std::to_string(i));
        gens.push_back("z");
        std::vector<std::string> rels;
        for (size_t i = 0; i < gens.size(); ++i)
            for (size_t j = i + 1; j < gens.size(); ++j)
                rels.push_back(gens[i] + " " + gens[j] + " " + gens[i] + "-1 " + gens[j] + "-1");
        rels.push_back("z^2");
        groups::Presentation p = groups::make_presentation(gens, rels);
        Word z{p.generator_index("z")};
        return groups::make_framed(std::move(p), std::move(z), true, spec.name());
    }
    if (const auto* s = std::get_if<ManifoldSpec::Sphere>(&spec.spec)) {
        if (s->n < 3)
            throw std::invalid_argument("sphere fingerprint needs n >= 3");
        return groups::make_framed(cyclic_group(2), 1, true, spec.name());
    }
    if (std::holds_alternative<ManifoldSpec::CP2>(spec.spec)) {
        // Simply connected frame bundle: the fiber loop contracts.
        return groups::make_framed(cyclic_group(1), 0, false, spec.name());
    }
    if (const auto* l = std::get_if<ManifoldSpec::LensSpace>(&spec.spec)) {
        if (l->p < 1)
            throw std::invalid_argument("lens space: p must be >= 1");
        return framed_from_gamma(cyclic_group(l->p), spec.name());
    }
    if (const auto* f = std::get_if<ManifoldSpec::SphericalSpaceForm>(&spec.spec))
        return framed_from_gamma(gamma_group(f->gamma, max_cosets), spec.name());
    if (const auto* d = std::get_if<ManifoldSpec::DeSitterQuotient>(&spec.spec)) {
        // Same fingerprint as the corresponding spherical space form; the
        // frame-bundle fundamental group is computed identically.
        return framed_from_gamma(gamma_group(d->gamma, max_cosets), spec.name());
    }
    FramedGroup f = std::get<ManifoldSpec::Explicit>(spec.spec).framed;
    f.validate();
    return f;
}

std::string GaugeTargetSpec::name() const {
    switch (kind) {
    case Kind::Circle:
        return "u1";
    case Kind::CyclicZ2m:
        return "cyclic_z2m(" + std::to_string(m) + ")";
    case Kind::Su2FiniteModels:
        return "su2_finite_models";
    case Kind::Su2FiniteModelsTimesZ2:
        return "su2_finite_models x Z/2";
    case Kind::FiniteModel:
        return label.empty() ? "finite_model" : label;
    case Kind::Product: {
        std::string s = "product(";
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i)
                s += " x ";
            switch (factors[i].atom) {
            case Factor::Atom::Cyclic:
                s += "cyclic(" + std::to_string(factors[i].param) + ")";
                break;
            case Factor::Atom::BinaryDihedral:
                s += "binary_dihedral(" + std::to_string(factors[i].param) + ")";
                break;
            case Factor::Atom::Sl2_3:
                s += "sl2_3";
                break;
            case Factor::Atom::BinaryOctahedral:
                s += "binary_octahedral";
                break;
            case Factor::Atom::Sl2_5:
                s += "sl2_5";
                break;
            case Factor::Atom::Z2:
                s += "Z/2";
                break;
            }
            if (factors[i].carries_z)
                s += "!";
        }
        return s + ")";
    }
    case Kind::Sm:
        return "sm_model";
    case Kind::PatiSalam:
        return "pati_salam";
    }
    return "?";
}

namespace {

std::pair<FiniteGroup, int> factor_group(const GaugeTargetSpec::Factor& f, long long max_cosets) {
    switch (f.atom) {
    case GaugeTargetSpec::Factor::Atom::Cyclic: {
        if (f.param < 2 || f.param % 2 != 0)
            throw std::invalid_argument("product factor cyclic: order must be even and >= 2");
        FiniteGroup g = cyclic_group(f.param);
        return {g, f.param / 2};
    }
    case GaugeTargetSpec::Factor::Atom::BinaryDihedral: {
        FiniteGroup g = groups::dicyclic_group(f.param, max_cosets);
        int minus_one = groups::unique_central_involution(g);
        return {g, minus_one};
    }
    case GaugeTargetSpec::Factor::Atom::Sl2_3: {
        FiniteGroup g = groups::sl2p(3);
        return {g, groups::unique_central_involution(g)};
    }
    case GaugeTargetSpec::Factor::Atom::BinaryOctahedral: {
        FiniteGroup g = groups::binary_octahedral(max_cosets);
        return {g, groups::unique_central_involution(g)};
    }
    case GaugeTargetSpec::Factor::Atom::Sl2_5: {
        FiniteGroup g = groups::sl2p(5);
        return {g, groups::unique_central_involution(g)};
    }
    case GaugeTargetSpec::Factor::Atom::Z2: {
        FiniteGroup g = cyclic_group(2);
        return {g, 1};
    }
    }
    throw std::invalid_argument("unknown product factor");
}

} // namespace

ModelListTarget pati_salam_models(long long max_cosets) {
    // (A x B x C)/N with N = <(-1,-1,-1)> and z_G the class of (-1,-1,1).
    ModelListTarget out;
    out.label = "pati_salam";
    out.complete_for_finite_sources = false;
    struct Pick {
        GaugeTargetSpec::Factor::Atom atom;
        int param;
        std::string label;
    };
    std::vector<Pick> ab = {{GaugeTargetSpec::Factor::Atom::Cyclic, 4, "cyclic(4)"},
                            {GaugeTargetSpec::Factor::Atom::BinaryDihedral, 2, "binary_dihedral(2)"}};
    std::vector<Pick> cs = {{GaugeTargetSpec::Factor::Atom::Cyclic, 2, "cyclic(2)"},
                            {GaugeTargetSpec::Factor::Atom::Cyclic, 4, "cyclic(4)"}};
    for (const auto& a : ab)
        for (const auto& b : ab)
            for (const auto& c : cs) {
                auto [ga, za] = factor_group({a.atom, a.param, true}, max_cosets);
                auto [gb, zb] = factor_group({b.atom, b.param, true}, max_cosets);
                auto [gc, zc] = factor_group({c.atom, c.param, true}, max_cosets);
                FiniteGroup ab_g = direct_product(ga, gb);
                FiniteGroup abc = direct_product(ab_g, gc);
                int minus3 = product_index(gc, product_index(gb, za, zb), zc);
                int z_abc = product_index(gc, product_index(gb, za, zb), gc.identity());
                FiniteGroup q = groups::central_quotient(abc, {abc.identity(), minus3});
                auto coset = groups::quotient_coset_map(abc, {abc.identity(), minus3});
                FiniteModelTarget model;
                model.group = std::make_shared<FiniteGroup>(std::move(q));
                model.z_g = coset[z_abc];
                model.label = "(" + a.label + " x " + b.label + " x " + c.label + ")/N";
                out.models.push_back(std::move(model));
            }
    return out;
}

GaugeTargetHandle build_target(const GaugeTargetSpec& spec, long long max_cosets) {
    switch (spec.kind) {
    case GaugeTargetSpec::Kind::Circle:
        return groups::CircleClassTarget{};
    case GaugeTargetSpec::Kind::CyclicZ2m:
        if (spec.m < 1)
            throw std::invalid_argument("cyclic_z2m: m must be >= 1");
        return groups::CyclicTarget{spec.m};
    case GaugeTargetSpec::Kind::Su2FiniteModels: {
        groups::Su2FamilyTarget t;
        t.max_cosets = max_cosets;
        return t;
    }
    case GaugeTargetSpec::Kind::Su2FiniteModelsTimesZ2: {
        groups::Su2FamilyTarget t;
        t.times_z2 = true;
        t.max_cosets = max_cosets;
        return t;
    }
    case GaugeTargetSpec::Kind::FiniteModel: {
        if (!spec.model)
            throw std::invalid_argument("finite_model target: missing group");
        FiniteModelTarget t;
        t.group = spec.model;
        t.z_g = spec.z_g;
        t.label = spec.label.empty() ? "finite_model" : spec.label;
        return t;
    }
    case GaugeTargetSpec::Kind::Product: {
        if (spec.factors.empty())
            throw std::invalid_argument("product target: no factors");
        bool any_z = false;
        std::optional<FiniteGroup> acc;
        int z_acc = 0;
        for (const auto& f : spec.factors) {
            auto [g, minus_one] = factor_group(f, max_cosets);
            int zpart = f.carries_z ? minus_one : g.identity();
            any_z |= f.carries_z;
            if (!acc) {
                acc = std::move(g);
                z_acc = zpart;
            } else {
                z_acc = product_index(g, z_acc, zpart);
                acc = direct_product(*acc, g);
            }
        }
        if (!any_z)
            throw std::invalid_argument("product target: no factor carries z");
        FiniteModelTarget t;
        t.group = std::make_shared<FiniteGroup>(std::move(*acc));
        t.z_g = z_acc;
        t.label = spec.name();
        return t;
    }
    case GaugeTargetSpec::Kind::Sm: {
        groups::SmTarget t;
        groups::Su2FamilyTarget family;
        family.times_z2 = true;
        family.max_cosets = max_cosets;
        // The witness models are resolved per source by exists_sping through
        // the family target; embed a default capped expansion here.
        auto models = groups::su2_finite_subgroup_models(std::nullopt, 8, 8, max_cosets);
        t.witness_models.label = "sm witness models";
        for (const auto& m : models) {
            FiniteGroup c2 = cyclic_group(2);
            FiniteModelTarget fm;
            auto prod = std::make_shared<FiniteGroup>(direct_product(*m.group, c2));
            fm.group = prod;
            fm.z_g = product_index(c2, m.group->identity(), 1);
            fm.label = m.label + " x Z/2";
            t.witness_models.models.push_back(std::move(fm));
        }
        {
            // The icosahedral witness factor from the worked example.
            FiniteGroup c2 = cyclic_group(2);
            FiniteGroup sl25 = groups::sl2p(5);
            FiniteModelTarget fm;
            fm.group = std::make_shared<FiniteGroup>(direct_product(sl25, c2));
            fm.z_g = product_index(c2, sl25.identity(), 1);
            fm.label = "sl2_5 x Z/2";
            t.witness_models.models.push_back(std::move(fm));
        }
        return t;
    }
    case GaugeTargetSpec::Kind::PatiSalam:
        return pati_salam_models(max_cosets);
    }
    throw std::invalid_argument("unknown gauge target spec");
}

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"torus", "manifold", "flat torus T^n (n >= 3); parallelizable, fingerprint Z^n x Z/2"},
        {"sphere", "manifold", "S^n (n >= 3); frame bundle has fundamental group Z/2"},
        {"cp2", "manifold", "CP^2; frame bundle is simply connected, every structure obstructed"},
        {"lens_space", "manifold", "L(p) = S^3 / cyclic(p) acting by left multiplication"},
        {"spherical_space_form", "manifold", "S^3 / Gamma for Gamma < SU(2): cyclic, binary_dihedral(n), binary_tetrahedral, binary_octahedral, binary_icosahedral"},
        {"de_sitter_quotient", "manifold", "Gamma \\ H; same frame fingerprint as the spherical space form"},
        {"explicit", "manifold", "user-supplied framed group (presentation or table, z, i*-flag)"},
        {"u1", "gauge", "circle class; decided by characters of the abelianization"},
        {"cyclic_z2m", "gauge", "Z/2m with z required to land on the order-2 element m"},
        {"su2_finite_models", "gauge", "finite subgroups of SU(2) containing -1; complete for finite sources"},
        {"su2_finite_models_x_z2", "gauge", "same models times an extra commuting Z/2 carrying z"},
        {"finite_model", "gauge", "explicit finite group with designated central involution (JSON)"},
        {"product", "gauge", "direct product of concrete atoms; flagged factors contribute z_G"},
        {"sm_model", "gauge", "standard-model class: circle-class decision, product witnesses"},
        {"pati_salam", "gauge", "(A x B x C)/<(-1,-1,-1)> stand-ins with z_G = [(-1,-1,1)]"},
    };
}

} // namespace spinobstruct::catalog
