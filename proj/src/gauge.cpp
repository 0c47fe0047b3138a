#include "spinobstruct/gauge.hpp"

#include "spinobstruct/su2_models.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spinobstruct::groups {

namespace {

Int egcd(const Int& a, const Int& b, Int& s, Int& t) {
    if (b == 0) {
        s = a < 0 ? -1 : 1;
        t = 0;
        return a < 0 ? -a : a;
    }
    Int s1, t1;
    Int g = egcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

// Solve sum a_i t_i = target (mod modulus); returns t or nullopt.
std::optional<std::vector<Int>> solve_congruence(const std::vector<Int>& a, const Int& target,
                                                 const Int& modulus) {
    Int cur = modulus;
    std::vector<Int> coeffs(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        Int s, t;
        Int g = egcd(cur, mod(a[i], modulus), s, t);
        for (size_t j = 0; j < i; ++j)
            coeffs[j] *= s;
        coeffs[i] = t;
        cur = g;
    }
    if (cur == 0)
        cur = modulus; // all coefficients were 0 mod modulus
    if (target % cur != 0)
        return std::nullopt;
    Int q = target / cur;
    for (auto& c : coeffs)
        c = mod(c * q, modulus);
    return coeffs;
}

// Images of the presentation's generators under a homomorphism to Z/2m that
// sends z to m, or nullopt.
std::optional<std::vector<Int>> cyclic_solve_presented(const Presentation& p, const Word& z,
                                                       long long m) {
    AbelianizationData data = abelianization_data(p, z);
    Int M2 = Int(2) * m;
    int g = p.num_generators();

    // Unknowns are the live cokernel coordinates; coordinate i contributes
    // values in mult_i * Z/2m.
    std::vector<int> coords;
    std::vector<Int> mult;
    std::vector<Int> zc; // z's coordinate, reduced where torsion
    {
        size_t tpos = 0, fpos = 0;
        for (int i = 0; i < g; ++i) {
            Int d = data.diag[i];
            if (d == 1)
                continue; // dead coordinate
            if (d == 0) {
                coords.push_back(i);
                mult.push_back(1);
                zc.push_back(data.invariants.z_free.at(fpos++));
            } else {
                Int s, t;
                Int gg = egcd(d, M2, s, t);
                coords.push_back(i);
                mult.push_back(M2 / gg);
                zc.push_back(data.invariants.z_torsion.at(tpos++));
            }
        }
    }

    std::vector<Int> a;
    for (size_t k = 0; k < coords.size(); ++k)
        a.push_back(mod(zc[k] * mult[k], M2));
    auto t = solve_congruence(a, Int(m), M2);
    if (!t)
        return std::nullopt;

    // Coordinate values, then pull back to generator images through U.
    std::vector<Int> v(g, 0);
    for (size_t k = 0; k < coords.size(); ++k)
        v[coords[k]] = mod((*t)[k] * mult[k], M2);
    std::vector<Int> images(g, 0);
    for (int j = 0; j < g; ++j) {
        Int acc = 0;
        for (int i = 0; i < g; ++i)
            acc += v[i] * data.u[i][j];
        images[j] = mod(acc, M2);
    }
    // Sanity: relators vanish and z hits m.
    for (const auto& row : p.relator_exponent_matrix()) {
        Int acc = 0;
        for (int j = 0; j < g; ++j)
            acc += row[j] * images[j];
        if (mod(acc, M2) != 0)
            throw std::logic_error("cyclic_solve_presented: relator image nonzero");
    }
    {
        Int acc = 0;
        auto zeta = p.exponent_vector(z);
        for (int j = 0; j < g; ++j)
            acc += zeta[j] * images[j];
        if (mod(acc, M2) != m)
            throw std::logic_error("cyclic_solve_presented: z image wrong");
    }
    return images;
}

GaugeWitness cyclic_witness(const std::vector<std::string>& gen_names,
                            const std::vector<Int>& images, long long m) {
    GaugeWitness w;
    w.model = "Z/" + std::to_string(2 * m);
    w.generator_names = gen_names;
    for (const auto& v : images) {
        w.image_labels.push_back(spinobstruct::to_string(v));
        w.hom.images.push_back(static_cast<int>(v));
    }
    return w;
}

// Abelianized finite source with the coset map and image of z.
struct FiniteAbelianization {
    FiniteGroup quotient;
    std::vector<int> coset_of;
    int z_image;
};

FiniteAbelianization abelianize_finite(const FiniteGroup& g, int z) {
    auto derived = g.commutator_subgroup();
    FiniteAbelianization out{quotient_by_normal(g, derived), quotient_coset_map(g, derived), 0};
    out.z_image = out.coset_of[z];
    return out;
}

long long group_exponent(const FiniteGroup& g) {
    long long e = 1;
    for (int a = 0; a < g.order(); ++a)
        e = std::lcm(e, static_cast<long long>(g.element_order(a)));
    return e;
}

// Build a witness from a hom assigning target elements to the framed
// group's own generators.
GaugeWitness model_witness(const FramedGroup& f, const FiniteModelTarget& model,
                           const Homomorphism& hom) {
    GaugeWitness w;
    w.model = model.label;
    w.generator_names = framed_generator_names(f);
    for (int x : hom.images)
        w.image_labels.push_back(model.group->label(x));
    w.hom = hom;
    w.model_group = model.group;
    return w;
}

void validate_model(const FiniteModelTarget& model) {
    if (!model.group)
        throw std::invalid_argument("gauge target: missing model group");
    const FiniteGroup& g = *model.group;
    if (model.z_g < 0 || model.z_g >= g.order())
        throw std::invalid_argument("gauge target: z_G out of range");
    if (model.z_g == g.identity() || g.mul(model.z_g, model.z_g) != g.identity() ||
        !g.is_central(model.z_g))
        throw std::invalid_argument("gauge target: z_G must be a central involution");
}

GaugeDecision decide_finite_model(const FramedGroup& f, const FiniteModelTarget& model,
                                  const SpingOptions& options) {
    validate_model(model);
    GaugeDecision dec;
    HomSearchOptions hopts;
    hopts.up_to_target_conjugacy = options.conjugacy_dedup;
    hopts.limit = options.witnesses ? options.witness_limit : 1;
    std::vector<Homomorphism> homs;
    if (f.is_finite()) {
        ZConstraint zc{f.z_index(), model.z_g};
        homs = enumerate_homs(f.finite(), *model.group, zc, hopts);
    } else {
        ZConstraint zc{f.z_word(), model.z_g};
        homs = enumerate_homs(f.presented(), *model.group, zc, hopts);
    }
    dec.exists = !homs.empty();
    dec.reason = dec.exists ? "witness_found" : "no_homomorphism";
    if (dec.exists)
        for (const auto& h : homs)
            dec.witnesses.push_back(model_witness(f, model, h));
    return dec;
}

GaugeDecision decide_cyclic(const FramedGroup& f, long long m, const SpingOptions& options) {
    GaugeDecision dec;
    if (m < 1)
        throw std::invalid_argument("cyclic gauge target: m must be >= 1");
    if (f.is_finite()) {
        auto ab = abelianize_finite(f.finite(), f.z_index());
        FiniteModelTarget model;
        auto cyc = std::make_shared<FiniteGroup>(cyclic_group(static_cast<int>(2 * m)));
        model.group = cyc;
        model.z_g = cyc->power(1, m);
        model.label = "Z/" + std::to_string(2 * m);
        FramedGroup fq{ab.quotient, ab.z_image, true, f.label + "^ab"};
        GaugeDecision inner = decide_finite_model(fq, model, options);
        dec.exists = inner.exists;
        dec.reason = inner.reason;
        if (dec.exists && !inner.witnesses.empty()) {
            // Re-express images on the original group's generators.
            auto qgens = ab.quotient.generating_set();
            for (const auto& w : inner.witnesses) {
                auto full = extend_hom(ab.quotient, *cyc, qgens, w.hom.images);
                if (!full)
                    continue;
                GaugeWitness pulled;
                pulled.model = model.label;
                pulled.model_group = cyc;
                pulled.generator_names = framed_generator_names(f);
                for (int g : f.finite().generating_set()) {
                    int img = (*full)[ab.coset_of[g]];
                    pulled.image_labels.push_back(std::to_string(img));
                    pulled.hom.images.push_back(img);
                }
                dec.witnesses.push_back(std::move(pulled));
                if (!options.witnesses)
                    break;
            }
        }
        return dec;
    }
    auto images = cyclic_solve_presented(f.presented(), f.z_word(), m);
    dec.exists = images.has_value();
    dec.reason = dec.exists ? "witness_found" : "no_homomorphism";
    if (images)
        dec.witnesses.push_back(cyclic_witness(f.presented().generators, *images, m));
    return dec;
}

GaugeDecision decide_circle(const FramedGroup& f, const SpingOptions& options) {
    GaugeDecision dec;
    if (!spinc_exists(f)) {
        dec.exists = false;
        dec.reason = "z_dies_in_abelianization";
        return dec;
    }
    dec.exists = true;
    dec.reason = "witness_found";
    // Synthesize an explicit character witness through a finite cyclic
    // quotient: the smallest 2m for which z maps onto the order-2 element.
    long long m_pick = 0;
    if (f.is_finite()) {
        long long e = group_exponent(abelianize_finite(f.finite(), f.z_index()).quotient);
        m_pick = e / 2;
    } else {
        auto ab = abelianization(f.presented(), f.z_word());
        for (size_t i = 0; i < ab.factors.size(); ++i)
            if (ab.z_torsion[i] != 0) {
                m_pick = static_cast<long long>(ab.factors[i] / 2);
                break;
            }
        if (m_pick == 0)
            m_pick = 1; // z survives freely; a Z/2 character exists
    }
    if (m_pick >= 1) {
        GaugeDecision inner = decide_cyclic(f, m_pick, options);
        if (inner.exists)
            dec.witnesses = std::move(inner.witnesses);
    }
    return dec;
}

ModelListTarget expand_su2_family(const FramedGroup& f, const Su2FamilyTarget& target) {
    std::optional<long long> source_order;
    if (f.is_finite())
        source_order = f.finite().order();
    auto models = su2_finite_subgroup_models(source_order, target.cyclic_cap,
                                             target.dicyclic_cap, target.max_cosets);
    ModelListTarget out;
    out.label = target.times_z2 ? "su2_finite_models x Z/2" : "su2_finite_models";
    out.complete_for_finite_sources = f.is_finite() && !target.times_z2;
    for (const auto& m : models) {
        FiniteModelTarget fm;
        if (target.times_z2) {
            auto prod = std::make_shared<FiniteGroup>(direct_product(*m.group, cyclic_group(2)));
            fm.group = prod;
            fm.z_g = product_index(cyclic_group(2), m.group->identity(), 1);
            fm.label = m.label + " x Z/2";
        } else {
            fm.group = m.group;
            fm.z_g = m.minus_one;
            fm.label = m.label;
        }
        out.models.push_back(std::move(fm));
    }
    return out;
}

GaugeDecision decide_model_list(const FramedGroup& f, const ModelListTarget& target,
                                const SpingOptions& options) {
    GaugeDecision dec;
    for (const auto& model : target.models) {
        GaugeDecision inner = decide_finite_model(f, model, options);
        if (inner.exists) {
            dec.exists = true;
            dec.reason = "witness_found";
            dec.witnesses.insert(dec.witnesses.end(), inner.witnesses.begin(),
                                 inner.witnesses.end());
            if (!options.witnesses)
                return dec;
        }
    }
    if (!dec.exists)
        dec.reason = "no_witness_among_models";
    return dec;
}

} // namespace

std::vector<std::string> framed_generator_names(const FramedGroup& f) {
    if (!f.is_finite())
        return f.presented().generators;
    std::vector<std::string> names;
    for (int g : f.finite().generating_set())
        names.push_back(f.finite().label(g));
    return names;
}

std::string target_label(const GaugeTargetHandle& target) {
    if (std::holds_alternative<CircleClassTarget>(target))
        return "u1";
    if (const auto* c = std::get_if<CyclicTarget>(&target))
        return "Z/" + std::to_string(2 * c->m);
    if (const auto* m = std::get_if<FiniteModelTarget>(&target))
        return m->label;
    if (const auto* l = std::get_if<ModelListTarget>(&target))
        return l->label;
    if (const auto* s = std::get_if<Su2FamilyTarget>(&target))
        return s->times_z2 ? "su2_finite_models x Z/2" : "su2_finite_models";
    return "sm_model";
}

GaugeDecision exists_sping(const FramedGroup& f, const GaugeTargetHandle& target,
                           const SpingOptions& options) {
    f.validate();
    if (!f.i_star_injective) {
        GaugeDecision dec;
        dec.exists = false;
        dec.reason = "i_star_not_injective";
        return dec;
    }
    if (std::holds_alternative<CircleClassTarget>(target))
        return decide_circle(f, options);
    if (const auto* c = std::get_if<CyclicTarget>(&target))
        return decide_cyclic(f, c->m, options);
    if (const auto* m = std::get_if<FiniteModelTarget>(&target))
        return decide_finite_model(f, *m, options);
    if (const auto* l = std::get_if<ModelListTarget>(&target))
        return decide_model_list(f, *l, options);
    if (const auto* s = std::get_if<Su2FamilyTarget>(&target))
        return decide_model_list(f, expand_su2_family(f, *s), options);
    const auto& sm = std::get<SmTarget>(target);
    GaugeDecision dec = decide_circle(f, options);
    if (dec.exists && options.witnesses) {
        GaugeDecision models = decide_model_list(f, sm.witness_models, options);
        dec.witnesses.insert(dec.witnesses.end(), models.witnesses.begin(),
                             models.witnesses.end());
    }
    return dec;
}

} // namespace spinobstruct::groups
