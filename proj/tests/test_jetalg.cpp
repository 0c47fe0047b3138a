#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinobstruct/jetalg.hpp"
#include "spinobstruct/verify_suites.hpp"

#include <functional>
#include <random>

using namespace spinobstruct;
using namespace spinobstruct::jetalg;
using spinobstruct::vecalg::field_bracket;
using spinobstruct::vecalg::PolyVectorField;

namespace {

// Polynomial in the 2n-variable jet space from text over x1..xn,m1..mn.
Polynomial jp(int n, const std::string& text) {
    return parse_polynomial(text, VarTable::xm_vars(n));
}

PolyVectorField field(int n, std::initializer_list<std::string> comps) {
    PolyVectorField f;
    VarTable vars = VarTable::x_vars(n);
    for (const auto& c : comps)
        f.comps.push_back(parse_polynomial(c, vars));
    return f;
}

} // namespace

TEST_CASE("jet prolongation examples") {
    // constant field: vertical part identically zero
    JetField t = jet_prolong(field(2, {"1", "0"}), 2);
    CHECK(t.coeffs().empty());
    CHECK(anchor(t) == embed_field(field(2, {"1", "0"}), 2));

    // linear field x1 d1 at k = 1: only c_{(1,0),1} = 1
    t = jet_prolong(field(2, {"x1", "0"}), 1);
    REQUIRE(t.coeffs().size() == 1);
    CHECK(t.coeff({1, 0}, 1) == jp(2, "1"));

    // u = x1^2 d2 at k = 2: c_{(1,0),2} = 2 m1, c_{(2,0),2} = 1
    t = jet_prolong(field(2, {"0", "x1^2"}), 2);
    REQUIRE(t.coeffs().size() == 2);
    CHECK(t.coeff({1, 0}, 2) == jp(2, "2*m1"));
    CHECK(t.coeff({2, 0}, 2) == jp(2, "1"));
}

TEST_CASE("anchor properties") {
    JetField t = jet_prolong(field(1, {"x1^3"}), 2);
    CHECK(anchor(t) == embed_field(field(1, {"x1^3"}), 1));

    JetField vert(1, 1);
    vert.set_coeff({1}, 1, jp(1, "m1"));
    CHECK(vert.is_vertical());
    for (const auto& c : anchor(vert).comps)
        CHECK(c.is_zero());

    JetField sum = t + t;
    CHECK(anchor(sum) == field_add(anchor(t), anchor(t)));
}

TEST_CASE("bracket of prolongations is the prolonged field bracket") {
    // n = 1, k = 2: [j2(x1 d1), j2(d1)] = j2([x1 d1, d1]) = j2(-d1)
    JetField a = jet_prolong(field(1, {"x1"}), 2);
    JetField b = jet_prolong(field(1, {"1"}), 2);
    JetField got = bracket_jet(a, b);
    CHECK(got == jet_prolong(field(1, {"-1"}), 2));

    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        PolyVectorField u = verify::random_field(rng, 2, 2, 3);
        PolyVectorField v = verify::random_field(rng, 2, 2, 3);
        JetOptions opts;
        opts.max_coeff_degree = 64;
        CHECK(bracket_jet(jet_prolong(u, 2), jet_prolong(v, 2), opts) ==
              jet_prolong(field_bracket(u, v), 2));
    }
}

TEST_CASE("pointwise bracket of vertical sections") {
    // constant-in-m vertical sections bracket pointwise
    JetField s1(1, 2), s2(1, 2);
    s1.set_coeff({1}, 1, jp(1, "1")); // v_m = (x - m) d
    s2.set_coeff({2}, 1, jp(1, "1")); // w_m = (x - m)^2 d
    JetField got = bracket_jet(s1, s2);
    // [(x-m) d, (x-m)^2 d] = (x-m)^2 d, jet coefficients: order 2 -> 1
    CHECK(got.is_vertical());
    CHECK(got.coeff({2}, 1) == jp(1, "1"));
    CHECK(got.coeff({1}, 1).is_zero());
}

TEST_CASE("mixed bracket: constant anchor against a moving vertical family") {
    // n = 1, k = 1: a = j1(d1), b vertical with c_(1),1(m) = m1.
    JetField a = jet_prolong(field(1, {"1"}), 1);
    JetField b(1, 1);
    b.set_coeff({1}, 1, jp(1, "m1"));
    JetField got = bracket_jet(a, b);
    CHECK(got.is_vertical());
    // [u, v_m] contributes 0 at order 1; the derivative term contributes
    // d/dm (m) = 1.
    CHECK(got.coeff({1}, 1) == jp(1, "1"));
}

TEST_CASE("vertical sections form an ideal") {
    std::mt19937 rng(17);
    JetOptions opts;
    opts.max_coeff_degree = 64;
    for (int t = 0; t < 20; ++t) {
        JetField any = verify::random_jet_field(rng, 2, 2, 2);
        JetField vert = verify::random_jet_field(rng, 2, 2, 2);
        vert.set_anchor(vecalg::PolyVectorField::zero(2, 4));
        CHECK(bracket_jet(any, vert, opts).is_vertical());
        CHECK(bracket_jet(vert, any, opts).is_vertical());
    }
}

TEST_CASE("Jacobi and anchor homomorphism on seeded random triples") {
    auto res = verify::suite_jet_jacobi(2, 2, 42, 100);
    for (const auto& line : res.lines)
        INFO(line);
    CHECK(res.pass);
}

namespace {

// Independent bracket oracle. Represent each section by one polynomial
// family (the constant-extended anchor value plus the vertical monomials)
// and compute
//   [S,T]_m = j_m([f_m, g_m] + d_{u_S(m)}(x -> g_x) - d_{u_T(m)}(x -> f_x)),
// extracting all jet coordinates directly. This takes a different path from
// the case-split implementation and may only agree because the bracket is
// independent of the representing family.
JetField bracket_by_single_family(const JetField& a, const JetField& b) {
    int n = a.n(), k = a.order();
    auto eval_at_base = [&](const Polynomial& p) {
        Polynomial r = p;
        for (int v = 0; v < n; ++v)
            r = r.substitute(v, Polynomial::variable(2 * n, n + v));
        return r;
    };
    auto family_of = [&](const JetField& t) {
        std::vector<Polynomial> comps(n, Polynomial(2 * n));
        for (int i = 0; i < n; ++i)
            comps[i] += eval_at_base(anchor(t).comps[i]);
        JetField raw(n, k);
        for (const auto& [key, c] : t.coeffs())
            raw.set_coeff(key.first, key.second, c);
        ExtensionFamily vert = canonical_extension(raw);
        for (int i = 0; i < n; ++i)
            comps[i] += vert.comps[i];
        return comps;
    };
    auto fa = family_of(a);
    auto fb = family_of(b);
    PolyVectorField va{fa}, vb{fb};
    PolyVectorField total = field_bracket(va, vb);
    std::vector<Polynomial> ua_m, ub_m;
    for (int j = 0; j < n; ++j) {
        ua_m.push_back(eval_at_base(anchor(a).comps[j]));
        ub_m.push_back(eval_at_base(anchor(b).comps[j]));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            total.comps[i] += ua_m[j] * fb[i].derivative(n + j) - ub_m[j] * fa[i].derivative(n + j);

    // Extract the jet coordinates: recenter x := m + y and read coefficients.
    JetField r(n, k);
    r.set_anchor(field_bracket(anchor(a), anchor(b)));
    std::vector<int> xvars(n);
    for (int v = 0; v < n; ++v)
        xvars[v] = v;
    for (int i = 0; i < n; ++i) {
        Polynomial q = total.comps[i];
        for (int v = 0; v < n; ++v) {
            Polynomial repl = Polynomial::variable(2 * n, v) + Polynomial::variable(2 * n, n + v);
            q = q.substitute(v, repl);
        }
        // order 0 must reproduce the anchor of the bracket at the base point
        Exponents zero_pat(2 * n, 0);
        Polynomial o = q.coefficient_of(xvars, zero_pat);
        REQUIRE(o == eval_at_base(r.anchor().comps[i]));
        std::function<void(Exponents&, int, int)> rec = [&](Exponents& cur, int pos, int budget) {
            if (pos == n) {
                if (total_degree(cur) >= 1) {
                    Exponents pat(2 * n, 0);
                    for (int v = 0; v < n; ++v)
                        pat[v] = cur[v];
                    Polynomial c = q.coefficient_of(xvars, pat);
                    if (!c.is_zero())
                        r.set_coeff(cur, i + 1, c);
                }
                return;
            }
            for (int e = 0; e <= budget; ++e) {
                cur[pos] = e;
                rec(cur, pos + 1, budget - e);
            }
            cur[pos] = 0;
        };
        Exponents cur(n, 0);
        rec(cur, 0, k);
    }
    return r;
}

} // namespace

TEST_CASE("bracket agrees with the single-family oracle on random sections") {
    std::mt19937 rng(271);
    JetOptions opts;
    opts.max_coeff_degree = 64;
    for (int t = 0; t < 25; ++t) {
        JetField a = verify::random_jet_field(rng, 2, 2, 2);
        JetField b = verify::random_jet_field(rng, 2, 2, 2);
        CHECK(bracket_jet(a, b, opts) == bracket_by_single_family(a, b));
    }
    // and on 1-dimensional order-1 sections
    for (int t = 0; t < 25; ++t) {
        JetField a = verify::random_jet_field(rng, 1, 1, 3);
        JetField b = verify::random_jet_field(rng, 1, 1, 3);
        CHECK(bracket_jet(a, b, opts) == bracket_by_single_family(a, b));
    }
}

TEST_CASE("extension independence") {
    // t: vertical 1-jet with coefficient m1 in direction 1 (n = 1, k = 1)
    JetField t(1, 1);
    t.set_coeff({1}, 1, jp(1, "m1"));
    ExtensionFamily fam1 = canonical_extension(t);
    CHECK(fam1.vanishes_at_base());

    // fam2 = fam1 + (x - m)^(k+1) perturbation
    ExtensionFamily fam2 = fam1;
    Polynomial diff = jp(1, "x1 - m1");
    fam2.comps[0] += diff * diff * jp(1, "3*m1^2 - 1");
    CHECK(fam2.vanishes_at_base());

    PolyVectorField u = field(1, {"1 + x1^2"});
    CHECK(extension_independence_check(t, fam1, fam2, u));
    CHECK(extension_independence_check(t, fam1, fam1, u));

    // a family representing a different jet is rejected
    ExtensionFamily wrong = fam1;
    wrong.comps[0] += diff * jp(1, "1"); // changes the order-1 coefficient
    CHECK_THROWS_AS(extension_independence_check(t, fam1, wrong, u), std::invalid_argument);

    // a family that does not vanish at the base point is rejected
    ExtensionFamily bad = fam1;
    bad.comps[0] += jp(1, "1");
    CHECK_THROWS_AS(extension_independence_check(t, fam1, bad, u), std::invalid_argument);
}

TEST_CASE("extension independence on seeded perturbation families") {
    std::mt19937 rng(101);
    JetOptions opts;
    opts.max_coeff_degree = 64;
    int n = 2, k = 2;
    for (int trial = 0; trial < 20; ++trial) {
        JetField t = verify::random_jet_field(rng, n, k, 2);
        t.set_anchor(vecalg::PolyVectorField::zero(n, 2 * n));
        ExtensionFamily fam1 = canonical_extension(t);
        ExtensionFamily fam2 = fam1;
        // order k+1 perturbations in both directions
        Polynomial d1 = jp(n, "x1 - m1"), d2 = jp(n, "x2 - m2");
        Polynomial cube = d1 * d1 * d2;
        std::uniform_int_distribution<int> pick(-5, 5);
        for (int i = 0; i < n; ++i)
            fam2.comps[i] += cube * Polynomial(2 * n, Rat(pick(rng)));
        PolyVectorField u = verify::random_field(rng, n, n, 2);
        CHECK(extension_independence_check(t, fam1, fam2, u, opts));
    }
}

TEST_CASE("degree cap guardrail") {
    JetField a = jet_prolong(field(1, {"x1^6"}), 2);
    JetField b(1, 2);
    b.set_coeff({1}, 1, jp(1, "m1^9"));
    JetOptions tight;
    tight.max_coeff_degree = 4;
    CHECK_THROWS_AS(bracket_jet(a, b, tight), degree_cap_exceeded);
    JetOptions loose;
    loose.max_coeff_degree = 64;
    CHECK_NOTHROW(bracket_jet(a, b, loose));
}
