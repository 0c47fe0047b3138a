#include "spinobstruct/jetalg.hpp"

#include <algorithm>

namespace spinobstruct::jetalg {

using spinobstruct::vecalg::field_bracket;

namespace {

// Enumerate exponents alpha of length n with 1 <= |alpha| <= k.
void jet_exponents_rec(int n, int budget, int pos, Exponents& cur, std::vector<Exponents>& out) {
    if (pos == n) {
        if (total_degree(cur) >= 1)
            out.push_back(cur);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        cur[pos] = e;
        jet_exponents_rec(n, budget - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

std::vector<Exponents> jet_exponents(int n, int k) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    jet_exponents_rec(n, k, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool uses_only_vars(const Polynomial& p, int lo, int hi) {
    for (const auto& [e, c] : p.terms())
        for (int v = 0; v < static_cast<int>(e.size()); ++v)
            if (e[v] > 0 && (v < lo || v >= hi))
                return false;
    return true;
}

// Substitute x_i := m_i in a 2n-variable polynomial.
Polynomial eval_at_base(const Polynomial& p, int n) {
    Polynomial r = p;
    for (int i = 0; i < n; ++i)
        r = r.substitute(i, Polynomial::variable(2 * n, n + i));
    return r;
}

// Recenter at the base point: q(m, y) := p(m, m + y), reusing the x slots
// for y. The coefficient of y^alpha is then a polynomial in m.
Polynomial recenter(const Polynomial& p, int n) {
    Polynomial r = p;
    for (int i = 0; i < n; ++i) {
        Polynomial repl = Polynomial::variable(2 * n, i) + Polynomial::variable(2 * n, n + i);
        r = r.substitute(i, repl);
    }
    return r;
}

} // namespace

void JetField::set_anchor(const PolyVectorField& u) {
    if (u.n() != n_)
        throw std::invalid_argument("JetField::set_anchor: dimension mismatch");
    for (const auto& p : u.comps) {
        if (p.nvars() != 2 * n_)
            throw std::invalid_argument("JetField::set_anchor: expected 2n-variable components");
        if (!uses_only_vars(p, 0, n_))
            throw std::invalid_argument("JetField::set_anchor: anchor must depend on x only");
    }
    anchor_ = u;
}

Polynomial JetField::coeff(const Exponents& alpha, int dir) const {
    auto it = coeffs_.find({alpha, dir});
    return it == coeffs_.end() ? Polynomial(2 * n_) : it->second;
}

void JetField::set_coeff(const Exponents& alpha, int dir, const Polynomial& c) {
    int ord = total_degree(alpha);
    if (static_cast<int>(alpha.size()) != n_ || ord < 1 || ord > k_)
        throw std::invalid_argument("JetField::set_coeff: bad jet coordinate");
    if (dir < 1 || dir > n_)
        throw std::invalid_argument("JetField::set_coeff: direction out of range");
    if (c.nvars() != 2 * n_ || !uses_only_vars(c, n_, 2 * n_))
        throw std::invalid_argument("JetField::set_coeff: coefficient must depend on m only");
    if (c.is_zero())
        coeffs_.erase({alpha, dir});
    else
        coeffs_[{alpha, dir}] = c;
}

bool JetField::is_vertical() const {
    for (const auto& p : anchor_.comps)
        if (!p.is_zero())
            return false;
    return true;
}

JetField JetField::operator+(const JetField& o) const {
    if (n_ != o.n_ || k_ != o.k_)
        throw std::invalid_argument("JetField::operator+: shape mismatch");
    JetField r(n_, k_);
    r.anchor_ = field_add(anchor_, o.anchor_);
    r.coeffs_ = coeffs_;
    for (const auto& [key, c] : o.coeffs_) {
        auto it = r.coeffs_.find(key);
        if (it == r.coeffs_.end()) {
            r.coeffs_[key] = c;
        } else {
            it->second += c;
            if (it->second.is_zero())
                r.coeffs_.erase(it);
        }
    }
    return r;
}

JetField JetField::operator-(const JetField& o) const {
    return *this + o * Rat(-1);
}

JetField JetField::operator*(const Rat& c) const {
    JetField r(n_, k_);
    r.anchor_ = field_scale(anchor_, c);
    if (c != 0)
        for (const auto& [key, p] : coeffs_)
            r.coeffs_[key] = p * c;
    return r;
}

PolyVectorField embed_field(const PolyVectorField& u, int n) {
    PolyVectorField r;
    r.comps.reserve(n);
    for (const auto& p : u.comps) {
        if (p.nvars() == 2 * n) {
            r.comps.push_back(p);
            continue;
        }
        if (p.nvars() != n)
            throw std::invalid_argument("embed_field: expected n or 2n variables");
        Polynomial q(2 * n);
        for (const auto& [e, c] : p.terms()) {
            Exponents ext = e;
            ext.resize(2 * n, 0);
            q.add_term(ext, c);
        }
        r.comps.push_back(std::move(q));
    }
    return r;
}

JetField jet_prolong(const PolyVectorField& u, int k) {
    if (k < 1)
        throw std::invalid_argument("jet_prolong: k must be >= 1");
    int n = u.n();
    PolyVectorField ue = embed_field(u, n);
    JetField t(n, k);
    t.set_anchor(ue);
    for (int i = 1; i <= n; ++i) {
        Polynomial q = recenter(ue.comps[i - 1], n);
        std::vector<int> xvars(n);
        for (int v = 0; v < n; ++v)
            xvars[v] = v;
        for (const auto& alpha : jet_exponents(n, k)) {
            Exponents pat(2 * n, 0);
            for (int v = 0; v < n; ++v)
                pat[v] = alpha[v];
            Polynomial c = q.coefficient_of(xvars, pat);
            if (!c.is_zero())
                t.set_coeff(alpha, i, c);
        }
    }
    return t;
}

PolyVectorField anchor(const JetField& t) {
    return t.anchor();
}

bool ExtensionFamily::vanishes_at_base() const {
    for (const auto& p : comps)
        if (!eval_at_base(p, n).is_zero())
            return false;
    return true;
}

ExtensionFamily canonical_extension(const JetField& vertical) {
    int n = vertical.n();
    ExtensionFamily fam;
    fam.n = n;
    fam.comps.assign(n, Polynomial(2 * n));
    for (const auto& [key, c] : vertical.coeffs()) {
        const auto& [alpha, dir] = key;
        Polynomial mono(2 * n, Rat(1));
        for (int v = 0; v < n; ++v) {
            Polynomial diff = Polynomial::variable(2 * n, v) - Polynomial::variable(2 * n, n + v);
            for (int e = 0; e < alpha[v]; ++e)
                mono = mono * diff;
        }
        fam.comps[dir - 1] += c * mono;
    }
    return fam;
}

JetField jet_of_family(const ExtensionFamily& fam, int k) {
    int n = fam.n;
    JetField t(n, k);
    std::vector<int> xvars(n);
    for (int v = 0; v < n; ++v)
        xvars[v] = v;
    for (int i = 1; i <= n; ++i) {
        Polynomial q = recenter(fam.comps[i - 1], n);
        Exponents zero_pat(2 * n, 0);
        if (!q.coefficient_of(xvars, zero_pat).is_zero())
            throw std::invalid_argument("jet_of_family: family does not vanish at the base point");
        for (const auto& alpha : jet_exponents(n, k)) {
            Exponents pat(2 * n, 0);
            for (int v = 0; v < n; ++v)
                pat[v] = alpha[v];
            Polynomial c = q.coefficient_of(xvars, pat);
            if (!c.is_zero())
                t.set_coeff(alpha, i, c);
        }
    }
    return t;
}

namespace {

// Decompose tau = j^k(anchor) + vertical.
std::pair<JetField, JetField> decompose(const JetField& t) {
    JetField prol = jet_prolong(anchor(t), t.order());
    JetField vert = t - prol;
    // The anchor parts cancel exactly.
    return {prol, vert};
}

// d_u|_m (x -> v_x): derivative in m of the family along u's value at m.
ExtensionFamily family_derivative_along(const PolyVectorField& u_embedded,
                                        const ExtensionFamily& fam) {
    int n = fam.n;
    ExtensionFamily out;
    out.n = n;
    out.comps.assign(n, Polynomial(2 * n));
    // u^j evaluated at the base point.
    std::vector<Polynomial> u_at_m;
    for (int j = 0; j < n; ++j)
        u_at_m.push_back(eval_at_base(u_embedded.comps[j], n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.comps[i] += u_at_m[j] * fam.comps[i].derivative(n + j);
    return out;
}

// [j^k u, tau] for vertical tau, via a representing family.
JetField mixed_bracket_with_family(const PolyVectorField& u_embedded,
                                   const ExtensionFamily& fam, int k) {
    int n = fam.n;
    PolyVectorField v;
    v.comps = fam.comps;
    PolyVectorField lie = field_bracket(u_embedded, v);
    ExtensionFamily deriv = family_derivative_along(u_embedded, fam);
    ExtensionFamily sum;
    sum.n = n;
    sum.comps.reserve(n);
    for (int i = 0; i < n; ++i)
        sum.comps.push_back(lie.comps[i] + deriv.comps[i]);
    // Although each summand alone has a nonzero value at the base point, the
    // sum vanishes there; jet_of_family asserts this.
    return jet_of_family(sum, k);
}

JetField mixed_bracket(const PolyVectorField& u_embedded, const JetField& vert, int k) {
    return mixed_bracket_with_family(u_embedded, canonical_extension(vert), k);
}

// Pointwise bracket of two vertical sections.
JetField vertical_bracket(const JetField& a, const JetField& b, int k) {
    ExtensionFamily fa = canonical_extension(a);
    ExtensionFamily fb = canonical_extension(b);
    PolyVectorField va, vb;
    va.comps = fa.comps;
    vb.comps = fb.comps;
    PolyVectorField w = field_bracket(va, vb);
    ExtensionFamily fw;
    fw.n = a.n();
    fw.comps = w.comps;
    return jet_of_family(fw, k);
}

void check_degree_cap(const JetField& t, const JetOptions& opts) {
    for (const auto& [key, c] : t.coeffs())
        if (c.degree() > opts.max_coeff_degree)
            throw degree_cap_exceeded("jet coefficient degree " + std::to_string(c.degree()) +
                                      " exceeds cap " + std::to_string(opts.max_coeff_degree));
}

} // namespace

JetField bracket_jet(const JetField& a, const JetField& b, const JetOptions& opts) {
    if (a.n() != b.n() || a.order() != b.order())
        throw std::invalid_argument("bracket_jet: shape mismatch");
    int k = a.order();
    auto [ja, va] = decompose(a);
    auto [jb, vb] = decompose(b);
    PolyVectorField ua = anchor(a), ub = anchor(b);

    JetField result = jet_prolong(field_bracket(ua, ub), k);
    result = result + mixed_bracket(ua, vb, k);
    result = result - mixed_bracket(ub, va, k);
    result = result + vertical_bracket(va, vb, k);
    check_degree_cap(result, opts);
    return result;
}

bool extension_independence_check(const JetField& t, const ExtensionFamily& fam1,
                                  const ExtensionFamily& fam2, const PolyVectorField& u,
                                  const JetOptions& opts) {
    int n = t.n(), k = t.order();
    if (fam1.n != n || fam2.n != n)
        throw std::invalid_argument("extension_independence_check: dimension mismatch");
    if (!fam1.vanishes_at_base() || !fam2.vanishes_at_base())
        throw std::invalid_argument("extension_independence_check: family does not vanish at the base point");
    JetField vert = decompose(t).second;
    if (jet_of_family(fam1, k) != vert || jet_of_family(fam2, k) != vert)
        throw std::invalid_argument("extension_independence_check: family does not represent the section");
    PolyVectorField ue = embed_field(u, n);
    JetField r1 = mixed_bracket_with_family(ue, fam1, k);
    JetField r2 = mixed_bracket_with_family(ue, fam2, k);
    check_degree_cap(r1, opts);
    check_degree_cap(r2, opts);
    return r1 == r2;
}

} // namespace spinobstruct::jetalg
