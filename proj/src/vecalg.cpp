#include "spinobstruct/vecalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spinobstruct::vecalg {

VecElem VecElem::monomial(int n, const Exponents& alpha, int dir, const Rat& c) {
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("VecElem::monomial: alpha length != n");
    if (dir < 1 || dir > n)
        throw std::invalid_argument("VecElem::monomial: direction out of range");
    if (total_degree(alpha) < 1)
        throw std::invalid_argument("VecElem::monomial: |alpha| must be >= 1");
    VecElem v(n);
    v.add_term(VecMonomial{MultiIndex{alpha}, dir}, c);
    return v;
}

VecElem VecElem::euler(int n) {
    VecElem e(n);
    for (int i = 1; i <= n; ++i) {
        Exponents a(n, 0);
        a[i - 1] = 1;
        e.add_term(VecMonomial{MultiIndex{a}, i}, 1);
    }
    return e;
}

void VecElem::add_term(const VecMonomial& m, const Rat& c) {
    if (m.n() != n_)
        throw std::invalid_argument("VecElem::add_term: dimension mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

VecElem VecElem::operator-() const {
    VecElem r(n_);
    for (const auto& [m, c] : terms_)
        r.terms_[m] = -c;
    return r;
}

VecElem VecElem::operator+(const VecElem& o) const {
    VecElem r = *this;
    r += o;
    return r;
}

VecElem VecElem::operator-(const VecElem& o) const {
    VecElem r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

VecElem& VecElem::operator+=(const VecElem& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("VecElem: dimension mismatch");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

VecElem VecElem::operator*(const Rat& c) const {
    VecElem r(n_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_[m] = k * c;
    return r;
}

VecElem VecElem::truncated(int K) const {
    VecElem r(n_);
    for (const auto& [m, c] : terms_)
        if (m.euler_degree() <= K)
            r.terms_[m] = c;
    return r;
}

int VecElem::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.euler_degree());
    return d;
}

int euler_degree(const VecMonomial& m) {
    return m.euler_degree();
}

VecElem bracket(const VecElem& a, const VecElem& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("bracket: dimension mismatch");
    int n = a.n();
    VecElem r(n);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Rat c = ca * cb;
            int i = ma.dir, j = mb.dir;
            const Exponents& al = ma.alpha.exps;
            const Exponents& be = mb.alpha.exps;
            // b_i * x^(a+b-e_i) d_j
            if (be[i - 1] > 0) {
                Exponents e(n);
                for (int k = 0; k < n; ++k)
                    e[k] = al[k] + be[k];
                e[i - 1] -= 1;
                r.add_term(VecMonomial{MultiIndex{e}, j}, c * be[i - 1]);
            }
            // - a_j * x^(a+b-e_j) d_i
            if (al[j - 1] > 0) {
                Exponents e(n);
                for (int k = 0; k < n; ++k)
                    e[k] = al[k] + be[k];
                e[j - 1] -= 1;
                r.add_term(VecMonomial{MultiIndex{e}, i}, -c * al[j - 1]);
            }
        }
    }
    return r;
}

VecElem bracket_trunc(const VecElem& a, const VecElem& b, int K) {
    return bracket(a, b).truncated(K);
}

std::map<int, VecElem> grade_decompose(const VecElem& v) {
    std::map<int, VecElem> out;
    for (const auto& [m, c] : v.terms()) {
        auto it = out.find(m.euler_degree());
        if (it == out.end())
            it = out.emplace(m.euler_degree(), VecElem(v.n())).first;
        it->second.add_term(m, c);
    }
    return out;
}

namespace {

void fill_multi_indices(int n, int order, int pos, Exponents& cur, std::vector<Exponents>& out) {
    if (pos == n - 1) {
        cur[pos] = order;
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= order; ++k) {
        cur[pos] = k;
        fill_multi_indices(n, order - k, pos + 1, cur, out);
    }
}

std::vector<Exponents> multi_indices(int n, int order) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    fill_multi_indices(n, order, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<VecMonomial> degree_basis(int n, int degree) {
    std::vector<VecMonomial> out;
    for (int dir = 1; dir <= n; ++dir)
        for (const auto& a : multi_indices(n, degree + 1))
            out.push_back(VecMonomial{MultiIndex{a}, dir});
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<VecElem> GradedSubspace::empty_{};

std::map<VecMonomial, Rat> GradedSubspace::reduce(std::map<VecMonomial, Rat> row, int degree) const {
    auto it = rows_.find(degree);
    if (it == rows_.end())
        return row;
    for (const auto& basis_row : it->second) {
        if (row.empty())
            break;
        const VecMonomial& lead = basis_row.begin()->first;
        auto hit = row.find(lead);
        if (hit == row.end())
            continue;
        Rat factor = hit->second; // basis rows are monic in their lead
        for (const auto& [m, c] : basis_row) {
            auto rit = row.find(m);
            Rat nv = (rit == row.end() ? Rat(0) : rit->second) - factor * c;
            if (nv == 0) {
                if (rit != row.end())
                    row.erase(rit);
            } else {
                row[m] = nv;
            }
        }
    }
    return row;
}

bool GradedSubspace::insert(const VecElem& v) {
    if (v.is_zero())
        return false;
    auto graded = grade_decompose(v);
    if (graded.size() != 1)
        throw std::invalid_argument("GradedSubspace::insert: element not homogeneous");
    int degree = graded.begin()->first;
    std::map<VecMonomial, Rat> row(v.terms().begin(), v.terms().end());
    row = reduce(std::move(row), degree);
    if (row.empty())
        return false;
    // Normalize to a monic lead and back-substitute into existing rows.
    Rat lead = row.begin()->second;
    for (auto& [m, c] : row)
        c /= lead;
    auto& rows = rows_[degree];
    for (auto& basis_row : rows) {
        auto hit = basis_row.find(row.begin()->first);
        if (hit == basis_row.end())
            continue;
        Rat factor = hit->second;
        for (const auto& [m, c] : row) {
            auto rit = basis_row.find(m);
            Rat nv = (rit == basis_row.end() ? Rat(0) : rit->second) - factor * c;
            if (nv == 0) {
                if (rit != basis_row.end())
                    basis_row.erase(rit);
            } else {
                basis_row[m] = nv;
            }
        }
    }
    rows.push_back(std::move(row));
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
    basis_cache_.erase(degree);
    return true;
}

bool GradedSubspace::insert_general(const VecElem& v) {
    bool grew = false;
    for (const auto& [d, comp] : grade_decompose(v))
        grew |= insert(comp);
    return grew;
}

bool GradedSubspace::contains(const VecElem& v) const {
    for (const auto& [d, comp] : grade_decompose(v)) {
        std::map<VecMonomial, Rat> row(comp.terms().begin(), comp.terms().end());
        if (!reduce(std::move(row), d).empty())
            return false;
    }
    return true;
}

int GradedSubspace::dimension(int degree) const {
    auto it = rows_.find(degree);
    return it == rows_.end() ? 0 : static_cast<int>(it->second.size());
}

std::map<int, int> GradedSubspace::dimensions() const {
    std::map<int, int> out;
    for (const auto& [d, rows] : rows_)
        if (!rows.empty())
            out[d] = static_cast<int>(rows.size());
    return out;
}

const std::vector<VecElem>& GradedSubspace::basis(int degree) const {
    auto cit = basis_cache_.find(degree);
    if (cit != basis_cache_.end())
        return cit->second;
    auto it = rows_.find(degree);
    if (it == rows_.end())
        return empty_;
    std::vector<VecElem> out;
    for (const auto& row : it->second) {
        VecElem v(n_);
        for (const auto& [m, c] : row)
            v.add_term(m, c);
        out.push_back(std::move(v));
    }
    return basis_cache_.emplace(degree, std::move(out)).first->second;
}

std::vector<VecElem> GradedSubspace::full_basis() const {
    std::vector<VecElem> out;
    for (const auto& [d, rows] : rows_) {
        const auto& b = basis(d);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

GradedSubspace graded_ideal_closure(const std::vector<VecElem>& generators, int n, int K) {
    GradedSubspace space(n, K);
    for (const auto& g : generators) {
        if (g.n() != n)
            throw std::invalid_argument("graded_ideal_closure: generator dimension mismatch");
        if (g.max_degree() > K)
            throw std::invalid_argument("graded_ideal_closure: generator exceeds truncation");
        space.insert_general(g);
    }
    std::vector<VecMonomial> all_monomials;
    for (int d = 0; d <= K; ++d) {
        auto b = degree_basis(n, d);
        all_monomials.insert(all_monomials.end(), b.begin(), b.end());
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& mono : all_monomials) {
            VecElem m(n);
            m.add_term(mono, 1);
            int dm = mono.euler_degree();
            for (int d = 0; d + dm <= K; ++d) {
                // basis() returns a stable snapshot; copy since insert mutates.
                std::vector<VecElem> snapshot = space.basis(d);
                for (const auto& v : snapshot)
                    grew |= space.insert_general(bracket_trunc(m, v, K));
            }
        }
    }
    return space;
}

std::vector<std::set<int>> enumerate_graded_ideals_vec1(int K, int max_K) {
    if (K < 3)
        throw std::invalid_argument("enumerate_graded_ideals_vec1: K must be >= 3");
    if (K > max_K)
        throw std::invalid_argument("enumerate_graded_ideals_vec1: K exceeds the exhaustive-enumeration cap");
    std::vector<std::set<int>> out;
    const unsigned long long total = 1ull << (K + 1);
    for (unsigned long long mask = 0; mask < total; ++mask) {
        bool ideal = true;
        for (int a = 0; a <= K && ideal; ++a) {
            if (!(mask >> a & 1))
                continue;
            for (int b = 0; b <= K; ++b) {
                if (b == a || a + b > K)
                    continue;
                if (!(mask >> (a + b) & 1)) {
                    ideal = false;
                    break;
                }
            }
        }
        if (ideal) {
            std::set<int> s;
            for (int d = 0; d <= K; ++d)
                if (mask >> d & 1)
                    s.insert(d);
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VecElem> sl_basis(int n) {
    std::vector<VecElem> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            Exponents a(n, 0);
            a[i - 1] = 1;
            out.push_back(VecElem::monomial(n, a, j));
        }
    }
    for (int i = 1; i < n; ++i) {
        Exponents a(n, 0), b(n, 0);
        a[i - 1] = 1;
        b[i] = 1;
        VecElem h = VecElem::monomial(n, a, i) - VecElem::monomial(n, b, i + 1);
        out.push_back(h);
    }
    return out;
}

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

SlSpanReport sl_span_check(int n, int K) {
    if (n < 2 || K < 1)
        throw std::invalid_argument("sl_span_check: need n >= 2 and K >= 1");
    SlSpanReport rep;
    rep.expected_dims[0] = n * n - 1;
    for (int d = 1; d <= K; ++d)
        rep.expected_dims[d] = static_cast<int>(n * binom(d + n, n - 1));

    GradedSubspace span(n, K);
    auto sl = sl_basis(n);
    for (int d = 0; d <= K; ++d) {
        for (const auto& mono : degree_basis(n, d)) {
            VecElem m(n);
            m.add_term(mono, 1);
            for (const auto& s : sl)
                span.insert_general(bracket_trunc(m, s, K));
        }
    }
    for (int d = 0; d <= K; ++d)
        rep.computed_dims[d] = span.dimension(d);
    rep.pass = rep.computed_dims == rep.expected_dims;
    return rep;
}

// ---- divergence / cocycle --------------------------------------------------

PolyVectorField PolyVectorField::zero(int n, int nvars) {
    PolyVectorField f;
    f.comps.assign(n, Polynomial(nvars));
    return f;
}

PolyVectorField to_poly_field(const VecElem& v) {
    int n = v.n();
    PolyVectorField f = PolyVectorField::zero(n, n);
    for (const auto& [m, c] : v.terms())
        f.comps[m.dir - 1].add_term(m.alpha.exps, c);
    return f;
}

PolyVectorField field_add(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("field_add: dimension mismatch");
    PolyVectorField r = a;
    for (int i = 0; i < a.n(); ++i)
        r.comps[i] += b.comps[i];
    return r;
}

PolyVectorField field_scale(const PolyVectorField& a, const Rat& c) {
    PolyVectorField r = a;
    for (auto& p : r.comps)
        p = p * c;
    return r;
}

PolyVectorField field_bracket(const PolyVectorField& u, const PolyVectorField& v) {
    if (u.n() != v.n())
        throw std::invalid_argument("field_bracket: dimension mismatch");
    int n = u.n();
    PolyVectorField r;
    r.comps.reserve(n);
    for (int i = 0; i < n; ++i) {
        Polynomial c(u.comps[i].nvars());
        for (int j = 0; j < n; ++j) {
            c += u.comps[j] * v.comps[i].derivative(j);
            c -= v.comps[j] * u.comps[i].derivative(j);
        }
        r.comps.push_back(std::move(c));
    }
    return r;
}

Polynomial lie_derivative(const PolyVectorField& v, const Polynomial& f) {
    Polynomial r(f.nvars());
    for (int i = 0; i < v.n(); ++i)
        r += v.comps[i] * f.derivative(i);
    return r;
}

Polynomial divergence(const PolyVectorField& v) {
    if (v.n() == 0)
        return Polynomial(0);
    Polynomial r(v.comps[0].nvars());
    for (int i = 0; i < v.n(); ++i)
        r += v.comps[i].derivative(i);
    return r;
}

Polynomial divergence(const VecElem& v) {
    return divergence(to_poly_field(v));
}

Polynomial divergence_weighted(const PolyVectorField& v, const Polynomial& h) {
    return divergence(v) + lie_derivative(v, h);
}

OneForm OneForm::zero(int n, int nvars) {
    OneForm w;
    w.comps.assign(n, Polynomial(nvars));
    return w;
}

OneForm OneForm::dx(int n, int nvars, int i) {
    OneForm w = zero(n, nvars);
    w.comps.at(i - 1) = Polynomial(nvars, Rat(1));
    return w;
}

bool OneForm::is_closed() const {
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (!(comps[j].derivative(i) == comps[i].derivative(j)))
                return false;
    return true;
}

Polynomial OneForm::apply(const PolyVectorField& v) const {
    if (v.n() != n())
        throw std::invalid_argument("OneForm::apply: dimension mismatch");
    Polynomial r(comps.empty() ? 0 : comps[0].nvars());
    for (int i = 0; i < n(); ++i)
        r += comps[i] * v.comps[i];
    return r;
}

CocycleReport cocycle_check(const OneForm& omega, const Rat& lambda,
                            const std::vector<std::pair<PolyVectorField, PolyVectorField>>& samples) {
    CocycleReport rep;
    rep.omega_closed = omega.is_closed();
    if (!rep.omega_closed) {
        rep.pass = false;
        return rep;
    }
    auto f1 = [&](const PolyVectorField& v) {
        return omega.apply(v) + divergence(v) * lambda;
    };
    rep.pass = true;
    for (size_t k = 0; k < samples.size(); ++k) {
        const auto& [v, w] = samples[k];
        Polynomial defect = lie_derivative(v, f1(w)) - lie_derivative(w, f1(v)) - f1(field_bracket(v, w));
        if (!defect.is_zero()) {
            rep.pass = false;
            rep.first_failure = static_cast<int>(k);
            rep.residual = defect;
            return rep;
        }
    }
    return rep;
}

// ---- textual syntax --------------------------------------------------------

std::string to_string(const VecElem& v) {
    if (v.is_zero())
        return "0";
    VarTable vars = VarTable::x_vars(v.n());
    std::string out;
    bool first = true;
    // Directions ascending, exponents descending within a direction.
    std::vector<std::pair<VecMonomial, Rat>> terms(v.terms().begin(), v.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.dir != b.first.dir)
            return a.first.dir < b.first.dir;
        return b.first.alpha < a.first.alpha;
    });
    for (const auto& [m, c] : terms) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        std::string mono;
        for (int i = 0; i < v.n(); ++i) {
            int e = m.alpha.exps[i];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars.names[i];
            if (e != 1)
                mono += "^" + std::to_string(e);
        }
        if (a != 1)
            out += spinobstruct::to_string(a) + "*";
        out += mono;
        out += " d" + std::to_string(m.dir);
        first = false;
    }
    return out;
}

VecElem parse_vec_elem(const std::string& text, int n) {
    VecElem v(n);
    std::string trimmed;
    for (char ch : text)
        trimmed += ch;
    // Split into signed summands on top-level +/- (no parentheses in this grammar).
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[pos])))
            ++pos;
    };
    skip_ws();
    if (pos >= trimmed.size())
        return v;
    if (trimmed.compare(pos, 1, "0") == 0 && pos + 1 >= trimmed.size())
        return v;
    VarTable vars = VarTable::x_vars(n);
    int sign = 1;
    if (trimmed[pos] == '-') {
        sign = -1;
        ++pos;
    } else if (trimmed[pos] == '+') {
        ++pos;
    }
    while (true) {
        skip_ws();
        // A term ends at " d<k>"; find the direction marker.
        size_t dpos = std::string::npos;
        for (size_t i = pos; i + 1 < trimmed.size(); ++i) {
            if (trimmed[i] == 'd' && std::isdigit(static_cast<unsigned char>(trimmed[i + 1]))) {
                // Must not be part of a variable name: preceded by ws or start.
                if (i == pos || std::isspace(static_cast<unsigned char>(trimmed[i - 1])) || trimmed[i - 1] == '*') {
                    dpos = i;
                    break;
                }
            }
        }
        if (dpos == std::string::npos)
            throw parse_error("missing direction marker 'd<i>' in '" + text + "'");
        std::string coeff_mono = trimmed.substr(pos, dpos - pos);
        size_t q = dpos + 1;
        int dir = 0;
        while (q < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[q]))) {
            dir = dir * 10 + (trimmed[q] - '0');
            ++q;
        }
        if (dir < 1 || dir > n)
            throw parse_error("direction out of range in '" + text + "'");
        // Parse the coefficient-monomial part as a polynomial; it must be a
        // single monomial.
        Polynomial p = coeff_mono.find_first_not_of(" \t") == std::string::npos
                           ? Polynomial(n, Rat(1))
                           : parse_polynomial(coeff_mono, vars);
        for (const auto& [e, c] : p.terms()) {
            if (total_degree(e) < 1)
                throw parse_error("vector-field monomial must have |alpha| >= 1 in '" + text + "'");
            v.add_term(VecMonomial{MultiIndex{e}, dir}, sign < 0 ? -c : c);
        }
        pos = q;
        skip_ws();
        if (pos >= trimmed.size())
            break;
        if (trimmed[pos] == '+') {
            sign = 1;
            ++pos;
        } else if (trimmed[pos] == '-') {
            sign = -1;
            ++pos;
        } else {
            throw parse_error("unexpected character after term in '" + text + "'");
        }
    }
    return v;
}

} // namespace spinobstruct::vecalg
