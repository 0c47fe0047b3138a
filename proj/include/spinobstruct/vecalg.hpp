#pragma once

#include "spinobstruct/polynomial.hpp"
#include "spinobstruct/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spinobstruct::vecalg {

// Multi-index (a1,...,an) of monomial exponents, all >= 0.
struct MultiIndex {
    Exponents exps;

    int order() const { return total_degree(exps); } // |alpha|
    int n() const { return static_cast<int>(exps.size()); }
    auto operator<=>(const MultiIndex&) const = default;
};

/// One basis vector field x^alpha d_i. Fields here vanish at the origin,
/// so |alpha| >= 1; the Euler grading degree is |alpha| - 1.
struct VecMonomial {
    MultiIndex alpha;
    int dir = 1; // 1-based direction index

    int euler_degree() const { return alpha.order() - 1; }
    int n() const { return alpha.n(); }

    // Canonical term order: lexicographic on (direction, multi-index).
    std::strong_ordering operator<=>(const VecMonomial& o) const {
        if (auto c = dir <=> o.dir; c != 0)
            return c;
        return alpha <=> o.alpha;
    }
    bool operator==(const VecMonomial&) const = default;
};

/// Sparse rational linear combination of VecMonomials, all sharing one
/// ambient dimension. Zero coefficients are never stored, so map equality
/// is structural equality.
class VecElem {
public:
    VecElem() : n_(0) {}
    explicit VecElem(int n) : n_(n) {}

    static VecElem monomial(int n, const Exponents& alpha, int dir, const Rat& c = 1);
    static VecElem euler(int n); // E = sum_i x_i d_i

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<VecMonomial, Rat>& terms() const { return terms_; }

    void add_term(const VecMonomial& m, const Rat& c);

    VecElem operator-() const;
    VecElem operator+(const VecElem& o) const;
    VecElem operator-(const VecElem& o) const;
    VecElem operator*(const Rat& c) const;
    VecElem& operator+=(const VecElem& o);

    bool operator==(const VecElem& o) const = default;

    /// Drop all terms of euler degree > K.
    VecElem truncated(int K) const;

    int max_degree() const; // -1 if zero

private:
    int n_;
    std::map<VecMonomial, Rat> terms_;
};

/// Lie bracket on the monomial basis:
///   [x^a d_i, x^b d_j] = b_i x^(a+b-e_i) d_j - a_j x^(a+b-e_j) d_i,
/// extended bilinearly. Terms with b_i = 0 (resp. a_j = 0) drop out, so no
/// negative exponent can arise.
VecElem bracket(const VecElem& a, const VecElem& b);

/// Bracket followed by truncation to euler degrees <= K (the quotient
/// algebra by the ideal of degrees > K).
VecElem bracket_trunc(const VecElem& a, const VecElem& b, int K);

int euler_degree(const VecMonomial& m);

/// Split into homogeneous components keyed by euler degree.
std::map<int, VecElem> grade_decompose(const VecElem& v);

// ---- graded linear algebra ----------------------------------------------

/// All basis monomials of the given euler degree, in canonical order.
std::vector<VecMonomial> degree_basis(int n, int degree);

/// Per-degree reduced-echelon bases of a graded subspace of the truncated
/// algebra. Basis vectors are homogeneous.
class GradedSubspace {
public:
    GradedSubspace() = default;
    GradedSubspace(int n, int K) : n_(n), K_(K) {}

    int n() const { return n_; }
    int K() const { return K_; }

    /// Reduce a homogeneous element against the stored basis and insert the
    /// remainder if nonzero. Returns true when the dimension grew.
    bool insert(const VecElem& v);

    /// Insert a general element (grade-decomposed first). Returns true when
    /// any component grew the space.
    bool insert_general(const VecElem& v);

    bool contains(const VecElem& v) const;
    int dimension(int degree) const;
    std::map<int, int> dimensions() const;
    const std::vector<VecElem>& basis(int degree) const;
    std::vector<VecElem> full_basis() const;

private:
    int n_ = 0;
    int K_ = 0;
    // degree -> rows in reduced echelon form over the degree_basis coordinates
    std::map<int, std::vector<std::map<VecMonomial, Rat>>> rows_;
    static const std::vector<VecElem> empty_;
    mutable std::map<int, std::vector<VecElem>> basis_cache_;

    std::map<VecMonomial, Rat> reduce(std::map<VecMonomial, Rat> row, int degree) const;
};

/// Smallest graded subspace containing the generators and closed under
/// bracketing with every basis monomial of the truncated algebra.
GradedSubspace graded_ideal_closure(const std::vector<VecElem>& generators, int n, int K);

/// Exhaustively enumerate the subsets S of {0..K} whose graded span is an
/// ideal of truncated Vec_1. Each graded piece of Vec_1 is one-dimensional,
/// so this reduces to: a in S, b in {0..K}, b != a, a+b <= K => a+b in S.
/// Requires 3 <= K <= max_K (default 20, a 2^21 subset cap).
std::vector<std::set<int>> enumerate_graded_ideals_vec1(int K, int max_K = 20);

struct SlSpanReport {
    std::map<int, int> expected_dims;
    std::map<int, int> computed_dims;
    bool pass = false;
};

/// Span of all brackets [m, s] with m a truncated basis monomial and s an
/// sl_n basis element; passes iff the degree-0 span has dimension n^2 - 1
/// (sl_n, the Euler direction excluded) and each degree 1..K is full.
SlSpanReport sl_span_check(int n, int K);

std::vector<VecElem> sl_basis(int n);

// ---- divergence and the 1-cocycle ----------------------------------------

/// Polynomial vector field on R^n: components in variables x1..xn.
struct PolyVectorField {
    std::vector<Polynomial> comps; // size n, each with nvars >= n

    int n() const { return static_cast<int>(comps.size()); }
    static PolyVectorField zero(int n, int nvars);
    bool operator==(const PolyVectorField&) const = default;
};

PolyVectorField to_poly_field(const VecElem& v);

PolyVectorField field_add(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField field_scale(const PolyVectorField& a, const Rat& c);

/// [u,v]^i = sum_j (u^j d_j v^i - v^j d_j u^i); derivatives taken in the
/// first n variables only, so extra parameter variables pass through.
PolyVectorField field_bracket(const PolyVectorField& u, const PolyVectorField& v);

/// Lie derivative of a function along a field: v(f) = sum_i v^i d_i f.
Polynomial lie_derivative(const PolyVectorField& v, const Polynomial& f);

/// Divergence w.r.t. the standard volume form: Div(v) = sum_i d_i v^i.
Polynomial divergence(const PolyVectorField& v);
Polynomial divergence(const VecElem& v);

/// Divergence w.r.t. the density e^h mu: Div(v) + v(h).
Polynomial divergence_weighted(const PolyVectorField& v, const Polynomial& h);

/// A polynomial 1-form sum_i omega_i dx_i.
struct OneForm {
    std::vector<Polynomial> comps;

    int n() const { return static_cast<int>(comps.size()); }
    static OneForm zero(int n, int nvars);
    static OneForm dx(int n, int nvars, int i); // constant form dx_i
    bool is_closed() const;                     // d_i w_j == d_j w_i for all i<j
    Polynomial apply(const PolyVectorField& v) const;
};

struct CocycleReport {
    bool omega_closed = false;
    bool pass = false;
    int first_failure = -1;      // index into samples, -1 if none
    Polynomial residual;         // the nonzero defect for the first failure
};

/// Checks L_v f(w) - L_w f(v) - f([v,w]) = 0 exactly for
/// f(v) = omega(v) + lambda * Div(v) on every sample pair. A non-closed
/// omega is rejected before any pair is checked.
CocycleReport cocycle_check(const OneForm& omega, const Rat& lambda,
                            const std::vector<std::pair<PolyVectorField, PolyVectorField>>& samples);

// ---- textual syntax -------------------------------------------------------

/// Canonical form: terms sorted by (direction, multi-index), e.g.
/// "3*x1^2*x2 d1 - 1/2*x2 d2". Round-trips bit-exactly.
std::string to_string(const VecElem& v);
VecElem parse_vec_elem(const std::string& text, int n);

} // namespace spinobstruct::vecalg
