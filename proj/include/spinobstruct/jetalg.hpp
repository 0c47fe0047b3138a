#pragma once

#include "spinobstruct/polynomial.hpp"
#include "spinobstruct/vecalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinobstruct::jetalg {

using spinobstruct::vecalg::PolyVectorField;

// All jetalg polynomials live in 2n variables: x1..xn (indices 0..n-1) and
// the base-point symbols m1..mn (indices n..2n-1).

struct degree_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JetOptions {
    int max_coeff_degree = 12; // guardrail on polynomial degree growth
};

/// Key of one vertical jet coordinate: exponent alpha (length n, |alpha|>=1)
/// and direction i in 1..n.
using JetKey = std::pair<Exponents, int>;

/// A section of the k-jet bundle of TM over R^n, in coordinates: at each base
/// point m it is the k-jet of the field
///     x |-> anchor(m) + sum_{1<=|alpha|<=k} c_{alpha,i}(m) (x-m)^alpha d_i.
/// The anchor is a global polynomial field in x; the c_{alpha,i} are
/// polynomials in m. A section of the anchor kernel has zero anchor.
class JetField {
public:
    JetField() = default;
    JetField(int n, int k) : n_(n), k_(k), anchor_(PolyVectorField::zero(n, 2 * n)) {}

    int n() const { return n_; }
    int order() const { return k_; }

    const PolyVectorField& anchor() const { return anchor_; }
    void set_anchor(const PolyVectorField& u);

    const std::map<JetKey, Polynomial>& coeffs() const { return coeffs_; }
    Polynomial coeff(const Exponents& alpha, int dir) const;
    void set_coeff(const Exponents& alpha, int dir, const Polynomial& c);

    bool is_vertical() const; // anchor identically zero

    JetField operator+(const JetField& o) const;
    JetField operator-(const JetField& o) const;
    JetField operator*(const Rat& c) const;

    bool operator==(const JetField& o) const = default;

private:
    int n_ = 0;
    int k_ = 0;
    PolyVectorField anchor_;              // components in x vars only
    std::map<JetKey, Polynomial> coeffs_; // values in m vars only
};

/// Lift a polynomial field in x1..xn into the 2n-variable space.
PolyVectorField embed_field(const PolyVectorField& u, int n);

/// j^k(u): anchor u together with the Taylor coefficients of u about the
/// base point, c_{alpha,i}(m) = (1/alpha!) d^alpha u^i(m) for 1<=|alpha|<=k.
JetField jet_prolong(const PolyVectorField& u, int k);

/// Canonical projection to the underlying vector field.
PolyVectorField anchor(const JetField& t);

/// A polynomial family m |-> v_m of vector fields, components polynomial in
/// (x, m), with v_m(m) = 0 as a polynomial identity.
struct ExtensionFamily {
    int n = 0;
    std::vector<Polynomial> comps; // 2n-variable components

    /// Check v_m(m) = 0 identically (substituting x := m kills every comp).
    bool vanishes_at_base() const;
};

/// The canonical polynomial extension of a vertical jet section:
/// v_m(x) = sum c_{alpha,i}(m) (x-m)^alpha d_i.
ExtensionFamily canonical_extension(const JetField& vertical);

/// The jet-coordinate extraction: Taylor coefficients of the family about
/// x = m, orders 1..k (the order-0 value must vanish and is asserted).
JetField jet_of_family(const ExtensionFamily& fam, int k);

/// Lie algebroid bracket on jet sections. Decomposes each argument as
/// prolongation-of-anchor plus vertical part and applies, case by case:
///   [j^k u, j^k u']   = j^k([u, u'])
///   [tau, tau']_m     = j^k_m([v_m, v'_m])                (pointwise)
///   [j^k u, tau]_m    = j^k_m([u, v_m]) + j^k_m(d_u|_m (x -> v_x))
/// extended bilinearly. Exact polynomial arithmetic throughout.
JetField bracket_jet(const JetField& a, const JetField& b, const JetOptions& opts = {});

/// Both families must represent t's vertical part (their k-jets agree with
/// it at every base point; rejected otherwise). Passes iff
/// j^k([u, v_m]) + j^k(d_u (x -> v_x)) is the same for both families.
bool extension_independence_check(const JetField& t, const ExtensionFamily& fam1,
                                  const ExtensionFamily& fam2, const PolyVectorField& u,
                                  const JetOptions& opts = {});

} // namespace spinobstruct::jetalg
