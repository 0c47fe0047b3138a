#pragma once

#include "spinobstruct/framed.hpp"
#include "spinobstruct/gauge.hpp"
#include "spinobstruct/su2_models.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spinobstruct::catalog {

using groups::FiniteGroup;
using groups::FramedGroup;
using groups::GaugeTargetHandle;

// ---- manifold fingerprints ---------------------------------------------------

struct GammaSpec {
    enum class Kind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };
    Kind kind = Kind::Cyclic;
    int param = 1; // p for Cyclic, n for BinaryDihedral

    std::string name() const;
};

struct ManifoldSpec {
    struct Torus { int n; };
    struct Sphere { int n; };
    struct CP2 {};
    struct LensSpace { int p; };
    struct SphericalSpaceForm { GammaSpec gamma; };
    struct DeSitterQuotient { GammaSpec gamma; };
    struct Explicit { FramedGroup framed; };

    std::variant<Torus, Sphere, CP2, LensSpace, SphericalSpaceForm, DeSitterQuotient, Explicit> spec;

    std::string name() const;
};

/// Materialize the finite group of a GammaSpec (left-acting subgroup of
/// SU(2)): cyclic by table, binary tetrahedral and icosahedral as SL(2,3)
/// and SL(2,5) matrix groups, binary dihedral and octahedral by coset
/// enumeration.
FiniteGroup gamma_group(const GammaSpec& gamma, long long max_cosets = groups::kDefaultMaxCosets);

/// The obstruction fingerprint of the manifold. For a quotient of S^3 (or
/// of de Sitter space) by a left-acting Gamma < SU(2)_l, the fundamental
/// group of the oriented frame bundle is the Spin(4)-preimage of Gamma,
/// which is Gamma x Z/2 under (eg, e) -> (g, e), with the fiber class z
/// landing on (1, -1).
FramedGroup build_framed(const ManifoldSpec& spec, long long max_cosets = groups::kDefaultMaxCosets);

// ---- gauge targets -----------------------------------------------------------

struct GaugeTargetSpec {
    enum class Kind { Circle, CyclicZ2m, Su2FiniteModels, Su2FiniteModelsTimesZ2, FiniteModel, Product, Sm, PatiSalam };
    Kind kind = Kind::Circle;
    long long m = 1;                            // CyclicZ2m
    std::shared_ptr<const FiniteGroup> model;   // FiniteModel
    int z_g = 0;                                // FiniteModel
    std::string label;                          // FiniteModel display

    /// Product factors, each a concrete atom with a flag saying whether it
    /// contributes its central involution to z_G.
    struct Factor {
        enum class Atom { Cyclic, BinaryDihedral, Sl2_3, BinaryOctahedral, Sl2_5, Z2 };
        Atom atom = Atom::Z2;
        int param = 2; // order for Cyclic, n for BinaryDihedral
        bool carries_z = false;
    };
    std::vector<Factor> factors;

    std::string name() const;
};

/// Build the decision-procedure handle exists_sping dispatches on.
GaugeTargetHandle build_target(const GaugeTargetSpec& spec,
                               long long max_cosets = groups::kDefaultMaxCosets);

/// The Pati-Salam stand-ins: (A x B x C)/N for small SU(2)-type models A, B
/// and cyclic C, with N generated by (-1,-1,-1) and the constraint class
/// z_G = [(-1,-1,1)].
groups::ModelListTarget pati_salam_models(long long max_cosets = groups::kDefaultMaxCosets);

// ---- listing -----------------------------------------------------------------

struct CatalogEntry {
    std::string tag;
    std::string kind; // "manifold" or "gauge"
    std::string note;
};

std::vector<CatalogEntry> catalog_entries();

} // namespace spinobstruct::catalog
