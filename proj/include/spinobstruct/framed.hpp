#pragma once

#include "spinobstruct/finite_group.hpp"
#include "spinobstruct/hom_search.hpp"
#include "spinobstruct/presentation.hpp"
#include "spinobstruct/snf.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spinobstruct::groups {

/// Free rank, invariant factors (each >= 2, dividing chain) and the image
/// coordinates of a designated element in the cokernel presentation
/// free-part-last: torsion coordinate i is reduced mod factors[i].
struct AbelianInvariants {
    int free_rank = 0;
    std::vector<Int> factors;
    std::vector<Int> z_torsion; // one coordinate per factor, 0 <= c < factor
    std::vector<Int> z_free;    // one coordinate per free rank

    bool z_is_trivial() const;
};

/// Abelianization of a presented group as the cokernel of the relator
/// exponent matrix, computed by Smith normal form, together with the image
/// of the word z.
AbelianInvariants abelianization(const Presentation& p, const Word& z);

/// Full cokernel data: the row transform u maps generator exponent vectors
/// into cokernel coordinates; diag holds the full diagonal (1s included).
struct AbelianizationData {
    AbelianInvariants invariants;
    IntMatrix u;
    std::vector<Int> diag; // length = generator count; 0 past the rank
    int rank = 0;          // number of nonzero diagonal entries
};
AbelianizationData abelianization_data(const Presentation& p, const Word& z);

/// Obstruction-theoretic fingerprint of a manifold: a model of the
/// fundamental group of the oriented frame bundle, the designated central
/// fiber-loop class z of order <= 2, and whether the fiber loop is
/// non-contractible in the total space.
struct FramedGroup {
    std::variant<Presentation, FiniteGroup> group;
    std::variant<Word, int> z; // word (presented) or element index (finite)
    bool i_star_injective = true;
    std::string label;

    bool is_finite() const { return std::holds_alternative<FiniteGroup>(group); }
    const FiniteGroup& finite() const { return std::get<FiniteGroup>(group); }
    const Presentation& presented() const { return std::get<Presentation>(group); }
    const Word& z_word() const { return std::get<Word>(z); }
    int z_index() const { return std::get<int>(z); }

    /// Enforce the invariants: z central of order <= 2 for finite models;
    /// z^2 trivial in the abelianization for presented ones (centrality of a
    /// presented z is a trusted input). Throws on violation.
    void validate() const;
};

FramedGroup make_framed(FiniteGroup g, int z, bool i_star_injective, std::string label);
FramedGroup make_framed(Presentation p, Word z, bool i_star_injective, std::string label);

/// Circle-class criterion: a character to the circle separates z exactly
/// when z survives in the abelianization (z^2 = 1 forces its value to -1).
/// Requires the fiber loop to be non-contractible; returns false otherwise.
bool spinc_exists(const FramedGroup& f);

/// Splitting criterion: a retraction onto Z/2 sending z to the nontrivial
/// element; solved linearly over F_2 for presented groups, and via the
/// square-commutator subgroup for finite ones.
bool spin_exists(const FramedGroup& f);

/// Number of homomorphisms to Z/2 with z nontrivial (0 when none exists).
Int count_spin_structures(const FramedGroup& f);

// ---- F2 linear algebra helpers ----------------------------------------------

using F2Matrix = std::vector<std::vector<int>>; // entries 0/1

int f2_rank(F2Matrix m);
/// Solve M x = 0 with c . x = 1; returns a solution or nullopt.
std::optional<std::vector<int>> f2_solve_affine(const F2Matrix& m, const std::vector<int>& c);

} // namespace spinobstruct::groups
