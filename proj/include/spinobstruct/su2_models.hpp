#pragma once

#include "spinobstruct/finite_group.hpp"
#include "spinobstruct/todd_coxeter.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace spinobstruct::groups {

/// Binary dihedral (dicyclic) group of order 4n, materialized by coset
/// enumeration from <a,b | a^(2n), b^2 a^-n, b^-1 a b a>.
FiniteGroup dicyclic_group(int n, long long max_cosets = kDefaultMaxCosets);

/// Binary octahedral group of order 48, from <s,t | (st)^2 s^-3, s^3 t^-4>.
FiniteGroup binary_octahedral(long long max_cosets = kDefaultMaxCosets);

/// The unique central involution of a group (its -1); throws when there is
/// none or more than one.
int unique_central_involution(const FiniteGroup& g);

/// One finite subgroup model of SU(2) with its designated central -1.
struct Su2Model {
    std::shared_ptr<const FiniteGroup> group;
    int minus_one = 0;
    std::string label;
};

/// The finite subgroups of SU(2) that contain -1: cyclic of even order,
/// binary dihedral, binary tetrahedral (SL(2,3)), binary octahedral and
/// binary icosahedral (SL(2,5)). When source_order is given, only models
/// whose order divides it are returned; any homomorphic image of a group of
/// that order inside SU(2) is isomorphic to a listed model, so the list is
/// complete for finite sources. Without a source order the family is capped.
std::vector<Su2Model> su2_finite_subgroup_models(std::optional<long long> source_order,
                                                 long long cyclic_cap = 24,
                                                 long long dicyclic_cap = 24,
                                                 long long max_cosets = kDefaultMaxCosets);

} // namespace spinobstruct::groups
