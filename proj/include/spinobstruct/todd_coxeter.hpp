#pragma once

#include "spinobstruct/finite_group.hpp"
#include "spinobstruct/presentation.hpp"

#include <stdexcept>

namespace spinobstruct::groups {

struct coset_limit_exceeded : std::runtime_error {
    explicit coset_limit_exceeded(long long cap)
        : std::runtime_error("coset enumeration exceeded the cap of " + std::to_string(cap) +
                             " cosets (group possibly infinite or bound too small)"),
          cap(cap) {}
    long long cap;
};

inline constexpr long long kDefaultMaxCosets = 1'000'000;

/// HLT-style coset enumeration over the trivial subgroup, deterministic
/// (cosets processed in definition order, relators in presentation order,
/// no lookahead). On completion the cosets are the group elements and the
/// returned FiniteGroup is the regular-representation multiplication table;
/// element labels are the defining words, coset 0 is the identity.
/// Throws coset_limit_exceeded when more than max_cosets cosets are defined.
FiniteGroup todd_coxeter(const Presentation& p, long long max_cosets = kDefaultMaxCosets);

} // namespace spinobstruct::groups
