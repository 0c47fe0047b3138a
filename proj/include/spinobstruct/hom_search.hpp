#pragma once

#include "spinobstruct/finite_group.hpp"
#include "spinobstruct/presentation.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace spinobstruct::groups {

/// A homomorphism into a finite target, recorded by generator images (in
/// the order of the source's generator list).
struct Homomorphism {
    std::vector<int> images; // target element indices per source generator

    auto operator<=>(const Homomorphism&) const = default;
};

struct HomSearchOptions {
    bool up_to_target_conjugacy = false;
    long long limit = 0; // stop after this many (post-dedup) results; 0 = all
};

/// Constraint on the image of a designated element z.
struct ZConstraint {
    std::variant<Word, int> z; // word (presented source) or element index (table source)
    int required;              // target element index
};

/// All homomorphisms from a presented source into a finite target that kill
/// every relator and satisfy the optional z-constraint, in canonical
/// (lexicographically sorted image tuple) order. With conjugacy dedup, one
/// representative per target-conjugacy orbit, the lexicographically minimal
/// tuple.
std::vector<Homomorphism> enumerate_homs(const Presentation& source, const FiniteGroup& target,
                                         const std::optional<ZConstraint>& constraint = {},
                                         const HomSearchOptions& options = {});

/// Same, from a materialized source; the search runs over a generating set
/// and extends by incremental multiplicative closure (every product pair is
/// checked, so surviving assignments are genuine homomorphisms).
std::vector<Homomorphism> enumerate_homs(const FiniteGroup& source, const FiniteGroup& target,
                                         const std::optional<ZConstraint>& constraint = {},
                                         const HomSearchOptions& options = {});

/// The full map extended from generator images (table source); image of
/// every source element, or nullopt if the images do not define a
/// homomorphism.
std::optional<std::vector<int>> extend_hom(const FiniteGroup& source, const FiniteGroup& target,
                                           const std::vector<int>& source_gens,
                                           const std::vector<int>& images);

} // namespace spinobstruct::groups
