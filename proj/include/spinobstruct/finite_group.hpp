#pragma once

#include "spinobstruct/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinobstruct::groups {

/// A fully materialized finite group: an N x N multiplication table over
/// element indices, with the identity's index, display labels and an
/// optional generating subset. Tables built by the library's constructors
/// are groups by construction; tables loaded from files are verified
/// (identity and inverses exhaustively, associativity spot-checked, plus
/// full associativity for small orders).
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::vector<std::vector<int>> table, int identity,
                std::vector<std::string> labels, std::vector<int> generators = {});

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int power(int a, long long e) const;
    int conjugate(int a, int by) const { return mul(mul(by, a), inverse(by)); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<int>& generators() const { return generators_; }

    int element_order(int a) const;
    bool is_central(int a) const;
    std::vector<int> center() const;
    std::vector<int> central_involutions() const;

    /// Evaluate a word under an assignment of target elements to the word's
    /// generator indices (1-based).
    int evaluate_word(const Word& w, const std::vector<int>& images) const;

    /// Subgroup generated by the given elements (sorted element list).
    std::vector<int> subgroup_closure(std::vector<int> gens) const;
    std::vector<int> commutator_subgroup() const;
    /// Subgroup generated by all squares and commutators; the quotient by it
    /// is the largest elementary abelian 2-quotient.
    std::vector<int> square_commutator_subgroup() const;

    /// A deterministic small generating set (stored one if present, else
    /// greedy in index order).
    std::vector<int> generating_set() const;

    /// Verify the table invariants; throws std::invalid_argument on failure.
    /// full_associativity forces the O(N^3) check regardless of order.
    void verify(bool full_associativity = false) const;

private:
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> generators_;
    std::vector<int> inverse_;

    void compute_inverses();
};

// ---- constructors ----------------------------------------------------------

FiniteGroup cyclic_group(int order);
FiniteGroup klein_four();

/// SL(2,p) for prime p as explicit matrices over the p-element field.
/// Exact arithmetic, no quaternion irrationalities; for p = 3 this is the
/// binary tetrahedral group, for p = 5 the binary icosahedral group.
FiniteGroup sl2p(int p);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Quotient by a central subgroup (given as element indices). Throws if the
/// set is not a central subgroup. Coset labels are canonical: each coset is
/// named after its minimal element.
FiniteGroup central_quotient(const FiniteGroup& g, const std::vector<int>& subgroup);

/// Quotient by an arbitrary normal subgroup (verified normal and closed).
FiniteGroup quotient_by_normal(const FiniteGroup& g, const std::vector<int>& subgroup);

/// Coset index map for quotient_by_normal: element -> quotient index.
std::vector<int> quotient_coset_map(const FiniteGroup& g, const std::vector<int>& subgroup);

/// Index of the element (a, b) in direct_product(A, B).
int product_index(const FiniteGroup& b, int ia, int ib);

// ---- JSON interchange ------------------------------------------------------

/// Serialized as {"order": N, "table": [[...]], "labels": [...],
/// "identity": i, "generators": [...]} (labels/generators optional on load).
std::string finite_group_to_json(const FiniteGroup& g);
FiniteGroup finite_group_from_json(const std::string& text);

} // namespace spinobstruct::groups
