#include "spinobstruct/hom_search.hpp"

#include <algorithm>
#include <set>

namespace spinobstruct::groups {

namespace {

// Candidate images for a source generator of the given order: target
// elements whose order divides it, in table order.
std::vector<int> candidates_by_order(const FiniteGroup& target, int source_order) {
    std::vector<int> out;
    for (int x = 0; x < target.order(); ++x)
        if (source_order % target.element_order(x) == 0)
            out.push_back(x);
    return out;
}

std::vector<Homomorphism> dedup_by_conjugacy(std::vector<Homomorphism> homs,
                                             const FiniteGroup& target) {
    std::set<std::vector<int>> minimal;
    for (const auto& h : homs) {
        std::vector<int> best = h.images;
        for (int c = 0; c < target.order(); ++c) {
            std::vector<int> conj;
            conj.reserve(h.images.size());
            for (int x : h.images)
                conj.push_back(target.conjugate(x, c));
            if (conj < best)
                best = std::move(conj);
        }
        minimal.insert(std::move(best));
    }
    std::vector<Homomorphism> out;
    for (auto& v : minimal)
        out.push_back(Homomorphism{v});
    return out;
}

void finalize(std::vector<Homomorphism>& homs, const FiniteGroup& target,
              const HomSearchOptions& options) {
    if (options.up_to_target_conjugacy)
        homs = dedup_by_conjugacy(std::move(homs), target);
    std::sort(homs.begin(), homs.end());
    if (options.limit > 0 && static_cast<long long>(homs.size()) > options.limit)
        homs.resize(options.limit);
}

// ---- presented source -------------------------------------------------------

struct PresentedSearch {
    const Presentation& src;
    const FiniteGroup& tgt;
    const std::optional<ZConstraint>& constraint;
    long long limit;

    int ngens;
    std::vector<int> assign_order;          // generator positions in branch order
    std::vector<std::vector<int>> check_at; // relator indices ready at each depth
    int z_check_depth = -1;
    std::vector<int> images;                // 0-based per generator, -1 unset
    std::vector<Homomorphism> results;

    PresentedSearch(const Presentation& s, const FiniteGroup& t,
                    const std::optional<ZConstraint>& c, long long limit)
        : src(s), tgt(t), constraint(c), limit(limit), ngens(s.num_generators()) {
        // Branch on generators in declaration order; attach each relator (and
        // the z-word) to the first depth at which all its letters are known.
        for (int i = 0; i < ngens; ++i)
            assign_order.push_back(i);
        check_at.assign(ngens + 1, {});
        std::vector<int> depth_of(ngens + 1, 0);
        for (int i = 0; i < ngens; ++i)
            depth_of[assign_order[i] + 1] = i + 1;
        for (size_t r = 0; r < src.relators.size(); ++r) {
            int need = 0;
            for (int g : src.relators[r])
                need = std::max(need, depth_of[std::abs(g)]);
            check_at[need].push_back(static_cast<int>(r));
        }
        if (constraint) {
            const Word& zw = std::get<Word>(constraint->z);
            int need = 0;
            for (int g : zw)
                need = std::max(need, depth_of[std::abs(g)]);
            z_check_depth = need;
        }
        images.assign(ngens, -1);
    }

    bool checks_pass(int depth) {
        for (int r : check_at[depth])
            if (tgt.evaluate_word(src.relators[r], images) != tgt.identity())
                return false;
        if (constraint && z_check_depth == depth)
            if (tgt.evaluate_word(std::get<Word>(constraint->z), images) != constraint->required)
                return false;
        return true;
    }

    bool full() const { return limit > 0 && static_cast<long long>(results.size()) >= limit; }

    void run(int depth) {
        if (full())
            return;
        if (depth == ngens) {
            results.push_back(Homomorphism{images});
            return;
        }
        int gen = assign_order[depth];
        for (int x = 0; x < tgt.order(); ++x) {
            images[gen] = x;
            if (checks_pass(depth + 1))
                run(depth + 1);
            if (full())
                break;
        }
        images[gen] = -1;
    }
};

// ---- table source -----------------------------------------------------------

struct TableSearch {
    const FiniteGroup& src;
    const FiniteGroup& tgt;
    std::vector<int> gens; // source generator elements, in branch order
    std::optional<std::pair<int, int>> zpair; // (source element, required image)
    long long limit;
    std::vector<Homomorphism> results;

    // Partial map source element -> target element (-1 unset); its domain is
    // always a subgroup with list `domain`.
    std::vector<int> fmap;
    std::vector<int> domain;

    TableSearch(const FiniteGroup& s, const FiniteGroup& t) : src(s), tgt(t) {}

    // Extend the consistent partial hom by g -> y; returns false on
    // contradiction. Restores nothing (caller snapshots).
    bool extend(int g, int y) {
        if (fmap[g] >= 0)
            return fmap[g] == y;
        fmap[g] = y;
        domain.push_back(g);
        // close under products, checking every pair
        for (size_t i = 0; i < domain.size(); ++i) {
            for (size_t j = 0; j < domain.size(); ++j) {
                int a = domain[i], b = domain[j];
                int ab = src.mul(a, b);
                int img = tgt.mul(fmap[a], fmap[b]);
                if (fmap[ab] < 0) {
                    fmap[ab] = img;
                    domain.push_back(ab);
                } else if (fmap[ab] != img) {
                    return false;
                }
            }
        }
        return true;
    }

    bool full() const { return limit > 0 && static_cast<long long>(results.size()) >= limit; }

    void run(size_t depth, const std::vector<std::vector<int>>& cands,
             const std::vector<int>& branch_to_decl) {
        if (full())
            return;
        if (depth == gens.size()) {
            if (zpair && fmap[zpair->first] != zpair->second)
                return;
            // report images in declaration order
            std::vector<int> images(gens.size());
            for (size_t i = 0; i < gens.size(); ++i)
                images[branch_to_decl[i]] = fmap[gens[i]];
            results.push_back(Homomorphism{images});
            return;
        }
        std::vector<int> fsnap = fmap;
        std::vector<int> dsnap = domain;
        for (int y : cands[depth]) {
            if (extend(gens[depth], y)) {
                // opportunistic z pruning once z enters the domain
                if (!zpair || fmap[zpair->first] < 0 || fmap[zpair->first] == zpair->second)
                    run(depth + 1, cands, branch_to_decl);
            }
            fmap = fsnap;
            domain = dsnap;
            if (full())
                break;
        }
    }
};

} // namespace

std::vector<Homomorphism> enumerate_homs(const Presentation& source, const FiniteGroup& target,
                                         const std::optional<ZConstraint>& constraint,
                                         const HomSearchOptions& options) {
    source.validate();
    if (constraint && !std::holds_alternative<Word>(constraint->z))
        throw std::invalid_argument("enumerate_homs: presented source needs a word constraint");
    // With conjugacy dedup or canonical ordering we must enumerate fully, so
    // only forward the early-exit limit when neither is affected.
    long long inner_limit = options.up_to_target_conjugacy ? 0 : options.limit;
    PresentedSearch search(source, target, constraint, inner_limit);
    // Constraints with empty support (empty relators, a trivial z word) are
    // decided before any generator is assigned.
    if (search.checks_pass(0))
        search.run(0);
    auto homs = std::move(search.results);
    finalize(homs, target, options);
    return homs;
}

std::vector<Homomorphism> enumerate_homs(const FiniteGroup& source, const FiniteGroup& target,
                                         const std::optional<ZConstraint>& constraint,
                                         const HomSearchOptions& options) {
    std::vector<int> decl_gens = source.generating_set();
    if (decl_gens.empty())
        decl_gens = {source.identity()};
    if (static_cast<int>(source.subgroup_closure(decl_gens).size()) != source.order())
        throw std::invalid_argument("enumerate_homs: stored generators do not generate the source");

    std::optional<std::pair<int, int>> zpair;
    if (constraint) {
        if (!std::holds_alternative<int>(constraint->z))
            throw std::invalid_argument("enumerate_homs: table source needs an element-index constraint");
        zpair = {std::get<int>(constraint->z), constraint->required};
    }

    // Candidate sets per generator, then branch tightest-first.
    std::vector<std::vector<int>> cand_decl;
    for (int g : decl_gens)
        cand_decl.push_back(candidates_by_order(target, source.element_order(g)));
    std::vector<int> perm(decl_gens.size());
    for (size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return cand_decl[a].size() < cand_decl[b].size();
    });

    TableSearch search(source, target);
    search.zpair = zpair;
    search.limit = options.up_to_target_conjugacy ? 0 : options.limit;
    std::vector<std::vector<int>> cands;
    std::vector<int> branch_to_decl;
    for (int i : perm) {
        search.gens.push_back(decl_gens[i]);
        cands.push_back(cand_decl[i]);
        branch_to_decl.push_back(i);
    }
    search.fmap.assign(source.order(), -1);
    search.fmap[source.identity()] = target.identity();
    search.domain.push_back(source.identity());
    search.run(0, cands, branch_to_decl);

    auto homs = std::move(search.results);
    finalize(homs, target, options);
    return homs;
}

std::optional<std::vector<int>> extend_hom(const FiniteGroup& source, const FiniteGroup& target,
                                           const std::vector<int>& source_gens,
                                           const std::vector<int>& images) {
    if (source_gens.size() != images.size())
        throw std::invalid_argument("extend_hom: generator/image count mismatch");
    TableSearch search(source, target);
    search.fmap.assign(source.order(), -1);
    search.fmap[source.identity()] = target.identity();
    search.domain.push_back(source.identity());
    for (size_t i = 0; i < source_gens.size(); ++i)
        if (!search.extend(source_gens[i], images[i]))
            return std::nullopt;
    if (static_cast<int>(search.domain.size()) != source.order())
        return std::nullopt; // gens do not generate the source
    return search.fmap;
}

} // namespace spinobstruct::groups
