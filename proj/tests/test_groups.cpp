#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinobstruct/finite_group.hpp"
#include "spinobstruct/framed.hpp"
#include "spinobstruct/hom_search.hpp"
#include "spinobstruct/polynomial.hpp" // parse_error
#include "spinobstruct/presentation.hpp"
#include "spinobstruct/su2_models.hpp"
#include "spinobstruct/todd_coxeter.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

using namespace spinobstruct;
using namespace spinobstruct::groups;

// ---- presentation parsing ----------------------------------------------------

TEST_CASE("word and relator parsing") {
    Presentation p = make_presentation({"s", "t"}, {});
    CHECK(parse_word("s s s t-1 t-1", p) == Word{1, 1, 1, -2, -2});
    CHECK(parse_word("(st)^2 s^-3", p) == Word{1, 2, 1, 2, -1, -1, -1});
    CHECK(parse_word("st^-1", p) == Word{1, -2});
    CHECK(free_reduce(parse_word("s s^-1 t", p)) == Word{2});

    auto rels = parse_relator("(st)^2 = s^3 = t^5", p);
    REQUIRE(rels.size() == 2);
    CHECK(rels[0] == free_reduce(parse_word("(st)^2 s^-3", p)));
    CHECK(rels[1] == free_reduce(parse_word("s^3 t^-5", p)));

    Presentation q = make_presentation({"a", "b"}, {"a b a-1 b-1"});
    CHECK(q.relators.size() == 1);
    CHECK(q.relators[0] == Word{1, 2, -1, -2});

    CHECK_THROWS_AS(parse_word("x", p), parse_error);
    CHECK_THROWS_AS(make_presentation({"a", "a"}, {}), std::invalid_argument);

    // longest-match generator names
    Presentation multi = make_presentation({"g", "g2"}, {});
    CHECK(parse_word("g2 g", multi) == Word{2, 1});
    CHECK(word_to_string(Word{2, -1}, multi) == "g2 g^-1");

    // words round-trip through their string form
    for (const Word& w : {Word{1, 2, -1, -2}, Word{2, 2, 2}, Word{-1}, Word{}})
        CHECK(parse_word(word_to_string(w, p), p) == (w.empty() ? Word{} : w));
}

TEST_CASE("exponent matrices") {
    Presentation p = make_presentation({"s", "t"}, {"(st)^2 s^-3", "s^3 t^-5"});
    IntMatrix m = p.relator_exponent_matrix();
    REQUIRE(m.size() == 2);
    CHECK(m[0] == std::vector<Int>{-1, 2});
    CHECK(m[1] == std::vector<Int>{3, -5});
}

// ---- finite groups -----------------------------------------------------------

TEST_CASE("cyclic and product construction") {
    FiniteGroup c4 = cyclic_group(4);
    CHECK(c4.order() == 4);
    CHECK(c4.element_order(1) == 4);
    CHECK(c4.inverse(1) == 3);
    c4.verify(true);

    FiniteGroup k4 = klein_four();
    CHECK(k4.order() == 4);
    for (int a = 0; a < 4; ++a)
        CHECK(k4.mul(a, a) == k4.identity());

    FiniteGroup sl23 = sl2p(3);
    FiniteGroup prod = direct_product(sl23, cyclic_group(2));
    CHECK(prod.order() == 48);
    FiniteGroup triv = cyclic_group(1);
    FiniteGroup same = direct_product(triv, c4);
    CHECK(same.order() == 4);
    CHECK(same.element_order(1) == 4);
}

TEST_CASE("SL(2,5): order, center, perfectness") {
    FiniteGroup g = sl2p(5);
    CHECK(g.order() == 120);
    g.verify();
    auto z = g.center();
    CHECK(z.size() == 2);
    auto inv = g.central_involutions();
    REQUIRE(inv.size() == 1);
    CHECK(g.element_order(inv[0]) == 2);
    // perfect: commutator subgroup is everything
    CHECK(g.commutator_subgroup().size() == 120);
    // the stored generators generate
    CHECK(g.subgroup_closure(g.generating_set()).size() == 120);
}

TEST_CASE("SL(2,3): order 24 with unique central involution") {
    FiniteGroup g = sl2p(3);
    CHECK(g.order() == 24);
    CHECK(g.central_involutions().size() == 1);
    CHECK(g.commutator_subgroup().size() == 8); // derived subgroup is Q8
}

TEST_CASE("central quotient") {
    FiniteGroup c4 = cyclic_group(4);
    FiniteGroup q = central_quotient(c4, {0, 2});
    CHECK(q.order() == 2);

    // (SL(2,5) x Z/2) / <(-I, -1)> has order 120
    FiniteGroup sl25 = sl2p(5);
    int minus_i = unique_central_involution(sl25);
    FiniteGroup prod = direct_product(sl25, cyclic_group(2));
    int diag = product_index(cyclic_group(2), minus_i, 1);
    FiniteGroup big_q = central_quotient(prod, {prod.identity(), diag});
    CHECK(big_q.order() == 120);

    FiniteGroup same = central_quotient(c4, {0});
    CHECK(same.order() == 4);
    CHECK(same.element_order(1) == 4);

    CHECK_THROWS_AS(central_quotient(c4, {0, 1}), std::invalid_argument); // not closed
    FiniteGroup s = sl2p(3);
    CHECK_THROWS_AS(central_quotient(s, {s.identity(), 1}), std::invalid_argument);
}

TEST_CASE("finite group JSON round-trip") {
    FiniteGroup g = direct_product(cyclic_group(3), cyclic_group(2));
    FiniteGroup back = finite_group_from_json(finite_group_to_json(g));
    CHECK(back.order() == g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            CHECK(back.mul(a, b) == g.mul(a, b));
    CHECK(back.labels() == g.labels());
    CHECK_THROWS(finite_group_from_json("{\"order\": 2, \"table\": [[0,1],[1,1]]}"));
}

// ---- Todd-Coxeter ------------------------------------------------------------

TEST_CASE("coset enumeration of small groups") {
    CHECK(todd_coxeter(make_presentation({"a"}, {"a^5"})).order() == 5);
    CHECK(todd_coxeter(make_presentation({"a", "b"}, {"a^2", "b^3", "(ab)^2"})).order() == 6);
    // Klein four
    FiniteGroup k4 = todd_coxeter(make_presentation({"a", "z"}, {"a^2", "z^2", "a z a-1 z-1"}));
    CHECK(k4.order() == 4);
}

TEST_CASE("binary icosahedral presentation materializes to order 120") {
    Presentation p = make_presentation({"s", "t"}, {"(st)^2 s^-3", "s^3 t^-5"});
    FiniteGroup g = todd_coxeter(p);
    CHECK(g.order() == 120);
    g.verify();
    CHECK(g.center().size() == 2);
    CHECK(g.commutator_subgroup().size() == 120);

    // agreement with the matrix model on order, abelianization, center size
    FiniteGroup m = sl2p(5);
    CHECK(g.order() == m.order());
    CHECK(g.center().size() == m.center().size());
    CHECK(g.commutator_subgroup().size() == m.commutator_subgroup().size());
}

TEST_CASE("binary octahedral presentation materializes to order 48") {
    FiniteGroup g = todd_coxeter(make_presentation({"s", "t"}, {"(st)^2 s^-3", "s^3 t^-4"}));
    CHECK(g.order() == 48);
    CHECK(g.center().size() == 2);
}

TEST_CASE("binary tetrahedral: enumeration agrees with the SL(2,3) matrix model") {
    FiniteGroup tc = todd_coxeter(make_presentation({"s", "t"}, {"(st)^2 s^-3", "s^3 t^-3"}));
    FiniteGroup m = sl2p(3);
    CHECK(tc.order() == m.order());
    CHECK(tc.center().size() == m.center().size());
    CHECK(tc.commutator_subgroup().size() == m.commutator_subgroup().size());
}

TEST_CASE("a trivial z word cannot satisfy a nontrivial constraint") {
    Presentation p = make_presentation({"a"}, {"a^2"});
    FiniteGroup c2 = cyclic_group(2);
    auto homs = enumerate_homs(p, c2, ZConstraint{Word{}, 1});
    CHECK(homs.empty());
    auto ok = enumerate_homs(p, c2, ZConstraint{Word{}, 0});
    CHECK(ok.size() == 2); // both maps send the empty word to the identity
}

TEST_CASE("dicyclic family") {
    for (int n = 1; n <= 6; ++n) {
        FiniteGroup g = dicyclic_group(n);
        CHECK(g.order() == 4 * n);
        if (n >= 2)
            CHECK(g.central_involutions().size() == 1);
    }
}

TEST_CASE("coset cap") {
    // Z is infinite: the cap must trigger
    Presentation z = make_presentation({"a"}, {});
    CHECK_THROWS_AS(todd_coxeter(z, 100), coset_limit_exceeded);
}

// ---- homomorphism search -----------------------------------------------------

namespace {

// Independent brute-force oracle over all generator-image assignments,
// verified by full multiplicative extension.
std::vector<Homomorphism> brute_force_homs(const FiniteGroup& src, const FiniteGroup& tgt,
                                           const std::optional<std::pair<int, int>>& zreq) {
    auto gens = src.generating_set();
    std::vector<Homomorphism> out;
    std::vector<int> images(gens.size(), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == gens.size()) {
            auto full = extend_hom(src, tgt, gens, images);
            if (!full)
                return;
            if (zreq && (*full)[zreq->first] != zreq->second)
                return;
            out.push_back(Homomorphism{images});
            return;
        }
        for (int y = 0; y < tgt.order(); ++y) {
            images[pos] = y;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("hom search examples") {
    // <a | a^2> -> Z/4 with a forced onto the order-2 element: exactly 1
    Presentation p = make_presentation({"a"}, {"a^2"});
    FiniteGroup c4 = cyclic_group(4);
    ZConstraint zc{parse_word("a", p), 2};
    auto homs = enumerate_homs(p, c4, zc);
    REQUIRE(homs.size() == 1);
    CHECK(homs[0].images == std::vector<int>{2});

    // Klein four with z designated -> Z/2 with z nontrivial: 2 homs
    FiniteGroup k4 = klein_four();
    FiniteGroup c2 = cyclic_group(2);
    // z = (0,1) has index 1 in the product indexing
    auto homs2 = enumerate_homs(k4, c2, ZConstraint{1, 1});
    CHECK(homs2.size() == 2);
    auto brute = brute_force_homs(k4, c2, std::make_pair(1, 1));
    CHECK(homs2.size() == brute.size());
}

TEST_CASE("SL(2,5) self-maps fixing the center are injective") {
    FiniteGroup g = sl2p(5);
    int minus_i = unique_central_involution(g);
    auto homs = enumerate_homs(g, g, ZConstraint{minus_i, minus_i},
                               HomSearchOptions{.up_to_target_conjugacy = true});
    CHECK(!homs.empty());
    for (const auto& h : homs) {
        auto full = extend_hom(g, g, g.generating_set(), h.images);
        REQUIRE(full.has_value());
        std::set<int> image(full->begin(), full->end());
        CHECK(image.size() == 120); // injective
    }
}

TEST_CASE("completeness against brute force on small groups") {
    std::vector<FiniteGroup> sources = {cyclic_group(4), klein_four(), dicyclic_group(2),
                                        cyclic_group(6), sl2p(3)};
    std::vector<FiniteGroup> targets = {cyclic_group(2), cyclic_group(4), klein_four(),
                                        dicyclic_group(2)};
    for (const auto& s : sources) {
        for (const auto& t : targets) {
            if (s.order() > 24 || t.order() > 24)
                continue;
            auto fast = enumerate_homs(s, t);
            auto brute = brute_force_homs(s, t, std::nullopt);
            CHECK(fast == brute);
        }
    }
}

TEST_CASE("every returned hom satisfies relators and the constraint") {
    Presentation p = make_presentation({"a", "b"}, {"a^4", "b^2", "b a b-1 a"});
    FiniteGroup d8 = dicyclic_group(2); // Q8 as a target
    auto homs = enumerate_homs(p, d8);
    for (const auto& h : homs)
        for (const auto& r : p.relators)
            CHECK(d8.evaluate_word(r, h.images) == d8.identity());
    // canonical order: sorted lexicographically
    CHECK(std::is_sorted(homs.begin(), homs.end()));
}

TEST_CASE("conjugacy dedup keeps lexicographically minimal representatives") {
    FiniteGroup g = sl2p(3);
    auto all = enumerate_homs(g, g, ZConstraint{unique_central_involution(g),
                                                unique_central_involution(g)});
    auto dedup = enumerate_homs(g, g,
                                ZConstraint{unique_central_involution(g),
                                            unique_central_involution(g)},
                                HomSearchOptions{.up_to_target_conjugacy = true});
    CHECK(dedup.size() <= all.size());
    CHECK(!dedup.empty());
    std::set<std::vector<int>> all_set;
    for (const auto& h : all)
        all_set.insert(h.images);
    for (const auto& h : dedup) {
        CHECK(all_set.count(h.images));
        // minimality over the orbit
        for (int c = 0; c < g.order(); ++c) {
            std::vector<int> conj;
            for (int x : h.images)
                conj.push_back(g.conjugate(x, c));
            CHECK(h.images <= conj);
        }
    }
}

// ---- abelianization and spin decisions ----------------------------------------

TEST_CASE("abelianization examples") {
    // free abelian of rank 2
    Presentation p1 = make_presentation({"a", "b"}, {"a b a-1 b-1"});
    auto ab1 = abelianization(p1, {});
    CHECK(ab1.free_rank == 2);
    CHECK(ab1.factors.empty());
    CHECK(ab1.z_is_trivial());

    // the (2,3,5) binary presentation is perfect
    Presentation p2 = make_presentation({"s", "t"}, {"(st)^2 s^-3", "s^3 t^-5"});
    auto ab2 = abelianization(p2, parse_word("(st)^2", p2));
    CHECK(ab2.free_rank == 0);
    CHECK(ab2.factors.empty());
    CHECK(ab2.z_is_trivial());

    // Z x Z/2 with z the torsion generator
    Presentation p3 = make_presentation({"a", "z"}, {"z^2", "a z a-1 z-1"});
    auto ab3 = abelianization(p3, parse_word("z", p3));
    CHECK(ab3.free_rank == 1);
    REQUIRE(ab3.factors.size() == 1);
    CHECK(ab3.factors[0] == 2);
    CHECK(ab3.z_torsion[0] == 1);
    CHECK(!ab3.z_is_trivial());
}

TEST_CASE("spinc and spin on the Weyl examples") {
    // Z/4 with z = g^2: spin_c yes, spin no (m = 2 even)
    Presentation z4 = make_presentation({"g"}, {"g^4"});
    FramedGroup f4 = make_framed(z4, parse_word("g^2", z4), true, "Z/4");
    CHECK(spinc_exists(f4));
    CHECK(!spin_exists(f4));
    CHECK(count_spin_structures(f4) == 0);

    // Z/6 with z = g^3: both (m = 3 odd)
    Presentation z6 = make_presentation({"g"}, {"g^6"});
    FramedGroup f6 = make_framed(z6, parse_word("g^3", z6), true, "Z/6");
    CHECK(spinc_exists(f6));
    CHECK(spin_exists(f6));
    CHECK(count_spin_structures(f6) == 1);

    // same through finite tables
    FramedGroup t4 = make_framed(cyclic_group(4), 2, true, "Z/4 table");
    CHECK(spinc_exists(t4));
    CHECK(!spin_exists(t4));
    FramedGroup t6 = make_framed(cyclic_group(6), 3, true, "Z/6 table");
    CHECK(spinc_exists(t6));
    CHECK(spin_exists(t6));
}

TEST_CASE("spin_exists implies spinc_exists") {
    std::vector<FramedGroup> cases;
    cases.push_back(make_framed(cyclic_group(2), 1, true, "Z/2"));
    cases.push_back(make_framed(klein_four(), 1, true, "V4"));
    cases.push_back(make_framed(direct_product(cyclic_group(4), cyclic_group(2)),
                                product_index(cyclic_group(2), 2, 0), true, "Z4xZ2 z=(2,0)"));
    FiniteGroup q8 = dicyclic_group(2);
    cases.push_back(make_framed(q8, unique_central_involution(q8), true, "Q8"));
    for (const auto& f : cases)
        if (spin_exists(f))
            CHECK(spinc_exists(f));
}

TEST_CASE("perfect group: no characters, identity witness still exists") {
    FiniteGroup g = sl2p(5);
    int minus_i = unique_central_involution(g);
    FramedGroup f = make_framed(g, minus_i, true, "SL(2,5)");
    CHECK(!spinc_exists(f));
    CHECK(!spin_exists(f));
    auto homs = enumerate_homs(g, g, ZConstraint{minus_i, minus_i},
                               HomSearchOptions{.limit = 1});
    CHECK(!homs.empty());
}

TEST_CASE("count matches hom enumeration against the Z/2 table") {
    // presented: T^3 fingerprint has 8
    std::vector<std::string> gens{"a1", "a2", "a3", "z"};
    std::vector<std::string> rels;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            rels.push_back(gens[i] + " " + gens[j] + " " + gens[i] + "-1 " + gens[j] + "-1");
    rels.push_back("z^2");
    Presentation t3 = make_presentation(gens, rels);
    FramedGroup f = make_framed(t3, parse_word("z", t3), true, "T^3");
    CHECK(count_spin_structures(f) == 8);
    auto homs = enumerate_homs(t3, cyclic_group(2), ZConstraint{parse_word("z", t3), 1});
    CHECK(homs.size() == 8);

    // finite: Q8's -1 lies in the commutator subgroup, so no retraction at
    // all -- both routes must agree on zero
    FiniteGroup q8 = dicyclic_group(2);
    FramedGroup fq = make_framed(q8, unique_central_involution(q8), true, "Q8");
    CHECK(count_spin_structures(fq) == 0);
    auto homs_q = enumerate_homs(q8, cyclic_group(2),
                                 ZConstraint{unique_central_involution(q8), 1});
    CHECK(homs_q.empty());

    // finite positive case: Z/4 x Z/2 with z the order-2 factor
    FiniteGroup g42 = direct_product(cyclic_group(4), cyclic_group(2));
    int z42 = product_index(cyclic_group(2), 0, 1);
    FramedGroup f42 = make_framed(g42, z42, true, "Z4xZ2");
    CHECK(count_spin_structures(f42) == 2);
    CHECK(enumerate_homs(g42, cyclic_group(2), ZConstraint{z42, 1}).size() == 2);
}

TEST_CASE("framed group validation") {
    CHECK_THROWS_AS(make_framed(cyclic_group(4), 1, true, "bad z order"), std::invalid_argument);
    Presentation z4 = make_presentation({"g"}, {"g^4"});
    CHECK_THROWS_AS(make_framed(z4, parse_word("g", z4), true, "z^2 nontrivial"),
                    std::invalid_argument);
}

TEST_CASE("i_star gate") {
    FramedGroup cp2 = make_framed(cyclic_group(1), 0, false, "CP^2");
    CHECK(!spinc_exists(cp2));
    CHECK(!spin_exists(cp2));
    CHECK(count_spin_structures(cp2) == 0);
}
