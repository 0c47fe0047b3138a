#include "spinobstruct/finite_group.hpp"

#include <json.hpp> // vendored nlohmann/json

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace spinobstruct::groups {

using nlohmann::json;

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, int identity,
                         std::vector<std::string> labels, std::vector<int> generators)
    : table_(std::move(table)), identity_(identity), labels_(std::move(labels)),
      generators_(std::move(generators)) {
    int n = order();
    if (labels_.empty()) {
        for (int i = 0; i < n; ++i)
            labels_.push_back("#" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("FiniteGroup: label count != order");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("FiniteGroup: table is not square");
        for (int x : row)
            if (x < 0 || x >= n)
                throw std::invalid_argument("FiniteGroup: table entry out of range");
    }
    compute_inverses();
}

void FiniteGroup::compute_inverses() {
    int n = order();
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (table_[a][identity_] != a || table_[identity_][a] != a)
            throw std::invalid_argument("FiniteGroup: identity fails on element " + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            if (table_[a][b] == identity_) {
                if (table_[b][a] != identity_)
                    throw std::invalid_argument("FiniteGroup: one-sided inverse");
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0)
            throw std::invalid_argument("FiniteGroup: element without inverse");
    }
}

int FiniteGroup::power(int a, long long e) const {
    if (e < 0)
        return power(inverse_[a], -e);
    int r = identity_;
    int base = a;
    while (e > 0) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_central(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a))
            return false;
    return true;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> out;
    for (int a = 0; a < order(); ++a)
        if (is_central(a))
            out.push_back(a);
    return out;
}

std::vector<int> FiniteGroup::central_involutions() const {
    std::vector<int> out;
    for (int a : center())
        if (a != identity_ && mul(a, a) == identity_)
            out.push_back(a);
    return out;
}

int FiniteGroup::evaluate_word(const Word& w, const std::vector<int>& images) const {
    int r = identity_;
    for (int g : w) {
        int img = images.at(std::abs(g) - 1);
        r = mul(r, g > 0 ? img : inverse_[img]);
    }
    return r;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> gens) const {
    std::set<int> elems{identity_};
    std::vector<int> frontier{identity_};
    for (int g : gens)
        if (elems.insert(g).second)
            frontier.push_back(g);
    // product closure (finite, so inverse closure is implied)
    for (size_t i = 0; i < frontier.size(); ++i) {
        for (int g : gens) {
            int x = mul(frontier[i], g);
            if (elems.insert(x).second)
                frontier.push_back(x);
        }
    }
    return {elems.begin(), elems.end()};
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
    std::vector<int> comms;
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b)
            comms.push_back(mul(mul(a, b), mul(inverse_[a], inverse_[b])));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(comms);
}

std::vector<int> FiniteGroup::square_commutator_subgroup() const {
    std::vector<int> gens;
    for (int a = 0; a < order(); ++a)
        gens.push_back(mul(a, a));
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b)
            gens.push_back(mul(mul(a, b), mul(inverse_[a], inverse_[b])));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_closure(gens);
}

std::vector<int> FiniteGroup::generating_set() const {
    if (!generators_.empty())
        return generators_;
    std::vector<int> gens;
    std::vector<int> closure{identity_};
    for (int a = 0; a < order(); ++a) {
        if (std::binary_search(closure.begin(), closure.end(), a))
            continue;
        gens.push_back(a);
        closure = subgroup_closure(gens);
        if (static_cast<int>(closure.size()) == order())
            break;
    }
    return gens;
}

void FiniteGroup::verify(bool full_associativity) const {
    int n = order();
    // identity and inverses were checked at construction; re-check cheaply
    for (int a = 0; a < n; ++a)
        if (mul(a, inverse_[a]) != identity_ || mul(inverse_[a], a) != identity_)
            throw std::invalid_argument("FiniteGroup::verify: inverse table broken");
    if (full_associativity || n <= 32) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("FiniteGroup::verify: associativity fails");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 500; ++k) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::invalid_argument("FiniteGroup::verify: associativity fails");
        }
    }
}

// ---- constructors ----------------------------------------------------------

FiniteGroup cyclic_group(int order) {
    if (order < 1)
        throw std::invalid_argument("cyclic_group: order must be positive");
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    std::vector<std::string> labels;
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j)
            table[i][j] = (i + j) % order;
        labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    }
    std::vector<int> gens = order > 1 ? std::vector<int>{1} : std::vector<int>{};
    return FiniteGroup(std::move(table), 0, std::move(labels), std::move(gens));
}

FiniteGroup klein_four() {
    return direct_product(cyclic_group(2), cyclic_group(2));
}

FiniteGroup sl2p(int p) {
    if (p < 2)
        throw std::invalid_argument("sl2p: p must be a prime >= 2");
    struct Mat {
        int a, b, c, d;
        bool operator<(const Mat& o) const {
            return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
        }
    };
    std::vector<Mat> elems;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if ((a * d - b * c) % p == 1 || (a * d - b * c) % p == 1 - p)
                        elems.push_back({a, b, c, d});
    std::sort(elems.begin(), elems.end());
    auto index_of = [&](const Mat& m) {
        auto it = std::lower_bound(elems.begin(), elems.end(), m);
        return static_cast<int>(it - elems.begin());
    };
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Mat &x = elems[i], &y = elems[j];
            Mat z{(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p,
                  (x.c * y.a + x.d * y.c) % p, (x.c * y.b + x.d * y.d) % p};
            table[i][j] = index_of(z);
        }
    }
    std::vector<std::string> labels;
    for (const auto& m : elems)
        labels.push_back("[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" +
                         std::to_string(m.c) + "," + std::to_string(m.d) + "]]");
    int id = index_of({1, 0, 0, 1});
    // Standard generators: S = [[0,-1],[1,0]], T = [[1,1],[0,1]].
    int s = index_of({0, p - 1, 1, 0});
    int t = index_of({1, 1, 0, 1});
    return FiniteGroup(std::move(table), id, std::move(labels), {s, t});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    int n = na * nb;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1) {
            int x = i1 * nb + j1;
            labels[x] = "(" + a.label(i1) + "," + b.label(j1) + ")";
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    table[x][i2 * nb + j2] = a.mul(i1, i2) * nb + b.mul(j1, j2);
        }
    std::vector<int> gens;
    for (int g : a.generating_set())
        gens.push_back(g * nb + b.identity());
    for (int g : b.generating_set())
        gens.push_back(a.identity() * nb + g);
    return FiniteGroup(std::move(table), a.identity() * nb + b.identity(),
                       std::move(labels), std::move(gens));
}

int product_index(const FiniteGroup& b, int ia, int ib) {
    return ia * b.order() + ib;
}

namespace {

void check_subgroup(const FiniteGroup& g, const std::set<int>& sub, bool require_central) {
    if (!sub.count(g.identity()))
        throw std::invalid_argument("quotient: subgroup must contain the identity");
    for (int a : sub) {
        if (require_central && !g.is_central(a))
            throw std::invalid_argument("quotient: element not central");
        if (!sub.count(g.inverse(a)))
            throw std::invalid_argument("quotient: subgroup not closed under inverse");
        for (int b : sub)
            if (!sub.count(g.mul(a, b)))
                throw std::invalid_argument("quotient: subgroup not closed");
    }
    if (!require_central) {
        for (int a : sub)
            for (int c = 0; c < g.order(); ++c)
                if (!sub.count(g.mul(g.mul(c, a), g.inverse(c))))
                    throw std::invalid_argument("quotient: subgroup not normal");
    }
}

FiniteGroup build_quotient(const FiniteGroup& g, const std::vector<int>& subgroup,
                           bool require_central) {
    std::set<int> sub(subgroup.begin(), subgroup.end());
    check_subgroup(g, sub, require_central);
    std::vector<int> coset_of = quotient_coset_map(g, subgroup);
    int q = 1 + *std::max_element(coset_of.begin(), coset_of.end());
    std::vector<int> reps(q, -1);
    for (int a = 0; a < g.order(); ++a)
        if (reps[coset_of[a]] < 0)
            reps[coset_of[a]] = a;
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) {
        labels[i] = "[" + g.label(reps[i]) + "]";
        for (int j = 0; j < q; ++j)
            table[i][j] = coset_of[g.mul(reps[i], reps[j])];
    }
    std::vector<int> gens;
    for (int x : g.generating_set())
        gens.push_back(coset_of[x]);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return FiniteGroup(std::move(table), coset_of[g.identity()], std::move(labels), std::move(gens));
}

} // namespace

std::vector<int> quotient_coset_map(const FiniteGroup& g, const std::vector<int>& subgroup) {
    int n = g.order();
    std::vector<int> coset_of(n, -1);
    int next = 0;
    for (int a = 0; a < n; ++a) {
        if (coset_of[a] >= 0)
            continue;
        int idx = next++;
        for (int s : subgroup)
            coset_of[g.mul(a, s)] = idx;
    }
    return coset_of;
}

FiniteGroup central_quotient(const FiniteGroup& g, const std::vector<int>& subgroup) {
    return build_quotient(g, subgroup, true);
}

FiniteGroup quotient_by_normal(const FiniteGroup& g, const std::vector<int>& subgroup) {
    return build_quotient(g, subgroup, false);
}

// ---- JSON ------------------------------------------------------------------

std::string finite_group_to_json(const FiniteGroup& g) {
    json j;
    j["order"] = g.order();
    std::vector<std::vector<int>> table;
    for (int a = 0; a < g.order(); ++a) {
        std::vector<int> row;
        for (int b = 0; b < g.order(); ++b)
            row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    j["table"] = table;
    j["labels"] = g.labels();
    j["identity"] = g.identity();
    j["generators"] = g.generators();
    return j.dump(2);
}

FiniteGroup finite_group_from_json(const std::string& text) {
    json j = json::parse(text);
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    int order = j.at("order").get<int>();
    if (static_cast<int>(table.size()) != order)
        throw std::invalid_argument("finite group JSON: order != table size");
    std::vector<std::string> labels;
    if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
    int identity = j.value("identity", 0);
    std::vector<int> gens;
    if (j.contains("generators"))
        gens = j.at("generators").get<std::vector<int>>();
    FiniteGroup g(std::move(table), identity, std::move(labels), std::move(gens));
    g.verify();
    return g;
}

} // namespace spinobstruct::groups
