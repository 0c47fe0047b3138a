#include "spinobstruct/su2_models.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spinobstruct::groups {

FiniteGroup dicyclic_group(int n, long long max_cosets) {
    if (n < 1)
        throw std::invalid_argument("dicyclic_group: n must be >= 1");
    Presentation p = make_presentation(
        {"a", "b"},
        {"a^" + std::to_string(2 * n), "b^2 a^-" + std::to_string(n), "b^-1 a b a"});
    return todd_coxeter(p, max_cosets);
}

FiniteGroup binary_octahedral(long long max_cosets) {
    Presentation p = make_presentation({"s", "t"}, {"(st)^2 s^-3", "s^3 t^-4"});
    return todd_coxeter(p, max_cosets);
}

int unique_central_involution(const FiniteGroup& g) {
    auto inv = g.central_involutions();
    if (inv.size() != 1)
        throw std::invalid_argument("expected a unique central involution, found " +
                                    std::to_string(inv.size()));
    return inv[0];
}

namespace {

// Materialization cache; read-only after first construction.
std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const FiniteGroup>> cache;

std::shared_ptr<const FiniteGroup> cached(const std::string& key,
                                          const std::function<FiniteGroup()>& build) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto g = std::make_shared<const FiniteGroup>(build());
    cache[key] = g;
    return g;
}

} // namespace

std::vector<Su2Model> su2_finite_subgroup_models(std::optional<long long> source_order,
                                                 long long cyclic_cap, long long dicyclic_cap,
                                                 long long max_cosets) {
    std::vector<Su2Model> out;
    auto admit = [&](long long model_order, long long cap) {
        if (source_order)
            return *source_order % model_order == 0;
        return model_order <= cap;
    };
    long long cyc_bound = source_order ? *source_order : cyclic_cap;
    for (long long k = 2; k <= cyc_bound; k += 2) {
        if (!admit(k, cyclic_cap))
            continue;
        auto g = cached("cyclic:" + std::to_string(k),
                        [&] { return cyclic_group(static_cast<int>(k)); });
        out.push_back({g, static_cast<int>(k / 2), "cyclic(" + std::to_string(k) + ")"});
    }
    long long dic_bound = source_order ? *source_order : dicyclic_cap;
    for (long long n = 2; 4 * n <= dic_bound; ++n) {
        if (!admit(4 * n, dicyclic_cap))
            continue;
        auto g = cached("dicyclic:" + std::to_string(n),
                        [&] { return dicyclic_group(static_cast<int>(n), max_cosets); });
        out.push_back({g, unique_central_involution(*g),
                       "binary_dihedral(" + std::to_string(n) + ")"});
    }
    if (!source_order || *source_order % 24 == 0) {
        auto g = cached("sl2_3", [] { return sl2p(3); });
        out.push_back({g, unique_central_involution(*g), "sl2_3"});
    }
    if (!source_order || *source_order % 48 == 0) {
        auto g = cached("binary_octahedral", [&] { return binary_octahedral(max_cosets); });
        out.push_back({g, unique_central_involution(*g), "binary_octahedral"});
    }
    if (!source_order || *source_order % 120 == 0) {
        auto g = cached("sl2_5", [] { return sl2p(5); });
        out.push_back({g, unique_central_involution(*g), "sl2_5"});
    }
    return out;
}

} // namespace spinobstruct::groups
