#include "spinobstruct/framed.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinobstruct::groups {

bool AbelianInvariants::z_is_trivial() const {
    for (const auto& c : z_torsion)
        if (c != 0)
            return false;
    for (const auto& c : z_free)
        if (c != 0)
            return false;
    return true;
}

AbelianizationData abelianization_data(const Presentation& p, const Word& z) {
    p.validate();
    int g = p.num_generators();
    int r = static_cast<int>(p.relators.size());
    // Columns are relator exponent vectors: A maps Z^r -> Z^g and the
    // abelianization is its cokernel.
    IntMatrix a(g, std::vector<Int>(r, 0));
    IntMatrix rows = p.relator_exponent_matrix();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < g; ++j)
            a[j][i] = rows[i][j];
    SnfResult snf = smith_normal_form(a);

    std::vector<Int> zeta = p.exponent_vector(z);
    std::vector<Int> w(g, 0); // U * zeta
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            w[i] += snf.u[i][j] * zeta[j];

    AbelianizationData data;
    data.u = snf.u;
    data.diag.assign(g, 0);
    int bound = std::min(g, r);
    for (int i = 0; i < bound; ++i) {
        data.diag[i] = snf.d[i][i];
        if (snf.d[i][i] != 0)
            ++data.rank;
    }
    AbelianInvariants& ab = data.invariants;
    for (int i = 0; i < data.rank; ++i) {
        Int d = data.diag[i];
        if (d == 1)
            continue; // coordinate dies
        Int c = w[i] % d;
        if (c < 0)
            c += d;
        ab.factors.push_back(d);
        ab.z_torsion.push_back(c);
    }
    ab.free_rank = g - data.rank;
    for (int i = data.rank; i < g; ++i)
        ab.z_free.push_back(w[i]);
    return data;
}

AbelianInvariants abelianization(const Presentation& p, const Word& z) {
    return abelianization_data(p, z).invariants;
}

void FramedGroup::validate() const {
    if (is_finite()) {
        const FiniteGroup& g = finite();
        int zi = z_index();
        if (zi < 0 || zi >= g.order())
            throw std::invalid_argument("FramedGroup: z index out of range");
        if (g.mul(zi, zi) != g.identity())
            throw std::invalid_argument("FramedGroup: z must have order <= 2");
        if (!g.is_central(zi))
            throw std::invalid_argument("FramedGroup: z must be central");
    } else {
        const Presentation& p = presented();
        p.validate();
        for (int letter : z_word())
            if (letter == 0 || std::abs(letter) > p.num_generators())
                throw std::invalid_argument("FramedGroup: z word references unknown generator");
        // z^2 must die in the abelianization (centrality is a trusted input
        // for presented groups).
        Word zz = z_word();
        Word z2 = zz;
        z2.insert(z2.end(), zz.begin(), zz.end());
        if (!abelianization(p, z2).z_is_trivial())
            throw std::invalid_argument("FramedGroup: z^2 is nontrivial in the abelianization");
    }
}

FramedGroup make_framed(FiniteGroup g, int z, bool i_star_injective, std::string label) {
    FramedGroup f{std::move(g), z, i_star_injective, std::move(label)};
    f.validate();
    return f;
}

FramedGroup make_framed(Presentation p, Word z, bool i_star_injective, std::string label) {
    FramedGroup f{std::move(p), std::move(z), i_star_injective, std::move(label)};
    f.validate();
    return f;
}

bool spinc_exists(const FramedGroup& f) {
    if (!f.i_star_injective)
        return false;
    if (f.is_finite()) {
        const FiniteGroup& g = f.finite();
        auto derived = g.commutator_subgroup();
        return !std::binary_search(derived.begin(), derived.end(), f.z_index());
    }
    return !abelianization(f.presented(), f.z_word()).z_is_trivial();
}

int f2_rank(F2Matrix m) {
    int rank = 0;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (int k = c; k < cols; ++k)
                    m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<int>> f2_solve_affine(const F2Matrix& m, const std::vector<int>& c) {
    int cols = static_cast<int>(c.size());
    // Augmented system: every row of m with rhs 0, plus (c | 1).
    F2Matrix aug = m;
    for (auto& row : aug)
        row.push_back(0);
    std::vector<int> last = c;
    last.push_back(1);
    aug.push_back(std::move(last));

    int rows = static_cast<int>(aug.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (aug[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(aug[rank], aug[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && aug[r][col])
                for (int k = col; k <= cols; ++k)
                    aug[r][k] ^= aug[rank][k];
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (aug[r][cols])
            return std::nullopt; // 0 = 1
    std::vector<int> x(cols, 0);
    for (int i = 0; i < rank; ++i)
        x[pivot_col[i]] = aug[i][cols];
    return x;
}

namespace {

F2Matrix relator_matrix_mod2(const Presentation& p) {
    F2Matrix m;
    for (const auto& row : p.relator_exponent_matrix()) {
        std::vector<int> r2;
        for (const auto& e : row)
            r2.push_back(static_cast<int>(((e % 2) + 2) % 2));
        m.push_back(std::move(r2));
    }
    return m;
}

std::vector<int> z_vector_mod2(const Presentation& p, const Word& z) {
    std::vector<int> zeta;
    for (const auto& e : p.exponent_vector(z))
        zeta.push_back(static_cast<int>(((e % 2) + 2) % 2));
    return zeta;
}

} // namespace

bool spin_exists(const FramedGroup& f) {
    if (!f.i_star_injective)
        return false;
    if (f.is_finite()) {
        const FiniteGroup& g = f.finite();
        auto n = g.square_commutator_subgroup();
        return !std::binary_search(n.begin(), n.end(), f.z_index());
    }
    const Presentation& p = f.presented();
    return f2_solve_affine(relator_matrix_mod2(p), z_vector_mod2(p, f.z_word())).has_value();
}

Int count_spin_structures(const FramedGroup& f) {
    if (!spin_exists(f))
        return 0;
    if (f.is_finite()) {
        const FiniteGroup& g = f.finite();
        auto n = g.square_commutator_subgroup();
        // [G : N] = 2^k homs to Z/2 in total; half of them send z to 1.
        Int index = Int(g.order()) / Int(n.size());
        return index / 2;
    }
    const Presentation& p = f.presented();
    F2Matrix m = relator_matrix_mod2(p);
    m.push_back(z_vector_mod2(p, f.z_word()));
    int rank = f2_rank(m);
    Int count = 1;
    for (int i = 0; i < p.num_generators() - rank; ++i)
        count *= 2;
    return count;
}

} // namespace spinobstruct::groups
