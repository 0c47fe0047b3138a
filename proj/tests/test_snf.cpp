#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinobstruct/snf.hpp"

#include <functional>
#include <random>

using namespace spinobstruct;
using namespace spinobstruct::groups;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        std::vector<Int> row;
        for (long long v : r)
            row.push_back(Int(v));
        m.push_back(std::move(row));
    }
    return m;
}

void check_snf(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    // U A V = D, exact
    CHECK(matmul(matmul(s.u, a), s.v) == s.d);
    // unimodular transforms
    Int du = determinant(s.u);
    Int dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal, non-negative, dividing chain
    size_t rows = s.d.size(), cols = rows ? s.d[0].size() : 0;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (i != j)
                CHECK(s.d[i][j] == 0);
    Int prev = 0;
    for (size_t i = 0; i < std::min(rows, cols); ++i) {
        Int cur = s.d[i][i];
        CHECK(cur >= 0);
        if (prev != 0)
            CHECK((cur == 0 || cur % prev == 0));
        if (prev == 0 && i > 0)
            CHECK(cur == 0); // zeros only at the tail
        prev = cur;
    }
}

// Independent oracle: d_1 ... d_k equals the gcd of all k x k minors.
Int minor_gcd(const IntMatrix& a, int k) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> ri(k), ci(k);
    Int g = 0;
    std::function<void(int, int)> pick_cols = [&](int pos, int start) {
        if (pos == k) {
            IntMatrix sub(k, std::vector<Int>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub[i][j] = a[ri[i]][ci[j]];
            Int det = determinant(sub);
            g = boost::multiprecision::gcd(g, det < 0 ? Int(-det) : det);
            return;
        }
        for (int c = start; c < cols; ++c) {
            ci[pos] = c;
            pick_cols(pos + 1, c + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int pos, int start) {
        if (pos == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < rows; ++r) {
            ri[pos] = r;
            pick_rows(pos + 1, r + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

} // namespace

TEST_CASE("identity matrix") {
    IntMatrix a = identity_matrix(3);
    SnfResult s = smith_normal_form(a);
    CHECK(s.d == a);
    check_snf(a);
}

TEST_CASE("frozen examples") {
    {
        SnfResult s = smith_normal_form(mat({{2, 4}, {6, 8}}));
        CHECK(s.d[0][0] == 2);
        CHECK(s.d[1][1] == 4);
        check_snf(mat({{2, 4}, {6, 8}}));
    }
    {
        // determinant -1 forces a trivial cokernel
        SnfResult s = smith_normal_form(mat({{-1, 2}, {3, -5}}));
        CHECK(s.d[0][0] == 1);
        CHECK(s.d[1][1] == 1);
    }
}

TEST_CASE("rank-deficient and non-square shapes") {
    check_snf(mat({{2, 4, 6}}));
    check_snf(mat({{0, 0}, {0, 0}}));
    check_snf(mat({{6}, {10}, {15}}));
    SnfResult s = smith_normal_form(mat({{6}, {10}, {15}}));
    CHECK(s.d[0][0] == 1); // gcd(6,10,15) = 1
    s = smith_normal_form(mat({{2, 4, 6}}));
    CHECK(s.d[0][0] == 2);
}

TEST_CASE("randomized against transform identity and minor-gcd oracle") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-50, 50);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        IntMatrix a(r, std::vector<Int>(c));
        for (auto& row : a)
            for (auto& x : row)
                x = entry(rng);
        check_snf(a);
    }
    // minor-gcd oracle on small matrices
    std::uniform_int_distribution<int> small_dim(1, 4);
    std::uniform_int_distribution<int> small_entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        int r = small_dim(rng), c = small_dim(rng);
        IntMatrix a(r, std::vector<Int>(c));
        for (auto& row : a)
            for (auto& x : row)
                x = small_entry(rng);
        SnfResult s = smith_normal_form(a);
        Int prod = 1;
        for (int k = 1; k <= std::min(r, c); ++k) {
            Int g = minor_gcd(a, k);
            prod *= s.d[k - 1][k - 1];
            CHECK(prod == g);
            if (g == 0)
                break;
        }
    }
}
