#include "spinobstruct/snf.hpp"

#include <stdexcept>

namespace spinobstruct::groups {

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    int r = static_cast<int>(a.size());
    int k = r ? static_cast<int>(a[0].size()) : 0;
    int c = k && !b.empty() ? static_cast<int>(b[0].size()) : 0;
    if (static_cast<int>(b.size()) != k)
        throw std::invalid_argument("matmul: shape mismatch");
    IntMatrix out(r, std::vector<Int>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (int j = 0; j < c; ++j)
                out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

Int determinant(const IntMatrix& a) {
    int n = static_cast<int>(a.size());
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        IntMatrix minor;
        for (int i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (int k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        Int term = a[0][j] * determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? -x : x; }

// Floor-free symmetric remainder division keeps entries small.
Int round_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    Int half = int_abs(b);
    if (2 * int_abs(r) > half)
        q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SnfResult res;
    res.d = a;
    res.u = identity_matrix(rows);
    res.v = identity_matrix(cols);
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    auto swap_rows = [&](int i, int j) {
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (auto& row : d)
            std::swap(row[i], row[j]);
        for (auto& row : v)
            std::swap(row[i], row[j]);
    };
    auto add_row = [&](int dst, int src, const Int& f) { // row dst += f * row src
        for (int j = 0; j < cols; ++j)
            d[dst][j] += f * d[src][j];
        for (int j = 0; j < rows; ++j)
            u[dst][j] += f * u[src][j];
    };
    auto add_col = [&](int dst, int src, const Int& f) { // col dst += f * col src
        for (int i = 0; i < rows; ++i)
            d[i][dst] += f * d[i][src];
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            v[i][dst] += f * v[i][src];
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < cols; ++j)
            d[i][j] = -d[i][j];
        for (int j = 0; j < rows; ++j)
            u[i][j] = -u[i][j];
    };

    int t = 0;
    int bound = std::min(rows, cols);
    while (t < bound) {
        bool done = false;
        bool empty = false;
        while (!done) {
            // Move the minimal nonzero entry of the trailing submatrix to
            // the pivot; every pass after a reduction sees a strictly
            // smaller pivot, so this is a Euclidean descent.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (d[i][j] != 0 &&
                        (pi < 0 || int_abs(d[i][j]) < int_abs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                empty = true;
                break;
            }
            if (pi != t)
                swap_rows(t, pi);
            if (pj != t)
                swap_cols(t, pj);

            bool reduced = true;
            for (int i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0)
                    continue;
                Int q = round_div(d[i][t], d[t][t]);
                if (q != 0)
                    add_row(i, t, -q);
                if (d[i][t] != 0)
                    reduced = false; // a smaller remainder remains
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0)
                    continue;
                Int q = round_div(d[t][j], d[t][t]);
                if (q != 0)
                    add_col(j, t, -q);
                if (d[t][j] != 0)
                    reduced = false;
            }
            if (!reduced)
                continue;
            // Pivot row and column are clear; enforce divisibility of the
            // trailing block by the pivot.
            done = true;
            for (int i = t + 1; i < rows && done; ++i)
                for (int j = t + 1; j < cols && done; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(t, i, 1);
                        done = false;
                    }
        }
        if (empty)
            break; // trailing submatrix is zero
        if (d[t][t] < 0)
            negate_row(t);
        ++t;
    }
    return res;
}

} // namespace spinobstruct::groups
