#pragma once

#include "spinobstruct/rational.hpp"

#include <vector>

namespace spinobstruct::groups {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(int n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
Int determinant(const IntMatrix& a); // exact, Laplace on small matrices

struct SnfResult {
    IntMatrix d; // diagonal, non-negative, dividing chain d1 | d2 | ...
    IntMatrix u; // unimodular, rows transform
    IntMatrix v; // unimodular, cols transform; u * a * v = d
};

/// Smith normal form over the integers with transform matrices.
SnfResult smith_normal_form(const IntMatrix& a);

} // namespace spinobstruct::groups
