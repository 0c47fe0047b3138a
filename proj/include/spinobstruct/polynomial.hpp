#pragma once

#include "spinobstruct/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinobstruct {

// Exponent vector of a monomial; length equals the ambient variable count.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Sparse multivariate polynomial over the rationals with a fixed variable
/// count. Terms are kept in lexicographic exponent order, which makes
/// equality, hashing and printing canonical.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, const Rat& c); // constant polynomial

    static Polynomial monomial(int nvars, const Exponents& e, const Rat& c);
    static Polynomial variable(int nvars, int var);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // total degree, -1 for the zero polynomial
    int degree_in(int var) const;

    const std::map<Exponents, Rat>& terms() const { return terms_; }
    Rat coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rat& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const = default;

    Polynomial derivative(int var) const;

    /// Substitute variable `var` by the polynomial `value` (same nvars).
    Polynomial substitute(int var, const Polynomial& value) const;

    /// Collect the coefficient (a polynomial in the remaining variables) of
    /// exponent pattern `e` restricted to the variables listed in `vars`.
    /// The returned polynomial has the `vars` exponents zeroed out.
    Polynomial coefficient_of(const std::vector<int>& vars, const Exponents& e) const;

private:
    int nvars_;
    std::map<Exponents, Rat> terms_;

    void check_compat(const Polynomial& o) const;
};

/// Maps variable indices to display names ("x1", "m2", ...) for the textual
/// syntax. Parsing matches declared names greedily (longest first).
struct VarTable {
    std::vector<std::string> names;

    static VarTable x_vars(int n);          // x1..xn
    static VarTable xm_vars(int n);         // x1..xn then m1..mn
    int index_of(const std::string& name) const; // -1 if unknown
};

std::string to_string(const Polynomial& p, const VarTable& vars);
Polynomial parse_polynomial(const std::string& text, const VarTable& vars);

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spinobstruct
