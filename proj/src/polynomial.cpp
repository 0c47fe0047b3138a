#include "spinobstruct/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace spinobstruct {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

Polynomial::Polynomial(int nvars, const Rat& c) : nvars_(nvars) {
    if (c != 0)
        terms_[Exponents(nvars, 0)] = c;
}

Polynomial Polynomial::monomial(int nvars, const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("monomial: exponent length != nvars");
    Polynomial p(nvars);
    if (c != 0)
        p.terms_[e] = c;
    return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
    Exponents e(nvars, 0);
    e.at(var) = 1;
    return monomial(nvars, e, 1);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, total_degree(e));
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.at(var));
    return d;
}

Rat Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("add_term: exponent length != nvars");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::check_compat(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial variable counts differ");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compat(o);
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i)
                e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0)
        return r;
    for (const auto& [e, k] : terms_)
        r.terms_[e] = k * c;
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0)
            continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    check_compat(value);
    // Precompute the needed powers of `value`.
    int maxp = degree_in(var);
    std::vector<Polynomial> pow;
    pow.reserve(maxp + 1);
    pow.push_back(Polynomial(nvars_, Rat(1)));
    for (int k = 1; k <= maxp; ++k)
        pow.push_back(pow.back() * value);
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        int p = rest[var];
        rest[var] = 0;
        r += pow[p] * Polynomial::monomial(nvars_, rest, c);
    }
    return r;
}

Polynomial Polynomial::coefficient_of(const std::vector<int>& vars, const Exponents& pat) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        bool match = true;
        for (size_t k = 0; k < vars.size(); ++k) {
            if (e[vars[k]] != pat[vars[k]]) {
                match = false;
                break;
            }
        }
        if (!match)
            continue;
        Exponents rest = e;
        for (int v : vars)
            rest[v] = 0;
        r.add_term(rest, c);
    }
    return r;
}

VarTable VarTable::x_vars(int n) {
    VarTable t;
    for (int i = 1; i <= n; ++i)
        t.names.push_back("x" + std::to_string(i));
    return t;
}

VarTable VarTable::xm_vars(int n) {
    VarTable t = x_vars(n);
    for (int i = 1; i <= n; ++i)
        t.names.push_back("m" + std::to_string(i));
    return t;
}

int VarTable::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<int>(i);
    return -1;
}

namespace {

std::string monomial_string(const Exponents& e, const VarTable& vars) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += vars.names.at(i);
        if (e[i] != 1)
            s += "^" + std::to_string(e[i]);
    }
    return s;
}

} // namespace

std::string to_string(const Polynomial& p, const VarTable& vars) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    // Display with lexicographically largest exponents first ("x1^2 + x1 + 1").
    std::vector<std::pair<Exponents, Rat>> terms(p.terms().begin(), p.terms().end());
    std::reverse(terms.begin(), terms.end());
    for (const auto& [e, c] : terms) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        std::string mono = monomial_string(e, vars);
        if (mono.empty()) {
            out += to_string(a);
        } else {
            if (a != 1)
                out += to_string(a) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

// --- parsing ------------------------------------------------------------
//
// Grammar (whitespace-insensitive):
//   poly  := term (('+'|'-') term)*
//   term  := factor ('*' factor)*
//   factor:= number ['/' number] | var ['^' int]
// Variable names come from the VarTable (longest match).

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

Int parse_uint(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        ++c.pos;
    if (c.pos == start)
        throw parse_error("expected number at position " + std::to_string(start) + " in '" + c.s + "'");
    return Int(c.s.substr(start, c.pos - start));
}

int parse_int_exponent(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '-') {
        neg = true;
        ++c.pos;
    }
    Int v = parse_uint(c);
    if (v > 1000000)
        throw parse_error("exponent too large");
    int r = static_cast<int>(v);
    return neg ? -r : r;
}

// Longest-match variable name at the cursor, or -1.
int match_var(Cursor& c, const VarTable& vars, size_t* len) {
    c.skip_ws();
    int best = -1;
    size_t best_len = 0;
    for (size_t i = 0; i < vars.names.size(); ++i) {
        const std::string& n = vars.names[i];
        if (c.s.compare(c.pos, n.size(), n) == 0 && n.size() > best_len) {
            best = static_cast<int>(i);
            best_len = n.size();
        }
    }
    *len = best_len;
    return best;
}

Polynomial parse_term(Cursor& c, const VarTable& vars, int nvars) {
    Rat coeff = 1;
    Exponents e(nvars, 0);
    bool expect_factor = true;
    while (expect_factor) {
        c.skip_ws();
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Int num = parse_uint(c);
            if (c.peek() == '/') {
                ++c.pos;
                Int den = parse_uint(c);
                if (den == 0)
                    throw parse_error("zero denominator");
                coeff *= Rat(num, den);
            } else {
                coeff *= Rat(num);
            }
        } else {
            size_t len = 0;
            int v = match_var(c, vars, &len);
            if (v < 0)
                throw parse_error("expected factor at position " + std::to_string(c.pos) + " in '" + c.s + "'");
            c.pos += len;
            int p = 1;
            if (c.peek() == '^') {
                ++c.pos;
                p = parse_int_exponent(c);
                if (p < 0)
                    throw parse_error("negative exponent in polynomial");
            }
            e.at(v) += p;
        }
        if (c.peek() == '*') {
            ++c.pos;
        } else {
            expect_factor = false;
        }
    }
    return Polynomial::monomial(nvars, e, coeff);
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarTable& vars) {
    int nvars = static_cast<int>(vars.names.size());
    Cursor c{text};
    Polynomial p(nvars);
    if (c.eof())
        return p;
    // Special case "0".
    int sign = 1;
    if (c.peek() == '-') {
        sign = -1;
        ++c.pos;
    } else if (c.peek() == '+') {
        ++c.pos;
    }
    while (true) {
        Polynomial t = parse_term(c, vars, nvars);
        p += (sign < 0) ? -t : t;
        if (c.eof())
            break;
        char ch = c.peek();
        if (ch == '+') {
            sign = 1;
            ++c.pos;
        } else if (ch == '-') {
            sign = -1;
            ++c.pos;
        } else {
            throw parse_error("unexpected character '" + std::string(1, ch) + "' in '" + text + "'");
        }
    }
    return p;
}

} // namespace spinobstruct
