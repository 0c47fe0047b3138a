#include "spinobstruct/presentation.hpp"

#include "spinobstruct/polynomial.hpp" // parse_error

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace spinobstruct::groups {

Word inverse_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back(-*it);
    return r;
}

Word free_reduce(const Word& w) {
    Word r;
    for (int g : w) {
        if (!r.empty() && r.back() == -g)
            r.pop_back();
        else
            r.push_back(g);
    }
    return r;
}

int Presentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name)
            return static_cast<int>(i) + 1;
    return 0;
}

IntMatrix Presentation::relator_exponent_matrix() const {
    IntMatrix m;
    for (const auto& r : relators) {
        std::vector<Int> row(generators.size(), 0);
        for (int g : r)
            row[std::abs(g) - 1] += (g > 0) ? 1 : -1;
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Int> Presentation::exponent_vector(const Word& w) const {
    std::vector<Int> row(generators.size(), 0);
    for (int g : w)
        row[std::abs(g) - 1] += (g > 0) ? 1 : -1;
    return row;
}

void Presentation::validate() const {
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.empty())
            throw std::invalid_argument("empty generator name");
        if (!seen.insert(g).second)
            throw std::invalid_argument("duplicate generator name '" + g + "'");
    }
    for (const auto& r : relators)
        for (int g : r)
            if (g == 0 || std::abs(g) > num_generators())
                throw std::invalid_argument("relator references unknown generator");
}

namespace {

struct WordCursor {
    const std::string& s;
    const Presentation& p;
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

int parse_signed_int(WordCursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '-') {
        neg = true;
        ++c.pos;
    }
    c.skip_ws();
    size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        ++c.pos;
    if (c.pos == start)
        throw parse_error("expected integer in word '" + c.s + "'");
    int v = std::stoi(c.s.substr(start, c.pos - start));
    return neg ? -v : v;
}

Word repeat_word(const Word& w, int power) {
    if (power == 0)
        return {};
    Word base = power > 0 ? w : inverse_word(w);
    Word r;
    for (int k = 0; k < std::abs(power); ++k)
        r.insert(r.end(), base.begin(), base.end());
    return r;
}

Word parse_word_cursor(WordCursor& c, bool stop_at_paren);

// atom := generator | '1' | '(' word ')' ; returns the atom's word
Word parse_atom(WordCursor& c) {
    c.skip_ws();
    if (c.peek() == '1') {
        ++c.pos;
        return {};
    }
    if (c.peek() == '(') {
        ++c.pos;
        Word inner = parse_word_cursor(c, true);
        if (c.peek() != ')')
            throw parse_error("missing ')' in word '" + c.s + "'");
        ++c.pos;
        return inner;
    }
    // Longest generator-name match at the cursor.
    int best = 0;
    size_t best_len = 0;
    for (size_t i = 0; i < c.p.generators.size(); ++i) {
        const std::string& name = c.p.generators[i];
        if (c.s.compare(c.pos, name.size(), name) == 0 && name.size() > best_len) {
            best = static_cast<int>(i) + 1;
            best_len = name.size();
        }
    }
    if (best == 0)
        throw parse_error("unknown generator at position " + std::to_string(c.pos) + " in '" + c.s + "'");
    c.pos += best_len;
    return Word{best};
}

Word parse_word_cursor(WordCursor& c, bool stop_at_paren) {
    Word out;
    while (!c.eof()) {
        char ch = c.peek();
        if (ch == ')' && stop_at_paren)
            break;
        if (ch == '=')
            break;
        Word atom = parse_atom(c);
        int power = 1;
        // optional power: "^int" or a bare "-int" suffix (the "t-1" form)
        if (c.pos < c.s.size() && c.s[c.pos] == '^') {
            ++c.pos;
            power = parse_signed_int(c);
        } else if (c.pos + 1 < c.s.size() && c.s[c.pos] == '-' &&
                   std::isdigit(static_cast<unsigned char>(c.s[c.pos + 1]))) {
            ++c.pos;
            size_t start = c.pos;
            while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
                ++c.pos;
            power = -std::stoi(c.s.substr(start, c.pos - start));
        }
        Word rep = repeat_word(atom, power);
        out.insert(out.end(), rep.begin(), rep.end());
    }
    return out;
}

} // namespace

Word parse_word(const std::string& text, const Presentation& p) {
    WordCursor c{text, p};
    Word w = parse_word_cursor(c, false);
    if (!c.eof())
        throw parse_error("trailing input in word '" + text + "'");
    return w;
}

std::vector<Word> parse_relator(const std::string& text, const Presentation& p) {
    WordCursor c{text, p};
    std::vector<Word> sides;
    sides.push_back(parse_word_cursor(c, false));
    while (c.peek() == '=') {
        ++c.pos;
        sides.push_back(parse_word_cursor(c, false));
    }
    if (!c.eof())
        throw parse_error("trailing input in relator '" + text + "'");
    std::vector<Word> out;
    if (sides.size() == 1) {
        out.push_back(free_reduce(sides[0]));
    } else {
        for (size_t i = 0; i + 1 < sides.size(); ++i) {
            Word r = sides[i];
            Word inv = inverse_word(sides[i + 1]);
            r.insert(r.end(), inv.begin(), inv.end());
            out.push_back(free_reduce(r));
        }
    }
    return out;
}

std::string word_to_string(const Word& w, const Presentation& p) {
    if (w.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += " ";
        out += p.generators.at(std::abs(w[i]) - 1);
        if (w[i] < 0)
            out += "^-1";
    }
    return out;
}

Presentation make_presentation(const std::vector<std::string>& generators,
                               const std::vector<std::string>& relator_texts) {
    Presentation p;
    p.generators = generators;
    p.validate();
    for (const auto& text : relator_texts) {
        for (auto& r : parse_relator(text, p))
            p.relators.push_back(std::move(r));
    }
    p.validate();
    return p;
}

} // namespace spinobstruct::groups
