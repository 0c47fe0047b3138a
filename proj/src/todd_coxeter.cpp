#include "spinobstruct/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace spinobstruct::groups {

namespace {

// Generator letters are encoded as columns 0..2g-1: column 2*(i-1) for g_i,
// column 2*(i-1)+1 for g_i^-1.
int column_of(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}
int inverse_column(int col) {
    return col ^ 1;
}

struct Enumerator {
    int ncols;
    long long cap;
    std::vector<std::vector<int>> table; // -1 = undefined
    std::vector<int> parent;             // union-find for coincidences
    std::vector<Word> defword;           // definition word per coset (letters)
    long long defined = 0;

    explicit Enumerator(int ngens, long long cap) : ncols(2 * ngens), cap(cap) {
        new_coset({});
    }

    int find(int c) {
        while (parent[c] != c)
            c = parent[c] = parent[parent[c]];
        return c;
    }

    bool alive(int c) { return parent[c] == c; }

    int new_coset(Word w) {
        if (++defined > cap)
            throw coset_limit_exceeded(cap);
        table.emplace_back(ncols, -1);
        parent.push_back(static_cast<int>(parent.size()));
        defword.push_back(std::move(w));
        return static_cast<int>(table.size()) - 1;
    }

    int entry(int c, int col) {
        int x = table[c][col];
        return x < 0 ? -1 : find(x);
    }

    std::deque<std::pair<int, int>> pending;

    // Record c1.col = c2 (and the inverse edge); queue a coincidence if a
    // conflicting entry exists.
    void deduce(int c1, int col, int c2) {
        int e = entry(c1, col);
        if (e >= 0) {
            if (e != c2)
                pending.emplace_back(e, c2);
        } else {
            table[c1][col] = c2;
        }
        int icol = inverse_column(col);
        int f = entry(c2, icol);
        if (f >= 0) {
            if (f != c1)
                pending.emplace_back(f, c1);
        } else {
            table[c2][icol] = c1;
        }
    }

    void process_coincidences() {
        while (!pending.empty()) {
            auto [a, b] = pending.front();
            pending.pop_front();
            a = find(a);
            b = find(b);
            if (a == b)
                continue;
            if (b < a)
                std::swap(a, b);
            // merge b into a
            parent[b] = a;
            for (int col = 0; col < ncols; ++col) {
                int d = table[b][col];
                if (d < 0)
                    continue;
                d = find(d);
                table[b][col] = -1;
                int ra = find(a);
                deduce(ra, col, d);
            }
        }
    }

    // Trace the relator from coset c, defining cosets to fill gaps (HLT
    // scan-and-fill), then close the cycle.
    void scan_and_fill(int c, const std::vector<int>& cols) {
        int f = find(c);
        size_t i = 0;
        int len = static_cast<int>(cols.size());
        while (true) {
            // forward through defined entries
            while (i < cols.size()) {
                int nxt = entry(f, cols[i]);
                if (nxt < 0)
                    break;
                f = nxt;
                ++i;
            }
            if (i == cols.size()) {
                int root = find(c);
                if (f != root) {
                    pending.emplace_back(f, root);
                    process_coincidences();
                }
                return;
            }
            // backward from the end
            int b = find(c);
            int j = len;
            while (j > static_cast<int>(i) + 1) {
                int prv = entry(b, inverse_column(cols[j - 1]));
                if (prv < 0)
                    break;
                b = prv;
                --j;
            }
            if (j == static_cast<int>(i) + 1) {
                // a single gap: deduction closes the relator cycle
                deduce(f, cols[i], b);
                process_coincidences();
                return;
            }
            // define a new coset for the first undefined forward entry
            Word w = defword[f];
            w.push_back(cols[i]);
            int n = new_coset(std::move(w));
            deduce(f, cols[i], n);
            process_coincidences();
            f = find(f);
        }
    }
};

} // namespace

FiniteGroup todd_coxeter(const Presentation& p, long long max_cosets) {
    if (max_cosets < 1)
        throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
    p.validate();
    int ngens = p.num_generators();
    std::vector<std::vector<int>> relator_cols;
    for (const auto& r : p.relators) {
        std::vector<int> cols;
        for (int letter : free_reduce(r))
            cols.push_back(column_of(letter));
        if (!cols.empty())
            relator_cols.push_back(std::move(cols));
    }

    Enumerator en(ngens, max_cosets);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < static_cast<int>(en.table.size()); ++c) {
            if (!en.alive(c))
                continue;
            for (const auto& cols : relator_cols) {
                if (!en.alive(c))
                    break;
                en.scan_and_fill(c, cols);
            }
            if (!en.alive(c))
                continue;
            for (int col = 0; col < en.ncols; ++col) {
                if (!en.alive(c))
                    break;
                if (en.entry(c, col) < 0) {
                    Word w = en.defword[c];
                    w.push_back(col);
                    int n = en.new_coset(std::move(w));
                    en.deduce(c, col, n);
                    en.process_coincidences();
                    changed = true;
                }
            }
        }
    }

    // Collect alive cosets and renumber them in definition order.
    std::vector<int> alive;
    std::vector<int> newid(en.table.size(), -1);
    for (int c = 0; c < static_cast<int>(en.table.size()); ++c) {
        if (en.alive(c)) {
            newid[c] = static_cast<int>(alive.size());
            alive.push_back(c);
        }
    }
    int n = static_cast<int>(alive.size());

    auto trace = [&](int start, const Word& cols) {
        int c = start;
        for (int col : cols) {
            c = en.entry(c, col);
            if (c < 0)
                throw std::logic_error("todd_coxeter: incomplete table after enumeration");
        }
        return c;
    };

    // Sanity: tracing each coset's defining word from the identity must
    // return that coset.
    for (int c : alive)
        if (trace(0, en.defword[c]) != c)
            throw std::logic_error("todd_coxeter: defining word inconsistent");

    // Regular representation: the element of coset b maps coset 0 to b, so
    // the product (a, b) is coset a traced along b's defining word.
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = newid[trace(alive[i], en.defword[alive[j]])];

    std::vector<std::string> labels;
    for (int c : alive) {
        const Word& cols = en.defword[c];
        if (cols.empty()) {
            labels.push_back("e");
            continue;
        }
        std::string s;
        for (int col : cols) {
            if (!s.empty())
                s += " ";
            s += p.generators[col / 2];
            if (col % 2)
                s += "^-1";
        }
        labels.push_back(s);
    }

    std::vector<int> gens;
    for (int g = 1; g <= ngens; ++g)
        gens.push_back(newid[en.entry(0, column_of(g))]);

    return FiniteGroup(std::move(table), 0, std::move(labels), std::move(gens));
}

} // namespace spinobstruct::groups
