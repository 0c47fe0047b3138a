#pragma once

#include "spinobstruct/snf.hpp"

#include <string>
#include <vector>

namespace spinobstruct::groups {

/// A word in the free group on a presentation's generators: a sequence of
/// signed 1-based generator indices (+g for g, -g for g^-1).
using Word = std::vector<int>;

Word inverse_word(const Word& w);
Word free_reduce(const Word& w);

/// A finitely presented group. Relators are words equal to the identity.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int num_generators() const { return static_cast<int>(generators.size()); }
    int generator_index(const std::string& name) const; // 1-based, 0 if unknown

    /// Exponent-sum matrix: one row per relator, one column per generator.
    IntMatrix relator_exponent_matrix() const;
    std::vector<Int> exponent_vector(const Word& w) const;

    void validate() const; // unique names, indices in range
};

/// Parse a relator string. Supported forms:
///   "s s s t-1 t-1"      letters with optional -1 suffixes
///   "(st)^2 s^-3"        parenthesized subwords and ^ powers
///   "a b a-1 b-1"
///   "(st)^2 = s^3 = t^5" equality chains (expands to w1 w2^-1, w2 w3^-1, ...)
/// Generator names are matched greedily (longest declared name first), so
/// juxtaposition like "st" works for single-letter names.
std::vector<Word> parse_relator(const std::string& text, const Presentation& p);

/// Parse a word (no '=' allowed).
Word parse_word(const std::string& text, const Presentation& p);

std::string word_to_string(const Word& w, const Presentation& p);

/// Convenience constructor: parses each relator string (an '=' chain expands
/// to several relators).
Presentation make_presentation(const std::vector<std::string>& generators,
                               const std::vector<std::string>& relator_texts);

} // namespace spinobstruct::groups
