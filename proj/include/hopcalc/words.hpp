#pragma once

// Operation words in delta- and alpha-indexing: statistics, admissibility,
// applicability, index conversions, and the text syntax used by the CLI.

#include "hopcalc/gf2.hpp"

#include <compare>
#include <optional>
#include <string>

namespace hopcalc {

// Composite word delta_{i1} ... delta_{ir}, outermost first; indices >= 2.
// The empty word is the identity operation.
struct DeltaWord {
    std::vector<Index> idx;

    DeltaWord() = default;
    explicit DeltaWord(std::vector<Index> indices) : idx(std::move(indices)) {}

    bool empty() const { return idx.empty(); }
    std::size_t length() const { return idx.size(); }

    Index degree() const;
    Index excess() const;  // i1 - i2 - ... - ir, 0 for the empty word
    Index weight() const;  // 2^length
    bool admissible() const;

    auto operator<=>(const DeltaWord&) const = default;
};

struct WordStats {
    Index degree = 0;
    Index excess = 0;
    Index weight = 1;
    bool operator==(const WordStats&) const = default;
};

WordStats statistics(const DeltaWord& w);

// Composite word alpha_{t1} ... alpha_{tr}, outermost first. Index 0 marks
// the divided square (alpha_0 = gamma_2); it can come out of conversions
// but is rejected by the free-word text syntax.
struct AlphaWord {
    std::vector<Index> idx;

    AlphaWord() = default;
    explicit AlphaWord(std::vector<Index> indices) : idx(std::move(indices)) {}

    bool empty() const { return idx.empty(); }
    std::size_t length() const { return idx.size(); }

    bool normal() const;  // t1 <= t2 <= ... <= tr
    bool has_divided_square() const;

    auto operator<=>(const AlphaWord&) const = default;
};

// True iff the word can be applied to a class of degree n: reading right to
// left, each delta_i needs 2 <= i <= (current degree).
bool is_applicable(const DeltaWord& w, Index n);

// delta_i on a degree-m class is alpha_{m-i}; conversion runs right to left
// with the running degree starting at n. Throws std::invalid_argument when a
// step leaves the legal range (t in [0, m-2]).
AlphaWord delta_to_alpha(const DeltaWord& w, Index n);

// Exact inverse of delta_to_alpha at the same source degree.
DeltaWord alpha_to_delta(const AlphaWord& w, Index n);

DeltaWord concat(const DeltaWord& a, const DeltaWord& b);

// Text syntax: "d4 d2" (delta form) or "a1 a1 @3" (alpha form at source
// degree 3). Delta indices must be >= 2, alpha indices >= 1.
struct WordInput {
    bool alpha = false;
    std::vector<Index> indices;
    std::optional<Index> source_degree;
};

WordInput parse_word(const std::string& text);

std::string to_string(const DeltaWord& w);        // "d4 d2", "" for empty
std::string to_paren_string(const DeltaWord& w);  // "(4 2)", "()"
std::string to_string(const AlphaWord& w);        // "a1 a1"

}  // namespace hopcalc
