#pragma once

// Chain-level divided power calculus over a truncated local coefficient
// ring: boundaries through the Leibniz rule and d gamma_k(x) = (dx)
// gamma_{k-1}(x), gamma operations on chain elements, gamma_2 nilpotence
// orders, and the mechanized boundary/vartheta compatibility check.

#include "hopcalc/gf2.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopcalc::chains {

// GF(2)[e1..e_vars] with every monomial of total degree >= trunc set to
// zero, so the maximal ideal m = (e1..e_vars) satisfies m^trunc = 0.
struct TruncatedRing {
    int vars = 0;
    Index trunc = 1;
};

using RingMonomial = std::vector<int>;  // exponents, size = vars
using RingElem = F2Sum<RingMonomial>;

// (symbol index, level e) for gamma_{2^e}(symbol); square-free, sorted.
using ChainFactor = std::pair<int, int>;
using ChainMonomial = std::vector<ChainFactor>;
using ChainTerm = std::pair<RingMonomial, ChainMonomial>;
using ChainElement = F2Sum<ChainTerm>;

struct ChainSymbol {
    std::string name;
    Index degree = 0;
    ChainElement boundary;  // chain degree one lower; zero by default
};

// Step record for the boundary/vartheta compatibility check at one power r.
struct NilcondStep {
    Index r = 0;
    bool axioms_apply = false;    // every boundary/Theta exchange was in range
    bool matches_power = false;   // evaluated value equals gamma_2^r(du)
    bool power_is_cycle = false;  // gamma_2^r(du) is a boundary-free cycle
    bool ok() const { return axioms_apply && matches_power && power_is_cycle; }
};

struct NilcondReport {
    std::vector<NilcondStep> steps;
    bool all_ok() const {
        for (const auto& s : steps)
            if (!s.ok())
                return false;
        return !steps.empty();
    }
};

class ChainAlgebra {
public:
    explicit ChainAlgebra(TruncatedRing ring);

    const TruncatedRing& ring() const { return ring_; }

    int add_symbol(std::string name, Index degree);
    void set_boundary(int symbol, ChainElement b);
    int symbol_index(const std::string& name) const;  // -1 when absent
    const ChainSymbol& symbol(int index) const { return symbols_.at(static_cast<std::size_t>(index)); }
    int symbol_count() const { return static_cast<int>(symbols_.size()); }

    // building blocks
    RingMonomial ring_one() const { return RingMonomial(static_cast<std::size_t>(ring_.vars), 0); }
    RingMonomial ring_var(int v, int power = 1) const;
    ChainElement unit() const { return ChainElement({ring_one(), {}}); }
    ChainElement symbol_element(int index) const { return ChainElement({ring_one(), {{index, 0}}}); }
    ChainElement term(RingMonomial c, ChainMonomial m) const;

    Index term_degree(const ChainTerm& t) const;  // chain degree of the gamma part
    std::optional<Index> pure_degree(const ChainElement& x) const;

    ChainElement multiply(const ChainElement& a, const ChainElement& b) const;

    // Linear boundary: Leibniz over factors, d gamma_{2^e}(s) =
    // (ds) gamma_{2^e - 1}(s), ring coefficients pass through.
    ChainElement boundary(const ChainElement& x) const;

    // gamma_k with the sum rule, coefficient extraction gamma_k(c x) =
    // c^k gamma_k(x), vanishing on decomposables, and binary level decoding.
    // For k >= 2 every term must have chain degree >= 2.
    ChainElement gamma(Index k, const ChainElement& x) const;

    // Drops terms whose gamma part has two or more factors.
    ChainElement indecomposable_part(const ChainElement& x) const;

    // Least r with gamma_2^r(u) = 0. Requires every coefficient in the
    // maximal ideal and every term of chain degree >= 2.
    Index nilpotence_order(const ChainElement& u, Index hard_cap = 64) const;

    // Checks d vartheta^r(u) = gamma_2^r(du) for r = 1..r_max by pushing the
    // boundary through the formal Theta tower one axiom at a time; each
    // Theta then lands exactly on its top index and rewrites to gamma_2.
    NilcondReport verify_nilcond(int symbol, Index r_max) const;

    // Throws when a declared boundary has the wrong degree or dd != 0.
    void check_boundaries() const;

    // text form: terms joined by '+', factors by '*'; factors are ring
    // variables e1, e2^3, ..., symbols, or gK(symbol); "0" is zero.
    ChainElement parse(const std::string& text) const;
    std::string to_string(const ChainElement& x) const;

private:
    TruncatedRing ring_;
    std::vector<ChainSymbol> symbols_;
};

// {"ring":{"vars":1,"trunc":3},
//  "symbols":[{"name":"x","degree":3,"boundary":"v"}, ...]}
ChainAlgebra algebra_from_json_text(const std::string& text);

// Same object with an "element" field; returns the algebra and the element.
std::pair<ChainAlgebra, ChainElement> element_from_json_text(const std::string& text);

}  // namespace hopcalc::chains
