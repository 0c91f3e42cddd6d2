#pragma once

// Free divided power algebras over GF(2) on graded generator sets. A basis
// monomial is a square-free set of pairs (generator, level e), the pair
// standing for gamma_{2^e}(g); general gamma_k decodes through the binary
// expansion of k, which over GF(2) makes every structure constant 0 or 1.

#include "hopcalc/gf2.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopcalc {

struct Generator {
    std::string name;
    Index degree = 1;
    Index weight = 1;
};

// (generator index, level e) with level e >= 1 only for degree >= 2.
using GammaFactor = std::pair<int, int>;
using GammaMonomial = std::vector<GammaFactor>;  // sorted, square-free
using GammaElement = F2Sum<GammaMonomial>;

inline GammaElement gamma_unit() { return GammaElement(GammaMonomial{}); }

class GammaAlgebra {
public:
    GammaAlgebra() = default;
    explicit GammaAlgebra(std::vector<Generator> gens);

    int add_generator(Generator g);
    const Generator& generator(int index) const { return gens_.at(static_cast<std::size_t>(index)); }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    Index degree(const GammaMonomial& m) const;
    Index weight(const GammaMonomial& m) const;

    // Common degree of all monomials; nullopt for mixed degrees. The zero
    // element reports degree 0.
    std::optional<Index> pure_degree(const GammaElement& x) const;

    // Product of monomials: factor sets merge; a repeated (g, e) pair has
    // even binomial coefficient and kills the term.
    GammaElement multiply(const GammaMonomial& a, const GammaMonomial& b) const;
    GammaElement multiply(const GammaElement& a, const GammaElement& b) const;

    // gamma_k, extended over sums by gamma_k(x+y) = sum gamma_r(x)gamma_s(y).
    // For k >= 2 every monomial must have degree >= 2; gamma_{>=2} of a
    // product of positive-degree factors vanishes.
    GammaElement gamma(Index k, const GammaElement& x) const;

    // All square-free monomials of the exact degree, sorted.
    std::vector<GammaMonomial> basis(Index degree) const;

    // All monomials with degree <= max_degree (and weight <= max_weight
    // when max_weight >= 0), including the unit.
    std::vector<GammaMonomial> enumerate(Index max_degree, Index max_weight = -1) const;

    DimensionSeries poincare(Index max_degree) const;

    // Gamma-indecomposables: keeps single level-0 factors, kills products
    // and divided-power images.
    GammaElement q_gamma(const GammaElement& x) const;

    std::string label(const GammaMonomial& m) const;
    std::string label(const GammaElement& x) const;

    // Generator lists as JSON: [{"name": .., "degree": .., "weight"?: ..}]
    static GammaAlgebra from_json_text(const std::string& text);
    std::string to_json_text() const;

private:
    std::vector<Generator> gens_;
};

}  // namespace hopcalc
