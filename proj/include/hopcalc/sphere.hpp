#pragma once

// Homotopy of free simplicial algebras over GF(2): admissible generator
// bases for pi_* S(n), weight-graded E1 pages over a graded space W, the
// delta_i action on the E1 page, and the degree-lowering-by-one operation
// vartheta = alpha_1 used for nilpotence analysis.

#include "hopcalc/adem.hpp"
#include "hopcalc/gamma.hpp"

#include <map>

namespace hopcalc {

// Connected graded vector space: named generators in degrees >= 1.
struct GradedVectorSpace {
    struct Gen {
        std::string name;
        Index degree = 1;
    };
    std::vector<Gen> generators;

    void validate() const;  // throws parse_error on bad degrees or duplicate names

    // {"generators":[{"name":"y","degree":4}, ...]}
    static GradedVectorSpace from_json_text(const std::string& text);
};

// An admissible word of excess < n, standing for delta_I(iota_n).
struct SphereGenerator {
    DeltaWord word;
    Index source = 1;

    Index degree() const { return source + word.degree(); }
    auto operator<=>(const SphereGenerator&) const = default;
};

// All admissible words of degree <= max_degree, sorted by (degree, word);
// with excess_below >= 0 only words of excess < excess_below are kept.
std::vector<DeltaWord> admissible_words(Index max_degree, Index excess_below = -1);

// Generators delta_I(iota_n) of pi_* S(n) in total degree <= max_degree,
// including the empty word (iota_n itself).
std::vector<SphereGenerator> sphere_generators(Index n, Index max_degree);

// Dimension series of pi_* S(n), computed by basis enumeration in the
// divided power algebra on the sphere generators.
DimensionSeries sphere_poincare(Index n, Index max_degree);

// The admissible word equal to alpha_{n-2}^t applied to iota_n; requires
// n >= 3, t >= 1.
SphereGenerator alpha_power(Index n, Index t);

// Bigraded E1 table: cell (s, t) holds the weight-s, degree-t monomials.
struct E1Page {
    Index s_max = 0;
    Index t_max = 0;
    std::map<std::pair<Index, Index>, std::vector<GammaMonomial>> cells;
};

// The divided power algebra on generators delta_I(w), w in W, I admissible
// with excess(I) < deg w. Generators are interned on demand so that
// operation values landing beyond any enumeration bound still have a home.
class FreeHomotopy {
public:
    explicit FreeHomotopy(GradedVectorSpace w);

    // pi_* S(n): W is a single generator named i<n>.
    static FreeHomotopy sphere(Index n);

    const GradedVectorSpace& space() const { return w_; }
    const GammaAlgebra& algebra() const { return alg_; }

    // (index into W, word) for an interned generator.
    const std::pair<int, DeltaWord>& generator_info(int gen_index) const {
        return info_.at(static_cast<std::size_t>(gen_index));
    }

    int intern(int w_index, DeltaWord word);
    GammaMonomial generator_monomial(int w_index, const DeltaWord& word);

    // Registers every generator of total degree <= t_max.
    void extend(Index t_max);

    E1Page e1_page(Index s_max, Index t_max);

    // delta_i on a basis monomial of degree t, 2 <= i <= t. Output lands in
    // weight 2s, degree t+i. On a single factor the action runs through the
    // rewriting engine; terms of excess equal to deg w re-enter as divided
    // squares of shorter words, terms of larger excess act as zero. Genuine
    // products of positive-degree factors are killed for i < t.
    GammaElement delta(const GammaMonomial& x, Index i);

    // Linear extension for i < t; gamma_2 (with its cross terms) at i = t.
    // Requires x homogeneous.
    GammaElement delta(const GammaElement& x, Index i);

    // vartheta = alpha_1 = delta_{m-1} on homogeneous degree m >= 3.
    GammaElement vartheta(const GammaElement& x);

    // q_gamma(vartheta^k(start)) for k = 0..steps; vartheta acts as zero on
    // degrees below 3.
    std::vector<GammaElement> vartheta_iterates_qgamma(const GammaMonomial& start, int steps);

private:
    GradedVectorSpace w_;
    GammaAlgebra alg_;
    std::vector<std::pair<int, DeltaWord>> info_;
    std::map<std::pair<int, DeltaWord>, int> lookup_;
    Rewriter rw_;
};

}  // namespace hopcalc
