#pragma once

// The rewriting engine: normalizes composite delta-words to GF(2) sums of
// admissible words, and searches annihilation orders for the power ladders
// theta(s,t) = delta_{2^s} ... delta_{2^{t+1}}.

#include "hopcalc/words.hpp"

#include <map>
#include <optional>
#include <utility>

namespace hopcalc {

// GF(2) sum whose keys are admissible words of one common (degree, weight).
using AdmissibleSum = F2Sum<DeltaWord>;

// Owns the memoized relation table. Rewriting is a pure function of its
// input; separate Rewriter instances may run concurrently.
class Rewriter {
public:
    // The length-2 relation for delta_i delta_j. For i >= 2j the pair is
    // already admissible; otherwise
    //   delta_i delta_j = sum_k binom(j-i+k-1, j-k) delta_{i+j-k} delta_k
    // over ceil((i+1)/2) <= k <= floor((i+j)/3), taken mod 2. Every
    // replacement word has k < j, so rewriting terminates.
    const AdmissibleSum& pair(Index i, Index j);

    // Normal form: rewrites the leftmost reducible pair until every
    // surviving word is admissible. Degree and weight are preserved.
    AdmissibleSum normalize(const DeltaWord& w);
    AdmissibleSum normalize(const AdmissibleSum& s);

    // Normal form of the concatenation, extended bilinearly.
    AdmissibleSum compose(const AdmissibleSum& a, const AdmissibleSum& b);

private:
    std::map<std::pair<Index, Index>, AdmissibleSum> pair_table_;
    std::map<DeltaWord, AdmissibleSum> word_cache_;
};

// Thread-local shared instance behind the free-function entry points.
Rewriter& shared_rewriter();

AdmissibleSum normalize(const DeltaWord& w);
AdmissibleSum compose(const AdmissibleSum& a, const AdmissibleSum& b);

// theta(s,t) = (2^s, 2^{s-1}, ..., 2^{t+1}); requires s > t >= 0.
DeltaWord theta_word(Index s, Index t);

// Default search bound for annihilation orders: s <= t + 16.
inline constexpr Index theta_cap_slack = 16;

// Least s > t with theta(s,t) . delta_i = 0, searched up to `cap`
// (default t + 16). Requires i >= 2, t >= 1 and 2^t < i; std::nullopt
// means the cap was too small, not that no order exists.
std::optional<Index> annihilation_order(Index i, Index t,
                                        std::optional<Index> cap = std::nullopt);

// Least s > t with theta(s,t) . delta_I = 0 for an admissible word I;
// requires 1 <= t < length(I).
std::optional<Index> annihilation_order_word(const DeltaWord& word, Index t,
                                             std::optional<Index> cap = std::nullopt);

}  // namespace hopcalc
