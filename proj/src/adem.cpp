#include "hopcalc/adem.hpp"

namespace hopcalc {

const AdmissibleSum& Rewriter::pair(Index i, Index j) {
    if (i < 2 || j < 2)
        throw std::invalid_argument("Rewriter::pair: indices must be >= 2");
    const auto key = std::make_pair(i, j);
    if (auto it = pair_table_.find(key); it != pair_table_.end())
        return it->second;
    AdmissibleSum out;
    if (i >= 2 * j) {
        out.toggle(DeltaWord{{i, j}});
    } else {
        const Index k_lo = (i + 2) / 2;  // ceil((i+1)/2)
        const Index k_hi = (i + j) / 3;
        for (Index k = k_lo; k <= k_hi; ++k)
            if (binom_mod2(j - i + k - 1, j - k))
                out.toggle(DeltaWord{{i + j - k, k}});
    }
    return pair_table_.emplace(key, std::move(out)).first->second;
}

namespace {

// Position of the leftmost reducible adjacent pair, or npos.
std::size_t first_reducible(const DeltaWord& w) {
    for (std::size_t q = 0; q + 1 < w.idx.size(); ++q)
        if (w.idx[q] < 2 * w.idx[q + 1])
            return q;
    return static_cast<std::size_t>(-1);
}

}  // namespace

AdmissibleSum Rewriter::normalize(const DeltaWord& w) {
    if (w.admissible())
        return AdmissibleSum(w);
    if (auto it = word_cache_.find(w); it != word_cache_.end())
        return it->second;

    AdmissibleSum result;
    AdmissibleSum pending(w);
    while (!pending.is_zero()) {
        DeltaWord cur = pending.keys.back();
        pending.keys.pop_back();
        if (cur.admissible()) {
            result.toggle(cur);
            continue;
        }
        if (auto it = word_cache_.find(cur); it != word_cache_.end()) {
            result += it->second;
            continue;
        }
        const std::size_t q = first_reducible(cur);
        const AdmissibleSum& rel = pair(cur.idx[q], cur.idx[q + 1]);
        for (const DeltaWord& pr : rel.keys) {
            DeltaWord next = cur;
            next.idx[q] = pr.idx[0];
            next.idx[q + 1] = pr.idx[1];
            pending.toggle(next);
        }
    }
    word_cache_.emplace(w, result);
    return result;
}

AdmissibleSum Rewriter::normalize(const AdmissibleSum& s) {
    AdmissibleSum out;
    for (const DeltaWord& w : s.keys)
        out += normalize(w);
    return out;
}

AdmissibleSum Rewriter::compose(const AdmissibleSum& a, const AdmissibleSum& b) {
    AdmissibleSum out;
    for (const DeltaWord& u : a.keys)
        for (const DeltaWord& v : b.keys)
            out += normalize(concat(u, v));
    return out;
}

Rewriter& shared_rewriter() {
    thread_local Rewriter rw;
    return rw;
}

AdmissibleSum normalize(const DeltaWord& w) {
    return shared_rewriter().normalize(w);
}

AdmissibleSum compose(const AdmissibleSum& a, const AdmissibleSum& b) {
    return shared_rewriter().compose(a, b);
}

DeltaWord theta_word(Index s, Index t) {
    if (t < 0 || s <= t)
        throw std::invalid_argument("theta_word: requires s > t >= 0");
    if (s > 62)
        throw std::invalid_argument("theta_word: exponent too large");
    DeltaWord out;
    for (Index e = s; e > t; --e)
        out.idx.push_back(Index{1} << e);
    return out;
}

std::optional<Index> annihilation_order(Index i, Index t, std::optional<Index> cap) {
    if (i < 2 || t < 1)
        throw std::invalid_argument("annihilation_order: requires i >= 2 and t >= 1");
    if ((Index{1} << t) >= i)
        throw std::invalid_argument("annihilation_order: requires 2^t < i");
    const Index bound = cap.value_or(t + theta_cap_slack);
    Rewriter& rw = shared_rewriter();
    for (Index s = t + 1; s <= bound; ++s) {
        if (rw.normalize(concat(theta_word(s, t), DeltaWord{{i}})).is_zero())
            return s;
    }
    return std::nullopt;
}

std::optional<Index> annihilation_order_word(const DeltaWord& word, Index t,
                                             std::optional<Index> cap) {
    if (word.empty() || !word.admissible())
        throw std::invalid_argument("annihilation_order_word: word must be admissible and nonempty");
    if (t < 1 || t >= static_cast<Index>(word.length()))
        throw std::invalid_argument("annihilation_order_word: requires 1 <= t < length");
    const Index bound = cap.value_or(t + theta_cap_slack);
    Rewriter& rw = shared_rewriter();
    for (Index s = t + 1; s <= bound; ++s) {
        if (rw.normalize(concat(theta_word(s, t), word)).is_zero())
            return s;
    }
    return std::nullopt;
}

}  // namespace hopcalc
