#pragma once

// GF(2) groundwork shared by every other module: binomial parity by the
// binary digit rule, truncated dimension series, and formal GF(2) sums
// over an ordered key type.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hopcalc {

using Index = std::int64_t;

// Raised for malformed text or JSON input anywhere in the library.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// binom(h, k) mod 2: odd iff every binary digit of k sits inside h.
inline bool binom_mod2(Index h, Index k) {
    if (h < 0 || k < 0)
        throw std::invalid_argument("binom_mod2: arguments must be non-negative");
    if (k > h)
        return false;
    const auto hu = static_cast<std::uint64_t>(h);
    const auto ku = static_cast<std::uint64_t>(k);
    return (hu & ku) == ku;
}

// Per-degree dimension counts of a graded object, degrees 0..max_degree.
struct DimensionSeries {
    std::vector<Index> coeff;

    DimensionSeries() = default;
    explicit DimensionSeries(Index max_degree) {
        if (max_degree < 0)
            throw std::invalid_argument("DimensionSeries: negative max_degree");
        coeff.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    }

    Index max_degree() const { return static_cast<Index>(coeff.size()) - 1; }
    Index at(Index d) const { return coeff.at(static_cast<std::size_t>(d)); }
    Index& at(Index d) { return coeff.at(static_cast<std::size_t>(d)); }

    bool operator==(const DimensionSeries&) const = default;
};

// Dimension series of the free divided power algebra on generators of the
// given degrees, truncated at max_degree. Over GF(2) a divided power
// algebra on a generator of degree d >= 2 splits as a product of exterior
// factors on gamma_{2^e}, one per level e; a degree-1 generator is a single
// exterior factor.
inline DimensionSeries series_product_exterior(const std::vector<Index>& generator_degrees,
                                               Index max_degree) {
    DimensionSeries out(max_degree);
    std::vector<Index>& acc = out.coeff;
    acc[0] = 1;
    const auto exterior_factor = [&](Index d) {
        // multiply acc by (1 + t^d), truncated
        for (Index j = max_degree; j >= d; --j)
            acc[static_cast<std::size_t>(j)] += acc[static_cast<std::size_t>(j - d)];
    };
    for (Index d : generator_degrees) {
        if (d < 1)
            throw std::invalid_argument("series_product_exterior: generator degree must be >= 1");
        if (d == 1) {
            exterior_factor(1);
            continue;
        }
        for (Index f = d; f <= max_degree; f *= 2)
            exterior_factor(f);
    }
    return out;
}

// Formal GF(2) linear combination of keys. A key present in `keys` carries
// coefficient 1; addition is symmetric difference.
template <typename K>
struct F2Sum {
    std::vector<K> keys;  // strictly increasing

    F2Sum() = default;
    explicit F2Sum(K k) : keys{std::move(k)} {}

    bool is_zero() const { return keys.empty(); }
    std::size_t size() const { return keys.size(); }

    bool contains(const K& k) const {
        return std::binary_search(keys.begin(), keys.end(), k);
    }

    void toggle(const K& k) {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it != keys.end() && *it == k)
            keys.erase(it);
        else
            keys.insert(it, k);
    }

    F2Sum& operator+=(const F2Sum& other) {
        std::vector<K> merged;
        merged.reserve(keys.size() + other.keys.size());
        std::set_symmetric_difference(keys.begin(), keys.end(),
                                      other.keys.begin(), other.keys.end(),
                                      std::back_inserter(merged));
        keys = std::move(merged);
        return *this;
    }

    friend F2Sum operator+(F2Sum a, const F2Sum& b) {
        a += b;
        return a;
    }

    auto operator<=>(const F2Sum&) const = default;
};

// Builds a sum from an arbitrary key list, cancelling pairs mod 2.
template <typename K>
F2Sum<K> f2_from_keys(std::vector<K> raw) {
    std::sort(raw.begin(), raw.end());
    F2Sum<K> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        std::size_t j = i;
        while (j < raw.size() && raw[j] == raw[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.keys.push_back(raw[i]);
        i = j;
    }
    return out;
}

}  // namespace hopcalc
