#include "hopcalc/words.hpp"

#include <cctype>
#include <sstream>

namespace hopcalc {

Index DeltaWord::degree() const {
    Index sum = 0;
    for (Index i : idx)
        sum += i;
    return sum;
}

Index DeltaWord::excess() const {
    if (idx.empty())
        return 0;
    Index e = idx[0];
    for (std::size_t q = 1; q < idx.size(); ++q)
        e -= idx[q];
    return e;
}

Index DeltaWord::weight() const {
    if (idx.size() > 62)
        throw std::overflow_error("DeltaWord::weight: word too long");
    return Index{1} << idx.size();
}

bool DeltaWord::admissible() const {
    for (std::size_t q = 0; q + 1 < idx.size(); ++q)
        if (idx[q] < 2 * idx[q + 1])
            return false;
    return true;
}

WordStats statistics(const DeltaWord& w) {
    return WordStats{w.degree(), w.excess(), w.weight()};
}

bool AlphaWord::normal() const {
    for (std::size_t q = 0; q + 1 < idx.size(); ++q)
        if (idx[q] > idx[q + 1])
            return false;
    return true;
}

bool AlphaWord::has_divided_square() const {
    for (Index t : idx)
        if (t == 0)
            return true;
    return false;
}

bool is_applicable(const DeltaWord& w, Index n) {
    if (n < 1)
        return false;
    Index m = n;
    for (auto it = w.idx.rbegin(); it != w.idx.rend(); ++it) {
        if (*it < 2 || *it > m)
            return false;
        m += *it;
    }
    return true;
}

AlphaWord delta_to_alpha(const DeltaWord& w, Index n) {
    if (n < 1)
        throw std::invalid_argument("delta_to_alpha: source degree must be >= 1");
    std::vector<Index> alpha(w.idx.size(), 0);
    Index m = n;
    for (std::size_t pos = w.idx.size(); pos-- > 0;) {
        const Index i = w.idx[pos];
        const Index t = m - i;
        if (t < 0 || t > m - 2)
            throw std::invalid_argument("delta_to_alpha: index " + std::to_string(i) +
                                        " is not applicable at degree " + std::to_string(m));
        alpha[pos] = t;
        m += i;
    }
    return AlphaWord{std::move(alpha)};
}

DeltaWord alpha_to_delta(const AlphaWord& w, Index n) {
    if (n < 1)
        throw std::invalid_argument("alpha_to_delta: source degree must be >= 1");
    std::vector<Index> delta(w.idx.size(), 0);
    Index m = n;
    for (std::size_t pos = w.idx.size(); pos-- > 0;) {
        const Index t = w.idx[pos];
        const Index i = m - t;
        if (t < 0 || i < 2 || i > m)
            throw std::invalid_argument("alpha_to_delta: index " + std::to_string(t) +
                                        " is out of range at degree " + std::to_string(m));
        delta[pos] = i;
        m += i;
    }
    return DeltaWord{std::move(delta)};
}

DeltaWord concat(const DeltaWord& a, const DeltaWord& b) {
    DeltaWord out = a;
    out.idx.insert(out.idx.end(), b.idx.begin(), b.idx.end());
    return out;
}

namespace {

Index parse_number(const std::string& tok, std::size_t from) {
    if (from >= tok.size())
        throw parse_error("expected a number in token '" + tok + "'");
    Index value = 0;
    for (std::size_t p = from; p < tok.size(); ++p) {
        if (!std::isdigit(static_cast<unsigned char>(tok[p])))
            throw parse_error("bad token '" + tok + "'");
        value = value * 10 + (tok[p] - '0');
        if (value > (Index{1} << 40))
            throw parse_error("index too large in token '" + tok + "'");
    }
    return value;
}

}  // namespace

WordInput parse_word(const std::string& text) {
    WordInput out;
    bool saw_delta = false;
    bool saw_alpha = false;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == 'd') {
            const Index i = parse_number(tok, 1);
            if (i < 2)
                throw parse_error("delta index must be >= 2 in '" + tok + "'");
            saw_delta = true;
            out.indices.push_back(i);
        } else if (tok[0] == 'a') {
            const Index t = parse_number(tok, 1);
            if (t < 1)
                throw parse_error("alpha index must be >= 1 in '" + tok + "'");
            saw_alpha = true;
            out.indices.push_back(t);
        } else if (tok[0] == '@') {
            if (out.source_degree)
                throw parse_error("duplicate @degree");
            const Index n = parse_number(tok, 1);
            if (n < 1)
                throw parse_error("source degree must be >= 1 in '" + tok + "'");
            out.source_degree = n;
        } else {
            throw parse_error("bad token '" + tok + "'");
        }
    }
    if (saw_delta && saw_alpha)
        throw parse_error("cannot mix delta and alpha indices in one word");
    if (!saw_delta && !saw_alpha)
        throw parse_error("empty operation word");
    out.alpha = saw_alpha;
    return out;
}

std::string to_string(const DeltaWord& w) {
    std::string out;
    for (std::size_t q = 0; q < w.idx.size(); ++q) {
        if (q > 0)
            out += ' ';
        out += 'd';
        out += std::to_string(w.idx[q]);
    }
    return out;
}

std::string to_paren_string(const DeltaWord& w) {
    std::string out = "(";
    for (std::size_t q = 0; q < w.idx.size(); ++q) {
        if (q > 0)
            out += ' ';
        out += std::to_string(w.idx[q]);
    }
    out += ')';
    return out;
}

std::string to_string(const AlphaWord& w) {
    std::string out;
    for (std::size_t q = 0; q < w.idx.size(); ++q) {
        if (q > 0)
            out += ' ';
        out += 'a';
        out += std::to_string(w.idx[q]);
    }
    return out;
}

}  // namespace hopcalc
