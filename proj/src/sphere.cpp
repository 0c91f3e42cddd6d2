#include "hopcalc/sphere.hpp"

#include <json.hpp>

#include <set>

namespace hopcalc {

void GradedVectorSpace::validate() const {
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.degree < 1)
            throw parse_error("graded space must be connected: generator '" + g.name +
                              "' has degree " + std::to_string(g.degree));
        if (g.name.empty())
            throw parse_error("generator names must be nonempty");
        if (!seen.insert(g.name).second)
            throw parse_error("duplicate generator name '" + g.name + "'");
    }
}

GradedVectorSpace GradedVectorSpace::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("bad JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array())
        throw parse_error("expected {\"generators\": [...]}");
    GradedVectorSpace w;
    for (const auto& item : j.at("generators")) {
        if (!item.is_object() || !item.contains("name") || !item.contains("degree"))
            throw parse_error("generator entries need 'name' and 'degree'");
        w.generators.push_back({item.at("name").get<std::string>(), item.at("degree").get<Index>()});
    }
    w.validate();
    return w;
}

std::vector<DeltaWord> admissible_words(Index max_degree, Index excess_below) {
    std::vector<DeltaWord> out;
    const auto excess_ok = [&](Index e) { return excess_below < 0 || e < excess_below; };
    if (excess_ok(0))
        out.emplace_back();
    if (max_degree >= 2) {
        // build words innermost-first; extending on the left never lowers
        // the excess, so a branch at excess >= bound is dead
        std::vector<Index> rev;
        const auto grow = [&](auto&& self) -> void {
            Index deg = 0;
            for (Index i : rev)
                deg += i;
            const Index exc = 2 * rev.back() - deg;
            if (!excess_ok(exc))
                return;
            out.push_back(DeltaWord{{rev.rbegin(), rev.rend()}});
            for (Index next = 2 * rev.back(); deg + next <= max_degree; ++next) {
                rev.push_back(next);
                self(self);
                rev.pop_back();
            }
        };
        for (Index start = 2; start <= max_degree; ++start) {
            rev.assign(1, start);
            grow(grow);
        }
    }
    std::sort(out.begin(), out.end(), [](const DeltaWord& a, const DeltaWord& b) {
        const Index da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    return out;
}

std::vector<SphereGenerator> sphere_generators(Index n, Index max_degree) {
    if (n < 1)
        throw std::invalid_argument("sphere_generators: n must be >= 1");
    std::vector<SphereGenerator> out;
    if (max_degree < n)
        return out;
    for (auto& w : admissible_words(max_degree - n, n))
        out.push_back(SphereGenerator{std::move(w), n});
    return out;
}

DimensionSeries sphere_poincare(Index n, Index max_degree) {
    GammaAlgebra alg;
    for (const auto& g : sphere_generators(n, max_degree))
        alg.add_generator({to_paren_string(g.word), g.degree(), g.word.weight()});
    return alg.poincare(std::max<Index>(max_degree, 0));
}

SphereGenerator alpha_power(Index n, Index t) {
    if (n < 3)
        throw std::invalid_argument("alpha_power: n must be >= 3");
    if (t < 1)
        throw std::invalid_argument("alpha_power: t must be >= 1");
    AlphaWord a{std::vector<Index>(static_cast<std::size_t>(t), n - 2)};
    return SphereGenerator{alpha_to_delta(a, n), n};
}

FreeHomotopy::FreeHomotopy(GradedVectorSpace w) : w_(std::move(w)) {
    w_.validate();
}

FreeHomotopy FreeHomotopy::sphere(Index n) {
    GradedVectorSpace w;
    w.generators.push_back({"i" + std::to_string(n), n});
    return FreeHomotopy(std::move(w));
}

int FreeHomotopy::intern(int w_index, DeltaWord word) {
    const auto key = std::make_pair(w_index, word);
    if (auto it = lookup_.find(key); it != lookup_.end())
        return it->second;
    const auto& wg = w_.generators.at(static_cast<std::size_t>(w_index));
    if (!word.admissible() || word.excess() >= wg.degree)
        throw std::invalid_argument("FreeHomotopy::intern: not a generator word");
    Generator g;
    g.name = word.empty() ? wg.name : to_string(word) + " " + wg.name;
    g.degree = wg.degree + word.degree();
    g.weight = word.weight();
    const int idx = alg_.add_generator(std::move(g));
    info_.push_back(key);
    lookup_.emplace(key, idx);
    return idx;
}

GammaMonomial FreeHomotopy::generator_monomial(int w_index, const DeltaWord& word) {
    return GammaMonomial{{intern(w_index, word), 0}};
}

void FreeHomotopy::extend(Index t_max) {
    for (int wi = 0; wi < static_cast<int>(w_.generators.size()); ++wi) {
        const Index d = w_.generators[static_cast<std::size_t>(wi)].degree;
        if (t_max < d)
            continue;
        for (auto& word : admissible_words(t_max - d, d))
            intern(wi, std::move(word));
    }
}

E1Page FreeHomotopy::e1_page(Index s_max, Index t_max) {
    if (s_max < 0 || t_max < 0)
        throw std::invalid_argument("e1_page: bounds must be >= 0");
    extend(t_max);
    E1Page page;
    page.s_max = s_max;
    page.t_max = t_max;
    for (auto& m : alg_.enumerate(t_max, s_max))
        page.cells[{alg_.weight(m), alg_.degree(m)}].push_back(std::move(m));
    for (auto& [st, cell] : page.cells)
        std::sort(cell.begin(), cell.end());
    return page;
}

GammaElement FreeHomotopy::delta(const GammaMonomial& x, Index i) {
    const Index t = alg_.degree(x);
    if (i < 2 || i > t)
        throw std::invalid_argument("delta: index must satisfy 2 <= i <= degree");
    if (x.size() != 1)
        return {};  // products of positive-degree factors die, gamma_2 included
    const auto [gen, level] = x.front();
    // by value: intern() below may grow info_ and invalidate references
    const auto [w_index, word] = generator_info(gen);
    const Index w_deg = w_.generators.at(static_cast<std::size_t>(w_index)).degree;
    const Index base_deg = w_deg + word.degree();

    // delta_i . (gamma-level tower) . delta_word, as one composite word
    DeltaWord full;
    full.idx.push_back(i);
    for (int e = level; e >= 1; --e)
        full.idx.push_back(base_deg << (e - 1));
    full.idx.insert(full.idx.end(), word.idx.begin(), word.idx.end());

    GammaElement out;
    for (const DeltaWord& j : rw_.normalize(full).keys) {
        // peel divided squares: a leading index whose tail excess equals
        // deg w is a gamma_2 on the remaining word; excess beyond deg w
        // acts as zero out of degree deg w
        std::size_t off = 0;
        int lev = 0;
        while (off <= j.idx.size()) {
            DeltaWord tail{std::vector<Index>(j.idx.begin() + static_cast<std::ptrdiff_t>(off),
                                              j.idx.end())};
            const Index exc = tail.excess();
            if (exc > w_deg)
                break;
            if (exc == w_deg) {
                ++lev;
                ++off;
                continue;
            }
            out.toggle(GammaMonomial{{intern(w_index, std::move(tail)), lev}});
            break;
        }
    }
    return out;
}

GammaElement FreeHomotopy::delta(const GammaElement& x, Index i) {
    if (x.is_zero())
        return {};
    const auto t = alg_.pure_degree(x);
    if (!t)
        throw std::invalid_argument("delta: element must be homogeneous");
    if (i < 2 || i > *t)
        throw std::invalid_argument("delta: index must satisfy 2 <= i <= degree");
    if (i == *t)
        return alg_.gamma(2, x);  // divided square, with its cross terms
    GammaElement out;
    for (const auto& m : x.keys)
        out += delta(m, i);
    return out;
}

GammaElement FreeHomotopy::vartheta(const GammaElement& x) {
    if (x.is_zero())
        return {};
    const auto m = alg_.pure_degree(x);
    if (!m)
        throw std::invalid_argument("vartheta: element must be homogeneous");
    if (*m < 3)
        throw std::invalid_argument("vartheta: needs degree >= 3");
    return delta(x, *m - 1);
}

std::vector<GammaElement> FreeHomotopy::vartheta_iterates_qgamma(const GammaMonomial& start,
                                                                 int steps) {
    if (steps < 0)
        throw std::invalid_argument("vartheta_iterates_qgamma: steps must be >= 0");
    std::vector<GammaElement> out;
    GammaElement cur(start);
    out.push_back(alg_.q_gamma(cur));
    for (int k = 1; k <= steps; ++k) {
        if (cur.is_zero() || alg_.pure_degree(cur).value_or(-1) < 3)
            cur = GammaElement{};  // vartheta vanishes below degree 3
        else
            cur = vartheta(cur);
        out.push_back(alg_.q_gamma(cur));
    }
    return out;
}

}  // namespace hopcalc
