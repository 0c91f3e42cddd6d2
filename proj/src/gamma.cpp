#include "hopcalc/gamma.hpp"

#include <json.hpp>

namespace hopcalc {

GammaAlgebra::GammaAlgebra(std::vector<Generator> gens) {
    for (auto& g : gens)
        add_generator(std::move(g));
}

int GammaAlgebra::add_generator(Generator g) {
    if (g.degree < 1)
        throw std::invalid_argument("GammaAlgebra: generator degree must be >= 1");
    if (g.weight < 1)
        throw std::invalid_argument("GammaAlgebra: generator weight must be >= 1");
    gens_.push_back(std::move(g));
    return static_cast<int>(gens_.size()) - 1;
}

Index GammaAlgebra::degree(const GammaMonomial& m) const {
    Index d = 0;
    for (const auto& [g, e] : m)
        d += generator(g).degree << e;
    return d;
}

Index GammaAlgebra::weight(const GammaMonomial& m) const {
    Index w = 0;
    for (const auto& [g, e] : m)
        w += generator(g).weight << e;
    return w;
}

std::optional<Index> GammaAlgebra::pure_degree(const GammaElement& x) const {
    if (x.is_zero())
        return 0;
    const Index d = degree(x.keys.front());
    for (const auto& m : x.keys)
        if (degree(m) != d)
            return std::nullopt;
    return d;
}

GammaElement GammaAlgebra::multiply(const GammaMonomial& a, const GammaMonomial& b) const {
    GammaMonomial merged;
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return {};  // binom(2^{e+1}, 2^e) is even
        if (a[i] < b[j])
            merged.push_back(a[i++]);
        else
            merged.push_back(b[j++]);
    }
    merged.insert(merged.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    merged.insert(merged.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return GammaElement(std::move(merged));
}

GammaElement GammaAlgebra::multiply(const GammaElement& a, const GammaElement& b) const {
    GammaElement out;
    for (const auto& ma : a.keys)
        for (const auto& mb : b.keys)
            out += multiply(ma, mb);
    return out;
}

namespace {

// gamma_k of a single level factor: gamma_k(gamma_{2^e} g) = gamma_{k 2^e}(g),
// decoded into the binary levels of k shifted by e.
GammaMonomial gamma_of_factor(Index k, const GammaFactor& f) {
    GammaMonomial out;
    for (int b = 0; (Index{1} << b) <= k; ++b)
        if ((k >> b) & 1)
            out.emplace_back(f.first, f.second + b);
    return out;
}

}  // namespace

GammaElement GammaAlgebra::gamma(Index k, const GammaElement& x) const {
    if (k < 0)
        throw std::invalid_argument("gamma: negative index");
    if (k == 0)
        return gamma_unit();
    if (k == 1)
        return x;
    for (const auto& m : x.keys)
        if (degree(m) < 2)
            throw std::invalid_argument("gamma: k >= 2 needs every monomial of degree >= 2");

    // gamma_k(sum of terms) expands over all compositions of k.
    GammaElement out;
    const auto& terms = x.keys;
    GammaElement partial = gamma_unit();
    const auto rec = [&](auto&& self, std::size_t pos, Index left, const GammaElement& acc) -> void {
        if (acc.is_zero())
            return;
        if (pos == terms.size()) {
            if (left == 0)
                out += acc;
            return;
        }
        for (Index ki = 0; ki <= left; ++ki) {
            GammaElement part;
            if (ki == 0) {
                part = gamma_unit();
            } else if (ki == 1) {
                part = GammaElement(terms[pos]);
            } else if (terms[pos].size() >= 2) {
                continue;  // gamma_k of a decomposable vanishes for k >= 2
            } else {
                part = GammaElement(gamma_of_factor(ki, terms[pos].front()));
            }
            self(self, pos + 1, left - ki, multiply(acc, part));
        }
    };
    rec(rec, 0, k, partial);
    return out;
}

std::vector<GammaMonomial> GammaAlgebra::enumerate(Index max_degree, Index max_weight) const {
    struct Factor {
        GammaFactor f;
        Index deg;
        Index wt;
    };
    std::vector<Factor> factors;
    for (int g = 0; g < generator_count(); ++g) {
        const Generator& gen = generator(g);
        for (int e = 0;; ++e) {
            const Index fd = gen.degree << e;
            const Index fw = gen.weight << e;
            if (fd > max_degree || (max_weight >= 0 && fw > max_weight))
                break;
            factors.push_back({{g, e}, fd, fw});
            if (gen.degree == 1)
                break;  // degree-1 generators are exterior
        }
    }

    std::vector<GammaMonomial> out;
    GammaMonomial current;
    const auto rec = [&](auto&& self, std::size_t pos, Index deg_left, Index wt_left) -> void {
        out.push_back(current);
        for (std::size_t p = pos; p < factors.size(); ++p) {
            if (factors[p].deg > deg_left)
                continue;
            if (max_weight >= 0 && factors[p].wt > wt_left)
                continue;
            current.push_back(factors[p].f);
            self(self, p + 1, deg_left - factors[p].deg, wt_left - factors[p].wt);
            current.pop_back();
        }
    };
    rec(rec, 0, max_degree, max_weight >= 0 ? max_weight : 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GammaMonomial> GammaAlgebra::basis(Index deg) const {
    if (deg < 0)
        return {};
    std::vector<GammaMonomial> out;
    for (auto& m : enumerate(deg))
        if (degree(m) == deg)
            out.push_back(std::move(m));
    return out;
}

DimensionSeries GammaAlgebra::poincare(Index max_degree) const {
    DimensionSeries out(max_degree);
    for (const auto& m : enumerate(max_degree))
        ++out.at(degree(m));
    return out;
}

GammaElement GammaAlgebra::q_gamma(const GammaElement& x) const {
    GammaElement out;
    for (const auto& m : x.keys)
        if (m.size() == 1 && m.front().second == 0)
            out.toggle(m);
    return out;
}

std::string GammaAlgebra::label(const GammaMonomial& m) const {
    if (m.empty())
        return "1";
    std::string out;
    for (std::size_t q = 0; q < m.size(); ++q) {
        if (q > 0)
            out += '*';
        const auto& [g, e] = m[q];
        if (e == 0) {
            out += generator(g).name;
        } else {
            out += 'g';
            out += std::to_string(Index{1} << e);
            out += '(';
            out += generator(g).name;
            out += ')';
        }
    }
    return out;
}

std::string GammaAlgebra::label(const GammaElement& x) const {
    if (x.is_zero())
        return "0";
    std::string out;
    for (std::size_t q = 0; q < x.keys.size(); ++q) {
        if (q > 0)
            out += " + ";
        out += label(x.keys[q]);
    }
    return out;
}

GammaAlgebra GammaAlgebra::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("bad generator JSON: ") + ex.what());
    }
    if (!j.is_array())
        throw parse_error("generator JSON must be an array");
    GammaAlgebra alg;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("name") || !item.contains("degree"))
            throw parse_error("generator entries need 'name' and 'degree'");
        Generator g;
        g.name = item.at("name").get<std::string>();
        g.degree = item.at("degree").get<Index>();
        g.weight = item.value("weight", Index{1});
        alg.add_generator(std::move(g));
    }
    return alg;
}

std::string GammaAlgebra::to_json_text() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& g : gens_) {
        nlohmann::json item{{"name", g.name}, {"degree", g.degree}};
        if (g.weight != 1)
            item["weight"] = g.weight;
        j.push_back(std::move(item));
    }
    return j.dump();
}

}  // namespace hopcalc
