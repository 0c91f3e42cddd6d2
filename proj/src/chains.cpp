#include "hopcalc/chains.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace hopcalc::chains {

namespace {

Index ring_degree(const RingMonomial& m) {
    Index d = 0;
    for (int e : m)
        d += e;
    return d;
}

}  // namespace

ChainAlgebra::ChainAlgebra(TruncatedRing ring) : ring_(ring) {
    if (ring_.vars < 0 || ring_.trunc < 1)
        throw std::invalid_argument("ChainAlgebra: need vars >= 0 and trunc >= 1");
}

int ChainAlgebra::add_symbol(std::string name, Index degree) {
    if (degree < 0)
        throw std::invalid_argument("add_symbol: degree must be >= 0");
    if (name.empty())
        throw std::invalid_argument("add_symbol: empty name");
    if (name[0] == 'e' && name.size() > 1 &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("add_symbol: names e<digits> are reserved for ring variables");
    if (symbol_index(name) >= 0)
        throw std::invalid_argument("add_symbol: duplicate name '" + name + "'");
    symbols_.push_back({std::move(name), degree, {}});
    return static_cast<int>(symbols_.size()) - 1;
}

void ChainAlgebra::set_boundary(int sym, ChainElement b) {
    ChainSymbol& s = symbols_.at(static_cast<std::size_t>(sym));
    if (!b.is_zero()) {
        const auto d = pure_degree(b);
        if (!d || *d != s.degree - 1)
            throw std::invalid_argument("set_boundary: boundary of '" + s.name +
                                        "' must be homogeneous of degree " +
                                        std::to_string(s.degree - 1));
    }
    s.boundary = std::move(b);
}

int ChainAlgebra::symbol_index(const std::string& name) const {
    for (int i = 0; i < symbol_count(); ++i)
        if (symbols_[static_cast<std::size_t>(i)].name == name)
            return i;
    return -1;
}

RingMonomial ChainAlgebra::ring_var(int v, int power) const {
    if (v < 0 || v >= ring_.vars)
        throw std::invalid_argument("ring_var: no such variable");
    if (power < 1)
        throw std::invalid_argument("ring_var: power must be >= 1");
    RingMonomial m = ring_one();
    m[static_cast<std::size_t>(v)] = power;
    return m;
}

ChainElement ChainAlgebra::term(RingMonomial c, ChainMonomial m) const {
    if (static_cast<int>(c.size()) != ring_.vars)
        throw std::invalid_argument("term: coefficient has the wrong number of variables");
    if (ring_degree(c) >= ring_.trunc)
        return {};
    std::sort(m.begin(), m.end());
    for (std::size_t q = 0; q + 1 < m.size(); ++q)
        if (m[q] == m[q + 1])
            return {};
    return ChainElement({std::move(c), std::move(m)});
}

Index ChainAlgebra::term_degree(const ChainTerm& t) const {
    Index d = 0;
    for (const auto& [s, e] : t.second)
        d += symbol(s).degree << e;
    return d;
}

std::optional<Index> ChainAlgebra::pure_degree(const ChainElement& x) const {
    if (x.is_zero())
        return 0;
    const Index d = term_degree(x.keys.front());
    for (const auto& t : x.keys)
        if (term_degree(t) != d)
            return std::nullopt;
    return d;
}

ChainElement ChainAlgebra::multiply(const ChainElement& a, const ChainElement& b) const {
    ChainElement out;
    for (const auto& [ca, ma] : a.keys) {
        for (const auto& [cb, mb] : b.keys) {
            RingMonomial c(ca);
            for (std::size_t v = 0; v < c.size(); ++v)
                c[v] += cb[v];
            if (ring_degree(c) >= ring_.trunc)
                continue;
            ChainMonomial merged;
            merged.reserve(ma.size() + mb.size());
            bool dead = false;
            std::size_t i = 0, j = 0;
            while (i < ma.size() && j < mb.size()) {
                if (ma[i] == mb[j]) {
                    dead = true;  // repeated (symbol, level): even coefficient
                    break;
                }
                merged.push_back(ma[i] < mb[j] ? ma[i++] : mb[j++]);
            }
            if (dead)
                continue;
            merged.insert(merged.end(), ma.begin() + static_cast<std::ptrdiff_t>(i), ma.end());
            merged.insert(merged.end(), mb.begin() + static_cast<std::ptrdiff_t>(j), mb.end());
            out.toggle({std::move(c), std::move(merged)});
        }
    }
    return out;
}

ChainElement ChainAlgebra::boundary(const ChainElement& x) const {
    ChainElement out;
    for (const auto& t : x.keys) {
        const auto& [c, m] = t;
        for (std::size_t j = 0; j < m.size(); ++j) {
            const auto [s, e] = m[j];
            const ChainElement& db = symbol(s).boundary;
            if (db.is_zero())
                continue;
            // d gamma_{2^e}(s) = (ds) gamma_{2^e - 1}(s), with
            // gamma_{2^e - 1}(s) = product of levels 0..e-1
            ChainMonomial rest;
            rest.reserve(m.size() - 1 + static_cast<std::size_t>(e));
            for (std::size_t q = 0; q < m.size(); ++q)
                if (q != j)
                    rest.push_back(m[q]);
            for (int lev = 0; lev < e; ++lev)
                rest.push_back({s, lev});
            std::sort(rest.begin(), rest.end());
            bool dead = false;
            for (std::size_t q = 0; q + 1 < rest.size(); ++q)
                if (rest[q] == rest[q + 1])
                    dead = true;
            if (dead)
                continue;
            out += multiply(ChainElement({c, std::move(rest)}), db);
        }
    }
    return out;
}

namespace {

RingMonomial ring_pow(const RingMonomial& c, Index k) {
    RingMonomial out(c.size(), 0);
    for (std::size_t v = 0; v < c.size(); ++v)
        out[v] = static_cast<int>(c[v] * k);
    return out;
}

}  // namespace

ChainElement ChainAlgebra::gamma(Index k, const ChainElement& x) const {
    if (k < 0)
        throw std::invalid_argument("gamma: negative index");
    if (k == 0)
        return unit();
    if (k == 1)
        return x;
    for (const auto& t : x.keys)
        if (term_degree(t) < 2)
            throw std::invalid_argument("gamma: k >= 2 needs every term of chain degree >= 2");

    const auto gamma_term = [&](Index ki, const ChainTerm& t) -> ChainElement {
        if (ki == 0)
            return unit();
        if (ki == 1)
            return ChainElement(t);
        const auto& [c, m] = t;
        if (m.size() >= 2)
            return {};  // gamma_k of a decomposable vanishes
        RingMonomial ck = ring_pow(c, ki);
        if (ring_degree(ck) >= ring_.trunc)
            return {};
        const auto [s, e] = m.front();
        ChainMonomial levels;
        for (int b = 0; (Index{1} << b) <= ki; ++b)
            if ((ki >> b) & 1)
                levels.push_back({s, e + b});
        return ChainElement({std::move(ck), std::move(levels)});
    };

    ChainElement out;
    const auto& terms = x.keys;
    const auto rec = [&](auto&& self, std::size_t pos, Index left, const ChainElement& acc) -> void {
        if (acc.is_zero())
            return;
        if (pos == terms.size()) {
            if (left == 0)
                out += acc;
            return;
        }
        for (Index ki = 0; ki <= left; ++ki) {
            ChainElement part = gamma_term(ki, terms[pos]);
            if (part.is_zero())
                continue;
            self(self, pos + 1, left - ki, multiply(acc, part));
        }
    };
    rec(rec, 0, k, unit());
    return out;
}

ChainElement ChainAlgebra::indecomposable_part(const ChainElement& x) const {
    ChainElement out;
    for (const auto& t : x.keys)
        if (t.second.size() < 2)
            out.toggle(t);
    return out;
}

Index ChainAlgebra::nilpotence_order(const ChainElement& u, Index hard_cap) const {
    for (const auto& t : u.keys) {
        if (ring_degree(t.first) < 1)
            throw std::invalid_argument(
                "nilpotence_order: every coefficient must lie in the maximal ideal");
        if (term_degree(t) < 2)
            throw std::invalid_argument("nilpotence_order: terms must have chain degree >= 2");
    }
    ChainElement cur = u;
    for (Index r = 0; r <= hard_cap; ++r) {
        if (cur.is_zero())
            return r;
        cur = gamma(2, cur);
    }
    throw std::logic_error("nilpotence_order: did not terminate within the hard cap");
}

NilcondReport ChainAlgebra::verify_nilcond(int sym, Index r_max) const {
    if (r_max < 1)
        throw std::invalid_argument("verify_nilcond: r_max must be >= 1");
    const ChainSymbol& u = symbol(sym);
    if (u.degree < 3)
        throw std::invalid_argument("verify_nilcond: symbol degree must be >= 3");

    NilcondReport report;
    for (Index r = 1; r <= r_max; ++r) {
        NilcondStep step;
        step.r = r;

        // vartheta^r(u) is the formal tower Theta_{m_r - 1} ... Theta_{m_1 - 1}(u)
        // with m_1 = deg u and m_{j+1} = 2 m_j - 1. Pushing the boundary
        // inward swaps d past each Theta_i, legal for 2 <= i <= deg.
        bool axioms = true;
        std::vector<Index> indices;
        Index m = u.degree;
        for (Index j = 1; j <= r; ++j) {
            const Index i = m - 1;
            if (i < 2 || i > m)
                axioms = false;
            indices.push_back(i);
            m = 2 * m - 1;
        }

        // Evaluate inside out: each Theta_i must land exactly on the top
        // index of its (now concrete) argument, where it is the divided
        // square on chains.
        ChainElement value = u.boundary;
        if (axioms) {
            for (Index i : indices) {
                const auto d = pure_degree(value);
                if (!value.is_zero() && (!d || *d != i)) {
                    axioms = false;
                    break;
                }
                value = gamma(2, value);
            }
        }
        step.axioms_apply = axioms;

        ChainElement power = u.boundary;
        for (Index j = 0; j < r; ++j)
            power = gamma(2, power);

        step.matches_power = axioms && value == power;
        step.power_is_cycle = boundary(power).is_zero();
        report.steps.push_back(step);
    }
    return report;
}

void ChainAlgebra::check_boundaries() const {
    for (int s = 0; s < symbol_count(); ++s) {
        const ChainSymbol& sym = symbols_[static_cast<std::size_t>(s)];
        if (sym.boundary.is_zero())
            continue;
        const auto d = pure_degree(sym.boundary);
        if (!d || *d != sym.degree - 1)
            throw std::invalid_argument("boundary of '" + sym.name + "' has the wrong degree");
        if (!boundary(sym.boundary).is_zero())
            throw std::invalid_argument("dd != 0 at symbol '" + sym.name + "'");
    }
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
};

Index read_number(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    Index v = 0;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
        v = v * 10 + (c.text[c.pos] - '0');
        if (v > (Index{1} << 40))
            throw parse_error("number too large in chain element");
        ++c.pos;
    }
    if (c.pos == start)
        throw parse_error("expected a number in chain element");
    return v;
}

std::string read_ident(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.text.size() &&
           (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '_'))
        ++c.pos;
    if (c.pos == start)
        throw parse_error("expected a factor in chain element");
    return c.text.substr(start, c.pos - start);
}

}  // namespace

ChainElement ChainAlgebra::parse(const std::string& text) const {
    Cursor c{text};
    if (c.done())
        throw parse_error("empty chain element");

    const auto digits_of = [](const std::string& ident) -> Index {
        if (ident.size() > 10)
            throw parse_error("number too large in '" + ident + "'");
        return std::stoll(ident.substr(1));
    };

    const auto parse_factor = [&]() -> ChainElement {
        c.skip_ws();
        if (c.pos < c.text.size() && c.text[c.pos] == '1' &&
            (c.pos + 1 >= c.text.size() ||
             !std::isalnum(static_cast<unsigned char>(c.text[c.pos + 1])))) {
            ++c.pos;
            return unit();
        }
        const std::string ident = read_ident(c);
        // gK( ... ): divided power of a symbol
        if (ident.size() > 1 && ident[0] == 'g' &&
            std::all_of(ident.begin() + 1, ident.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
            c.eat('(')) {
            const Index k = digits_of(ident);
            const std::string name = read_ident(c);
            if (!c.eat(')'))
                throw parse_error("expected ')' in chain element");
            const int s = symbol_index(name);
            if (s < 0)
                throw parse_error("unknown symbol '" + name + "'");
            return gamma(k, symbol_element(s));
        }
        // ring variable eN or eN^p
        if (ident.size() > 1 && ident[0] == 'e' &&
            std::all_of(ident.begin() + 1, ident.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            const int v = static_cast<int>(digits_of(ident)) - 1;
            if (v < 0 || v >= ring_.vars)
                throw parse_error("ring variable '" + ident + "' does not exist");
            int power = 1;
            if (c.eat('^'))
                power = static_cast<int>(read_number(c));
            if (power < 1)
                throw parse_error("ring variable power must be >= 1");
            return term(ring_var(v, power), {});
        }
        const int s = symbol_index(ident);
        if (s < 0)
            throw parse_error("unknown symbol '" + ident + "'");
        return symbol_element(s);
    };

    ChainElement out;
    while (true) {
        c.skip_ws();
        if (c.pos < c.text.size() && c.text[c.pos] == '0' &&
            (c.pos + 1 >= c.text.size() ||
             !std::isalnum(static_cast<unsigned char>(c.text[c.pos + 1])))) {
            ++c.pos;  // a zero term
        } else {
            ChainElement t = parse_factor();
            while (c.eat('*'))
                t = multiply(t, parse_factor());
            out += t;
        }
        if (c.done())
            break;
        if (!c.eat('+'))
            throw parse_error("expected '+' in chain element");
    }
    return out;
}

std::string ChainAlgebra::to_string(const ChainElement& x) const {
    if (x.is_zero())
        return "0";
    std::string out;
    bool first_term = true;
    for (const auto& [c, m] : x.keys) {
        if (!first_term)
            out += " + ";
        first_term = false;
        std::string parts;
        for (std::size_t v = 0; v < c.size(); ++v) {
            if (c[v] == 0)
                continue;
            if (!parts.empty())
                parts += '*';
            parts += 'e' + std::to_string(v + 1);
            if (c[v] > 1)
                parts += '^' + std::to_string(c[v]);
        }
        for (const auto& [s, e] : m) {
            if (!parts.empty())
                parts += '*';
            if (e == 0) {
                parts += symbol(s).name;
            } else {
                parts += 'g' + std::to_string(Index{1} << e) + '(' + symbol(s).name + ')';
            }
        }
        out += parts.empty() ? "1" : parts;
    }
    return out;
}

namespace {

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("bad JSON: ") + ex.what());
    }
}

ChainAlgebra load_algebra(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("symbols"))
        throw parse_error("expected {\"ring\": .., \"symbols\": [..]}");
    const auto& ring = j.at("ring");
    TruncatedRing r;
    r.vars = ring.value("vars", 0);
    r.trunc = ring.value("trunc", Index{1});
    ChainAlgebra alg(r);
    for (const auto& item : j.at("symbols")) {
        if (!item.is_object() || !item.contains("name") || !item.contains("degree"))
            throw parse_error("symbol entries need 'name' and 'degree'");
        alg.add_symbol(item.at("name").get<std::string>(), item.at("degree").get<Index>());
    }
    // boundaries may reference any symbol, so wire them in a second pass
    int idx = 0;
    for (const auto& item : j.at("symbols")) {
        if (item.contains("boundary"))
            alg.set_boundary(idx, alg.parse(item.at("boundary").get<std::string>()));
        ++idx;
    }
    alg.check_boundaries();
    return alg;
}

}  // namespace

ChainAlgebra algebra_from_json_text(const std::string& text) {
    return load_algebra(parse_json(text));
}

std::pair<ChainAlgebra, ChainElement> element_from_json_text(const std::string& text) {
    const nlohmann::json j = parse_json(text);
    ChainAlgebra alg = load_algebra(j);
    if (!j.contains("element"))
        throw parse_error("expected an 'element' field");
    ChainElement u = alg.parse(j.at("element").get<std::string>());
    return {std::move(alg), std::move(u)};
}

}  // namespace hopcalc::chains
