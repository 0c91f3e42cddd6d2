#include "hopcalc/chains.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hopcalc;
using namespace hopcalc::chains;

namespace {

// x of degree 3 with dx = v, dv = 0, over GF(2)[e1]/(m^3)
ChainAlgebra xv_algebra(Index trunc = 3) {
    ChainAlgebra alg(TruncatedRing{1, trunc});
    alg.add_symbol("v", 2);
    const int x = alg.add_symbol("x", 3);
    alg.set_boundary(x, alg.parse("v"));
    return alg;
}

Index log2_ceil(Index n) {
    Index r = 0;
    while ((Index{1} << r) < n)
        ++r;
    return r;
}

}  // namespace

TEST_CASE("boundary basics") {
    ChainAlgebra alg = xv_algebra();
    // d gamma_2(x) = (dx) x
    CHECK(alg.boundary(alg.parse("g2(x)")) == alg.parse("v*x"));
    // Leibniz
    ChainAlgebra two(TruncatedRing{0, 1});
    two.add_symbol("v", 2);
    two.add_symbol("w", 3);
    const int x = two.add_symbol("x", 3);
    const int y = two.add_symbol("y", 4);
    two.set_boundary(x, two.parse("v"));
    two.set_boundary(y, two.parse("w"));
    CHECK(two.boundary(two.parse("x*y")) == two.parse("v*y + x*w"));
    // scalars pass through
    CHECK(alg.boundary(alg.parse("e1*x")) == alg.parse("e1*v"));
    // declared zero boundaries
    CHECK(alg.boundary(alg.parse("v")).is_zero());
}

TEST_CASE("dd = 0 on randomized elements") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        const Index trunc = 1 + static_cast<Index>(rng() % 4);
        ChainAlgebra alg(TruncatedRing{2, trunc});
        alg.add_symbol("a", 2);
        const int b = alg.add_symbol("b", 3);
        alg.add_symbol("z", 3);
        const int c = alg.add_symbol("c", 4);
        const int d = alg.add_symbol("d", 6);
        alg.set_boundary(b, alg.parse("a"));
        alg.set_boundary(c, alg.parse("z"));
        alg.set_boundary(d, alg.parse("a*b"));
        alg.check_boundaries();

        const std::vector<std::string> atoms = {"a",     "b",     "c",    "d",    "g2(a)",
                                                "g2(b)", "g4(a)", "e1*a", "e2*b", "e1*g2(c)"};
        ChainElement u;
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            ChainElement factor = alg.parse(atoms[rng() % atoms.size()]);
            if (rng() % 2)
                factor = alg.multiply(factor, alg.parse(atoms[rng() % atoms.size()]));
            u += factor;
        }
        CHECK(alg.boundary(alg.boundary(u)).is_zero());
    }
}

TEST_CASE("gamma on chains") {
    ChainAlgebra alg = xv_algebra(10);
    // coefficient extraction
    CHECK(alg.gamma(2, alg.parse("e1*x")) == alg.parse("e1^2*g2(x)"));
    // binary decoding
    CHECK(alg.gamma(3, alg.parse("x")) == alg.parse("x*g2(x)"));
    // sum rule
    ChainAlgebra two(TruncatedRing{0, 1});
    two.add_symbol("x", 2);
    two.add_symbol("y", 2);
    CHECK(two.gamma(2, two.parse("x + y")) == two.parse("g2(x) + x*y + g2(y)"));
    // decomposables die
    CHECK(two.gamma(2, two.parse("x*y")).is_zero());
    // degree guards
    ChainAlgebra low(TruncatedRing{0, 1});
    low.add_symbol("s", 1);
    CHECK_THROWS_AS(low.gamma(2, low.parse("s")), std::invalid_argument);
    CHECK_THROWS_AS(low.gamma(2, low.parse("1")), std::invalid_argument);
}

TEST_CASE("gamma_h gamma_k = binom(h+k,h) gamma_{h+k} on chain symbols") {
    ChainAlgebra alg(TruncatedRing{0, 1});
    alg.add_symbol("x", 2);
    const ChainElement x = alg.parse("x");
    for (Index h = 1; h <= 8; ++h) {
        for (Index k = 1; h + k <= 12; ++k) {
            const ChainElement lhs = alg.multiply(alg.gamma(h, x), alg.gamma(k, x));
            if (binom_mod2(h + k, h))
                CHECK(lhs == alg.gamma(h + k, x));
            else
                CHECK(lhs.is_zero());
        }
    }
}

TEST_CASE("boundary of gamma_k via the factor rule") {
    // d gamma_k(x) = (dx) gamma_{k-1}(x); the left side goes through
    // Leibniz on the binary factorization, the right side through direct
    // multiplication
    ChainAlgebra alg = xv_algebra(10);
    const ChainElement x = alg.parse("x");
    const ChainElement dx = alg.boundary(x);
    for (Index k = 2; k <= 8; ++k)
        CHECK(alg.boundary(alg.gamma(k, x)) == alg.multiply(dx, alg.gamma(k - 1, x)));
}

TEST_CASE("gamma_2 nilpotence orders") {
    ChainAlgebra n3 = xv_algebra(3);
    CHECK(n3.nilpotence_order(n3.parse("e1*x")) == 2);
    ChainAlgebra n2 = xv_algebra(2);
    CHECK(n2.nilpotence_order(n2.parse("e1*x")) == 1);

    ChainAlgebra two(TruncatedRing{2, 3});
    two.add_symbol("x", 2);
    two.add_symbol("y", 2);
    CHECK(two.nilpotence_order(two.parse("e1*x + e2*y")) == 2);

    // exact value ceil(log2 N) for a single epsilon of degree one, and never
    // more for other maximal-ideal coefficients on a single symbol
    for (Index n = 2; n <= 8; ++n) {
        ChainAlgebra alg(TruncatedRing{2, n});
        alg.add_symbol("x", 2);
        CHECK(alg.nilpotence_order(alg.parse("e1*x")) == log2_ceil(n));
        CHECK(alg.nilpotence_order(alg.parse("e1*e2*x")) <= log2_ceil(n));
        CHECK(alg.nilpotence_order(alg.parse("e1^2*x")) <= log2_ceil(n));
    }

    // preconditions
    ChainAlgebra alg = xv_algebra();
    CHECK_THROWS_AS(alg.nilpotence_order(alg.parse("x")), std::invalid_argument);
}

TEST_CASE("artinian square rule modulo decomposables") {
    // gamma_2^r(a x + b y) = a^{2^r} gamma_2^r(x) + b^{2^r} gamma_2^r(y)
    // modulo decomposables
    ChainAlgebra alg(TruncatedRing{2, 40});
    alg.add_symbol("x", 2);
    alg.add_symbol("y", 3);
    const ChainElement u = alg.parse("e1*x + e2*y");
    ChainElement cur = u;
    for (Index r = 1; r <= 3; ++r) {
        cur = alg.gamma(2, cur);
        const std::string p = std::to_string(Index{1} << r);
        const ChainElement expected =
            alg.parse("e1^" + p + "*g" + p + "(x) + e2^" + p + "*g" + p + "(y)");
        CHECK(alg.indecomposable_part(cur) == expected);
    }
}

TEST_CASE("verify_nilcond") {
    ChainAlgebra alg = xv_algebra(4);
    const int x = alg.symbol_index("x");
    const NilcondReport report = alg.verify_nilcond(x, 6);
    REQUIRE(report.steps.size() == 6);
    CHECK(report.all_ok());
    for (const auto& step : report.steps) {
        CHECK(step.axioms_apply);
        CHECK(step.matches_power);
        CHECK(step.power_is_cycle);
    }

    // cycles stay cycles: du = 0 gives the zero chain on both sides
    ChainAlgebra cyc(TruncatedRing{1, 3});
    const int u = cyc.add_symbol("u", 4);
    CHECK(cyc.verify_nilcond(u, 3).all_ok());

    // degree guard
    ChainAlgebra low(TruncatedRing{0, 1});
    const int s = low.add_symbol("s", 2);
    CHECK_THROWS_AS(low.verify_nilcond(s, 2), std::invalid_argument);
    CHECK_THROWS_AS(alg.verify_nilcond(x, 0), std::invalid_argument);
}

TEST_CASE("verify_nilcond with a nontrivial boundary of higher degree") {
    ChainAlgebra alg(TruncatedRing{1, 5});
    alg.add_symbol("w", 3);
    const int u = alg.add_symbol("u", 4);
    alg.set_boundary(u, alg.parse("e1*w"));
    alg.check_boundaries();
    CHECK(alg.verify_nilcond(u, 6).all_ok());

    // multi-term boundary with mixed coefficients
    ChainAlgebra mixed(TruncatedRing{2, 6});
    mixed.add_symbol("w", 3);
    mixed.add_symbol("z", 3);
    const int v = mixed.add_symbol("v", 4);
    mixed.set_boundary(v, mixed.parse("z + e1*w + e1*e2*z"));
    mixed.check_boundaries();
    CHECK(mixed.verify_nilcond(v, 6).all_ok());
}

TEST_CASE("chain parsing and printing") {
    ChainAlgebra alg = xv_algebra();
    CHECK(alg.to_string(alg.parse("e1*x + v")) == "v + e1*x");  // canonical term order
    CHECK(alg.to_string(alg.parse("0")) == "0");
    CHECK(alg.to_string(alg.parse("x + x")) == "0");
    CHECK(alg.parse("g4(x)") == alg.gamma(4, alg.parse("x")));
    CHECK(alg.parse("e1^3*x").is_zero());  // truncated away
    CHECK(alg.parse("1") == alg.unit());
    CHECK_THROWS_AS(alg.parse("unknown"), parse_error);
    CHECK_THROWS_AS(alg.parse("x * + v"), parse_error);
    CHECK_THROWS_AS(alg.parse(""), parse_error);
    CHECK_THROWS_AS(alg.parse("e2*x"), parse_error);  // ring has one variable
    CHECK_THROWS_AS(alg.parse("e199999999999999999*x"), parse_error);
}

TEST_CASE("chain JSON loading") {
    const std::string text = R"({
        "ring": {"vars": 1, "trunc": 3},
        "symbols": [{"name": "v", "degree": 2},
                    {"name": "x", "degree": 3, "boundary": "v"}],
        "element": "e1*x"
    })";
    auto [alg, u] = element_from_json_text(text);
    CHECK(alg.nilpotence_order(u) == 2);
    CHECK(alg.boundary(alg.parse("g2(x)")) == alg.parse("v*x"));

    CHECK_THROWS_AS(algebra_from_json_text("{}"), parse_error);
    // dd != 0 is rejected at load time
    const std::string bad = R"({
        "ring": {"vars": 0, "trunc": 1},
        "symbols": [{"name": "a", "degree": 2},
                    {"name": "b", "degree": 3, "boundary": "a"},
                    {"name": "c", "degree": 4, "boundary": "b"}]
    })";
    CHECK_THROWS_AS(algebra_from_json_text(bad), std::invalid_argument);
}
