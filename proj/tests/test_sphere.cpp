#include "hopcalc/sphere.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hopcalc;

namespace {

std::vector<DeltaWord> words_of(const std::vector<SphereGenerator>& gens) {
    std::vector<DeltaWord> out;
    for (const auto& g : gens)
        out.push_back(g.word);
    return out;
}

}  // namespace

TEST_CASE("sphere generators") {
    CHECK(words_of(sphere_generators(2, 12)) == std::vector<DeltaWord>{DeltaWord{}});
    CHECK(words_of(sphere_generators(3, 10)) ==
          std::vector<DeltaWord>{DeltaWord{}, DeltaWord{{2}}, DeltaWord{{4, 2}}});
    CHECK(words_of(sphere_generators(1, 10)) == std::vector<DeltaWord>{DeltaWord{}});
    for (const auto& g : sphere_generators(5, 30)) {
        CHECK(g.word.admissible());
        CHECK(g.word.excess() < 5);
        CHECK(is_applicable(g.word, 5));
        CHECK(g.degree() <= 30);
    }
}

TEST_CASE("sphere poincare series") {
    CHECK(sphere_poincare(1, 4).coeff == std::vector<Index>{1, 1, 0, 0, 0});
    CHECK(sphere_poincare(2, 8).coeff == std::vector<Index>{1, 0, 1, 0, 1, 0, 1, 0, 1});
    const DimensionSeries s3 = sphere_poincare(3, 9);
    CHECK(s3.at(3) == 1);
    CHECK(s3.at(5) == 1);
    CHECK(s3.at(6) == 1);
    CHECK(s3.at(9) >= 2);
}

TEST_CASE("sphere poincare equals the generating function oracle") {
    for (Index n = 1; n <= 12; ++n) {
        std::vector<Index> degrees;
        for (const auto& g : sphere_generators(n, 24))
            degrees.push_back(g.degree());
        CHECK(sphere_poincare(n, 24) == series_product_exterior(degrees, 24));
    }
}

TEST_CASE("e1 page for a single degree-3 generator") {
    FreeHomotopy fh(GradedVectorSpace{{{"w", 3}}});
    const E1Page page = fh.e1_page(4, 12);
    const auto dim = [&](Index s, Index t) {
        const auto it = page.cells.find({s, t});
        return it == page.cells.end() ? std::size_t{0} : it->second.size();
    };
    CHECK(dim(0, 0) == 1);
    CHECK(dim(1, 3) == 1);
    CHECK(dim(2, 5) == 1);
    CHECK(dim(2, 6) == 1);
    CHECK(fh.algebra().label(page.cells.at({2, 5}).front()) == "d2 w");
    CHECK(fh.algebra().label(page.cells.at({2, 6}).front()) == "g2(w)");
    // no weight-2 cells other than t = 5, 6
    for (const auto& [st, cell] : page.cells)
        if (st.first == 2)
            CHECK((st.second == 5 || st.second == 6));
}

TEST_CASE("e1 page vanishes below the weight line") {
    FreeHomotopy fh(GradedVectorSpace{{{"u", 1}, {"v", 2}, {"w", 3}}});
    const E1Page page = fh.e1_page(10, 12);
    for (const auto& [st, cell] : page.cells) {
        CHECK(st.second >= st.first);
        CHECK(!cell.empty());
    }
}

TEST_CASE("e1 page rejects non-connected input") {
    GradedVectorSpace degree_zero{{{"w", 0}}};
    CHECK_THROWS_AS(degree_zero.validate(), parse_error);
    GradedVectorSpace negative{{{"w", -1}}};
    CHECK_THROWS_AS(FreeHomotopy{negative}, parse_error);
}

TEST_CASE("delta action on the e1 page") {
    FreeHomotopy fh(GradedVectorSpace{{{"w", 3}, {"z", 4}}});
    const GammaMonomial w = fh.generator_monomial(0, DeltaWord{});
    const GammaMonomial z = fh.generator_monomial(1, DeltaWord{});

    // delta_2 on w lands on the generator d2 w
    CHECK(fh.delta(w, 2) == GammaElement(fh.generator_monomial(0, DeltaWord{{2}})));
    // top operation is the divided square
    CHECK(fh.delta(w, 3) == GammaElement(GammaMonomial{{w.front().first, 1}}));
    // products of positive-degree factors die
    const GammaElement wz = fh.algebra().multiply(w, z);
    CHECK(fh.delta(wz.keys.front(), 4).is_zero());
    // out-of-range indices are rejected
    CHECK_THROWS_AS(fh.delta(w, 1), std::invalid_argument);
    CHECK_THROWS_AS(fh.delta(w, 4), std::invalid_argument);
}

TEST_CASE("delta doubles weight and adds its index to the degree") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<Index> pick_degree(1, 5);
    for (int trial = 0; trial < 6; ++trial) {
        GradedVectorSpace w;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < count; ++g)
            w.generators.push_back({"w" + std::to_string(g), pick_degree(rng)});
        FreeHomotopy fh(w);
        const E1Page page = fh.e1_page(8, 10);
        for (const auto& [st, cell] : page.cells) {
            const auto [s, t] = st;
            if (t < 2)
                continue;
            for (const auto& m : cell) {
                for (Index i = 2; i <= t; ++i) {
                    const GammaElement image = fh.delta(m, i);
                    for (const auto& out : image.keys) {
                        CHECK(fh.algebra().weight(out) == 2 * s);
                        CHECK(fh.algebra().degree(out) == t + i);
                    }
                }
            }
        }
    }
}

TEST_CASE("vartheta on sphere classes") {
    FreeHomotopy fh = FreeHomotopy::sphere(3);
    const GammaMonomial iota = fh.generator_monomial(0, DeltaWord{});
    // vartheta(iota_3) = d2 iota_3
    CHECK(fh.vartheta(GammaElement(iota)) ==
          GammaElement(fh.generator_monomial(0, DeltaWord{{2}})));
    // vartheta(d2 iota_3) = d4 d2 iota_3
    CHECK(fh.vartheta(GammaElement(fh.generator_monomial(0, DeltaWord{{2}}))) ==
          GammaElement(fh.generator_monomial(0, DeltaWord{{4, 2}})));
    // vartheta gamma_2 = 0
    for (Index n = 2; n <= 6; ++n) {
        FreeHomotopy s = FreeHomotopy::sphere(n);
        const GammaMonomial base = s.generator_monomial(0, DeltaWord{});
        CHECK(s.vartheta(GammaElement(GammaMonomial{{base.front().first, 1}})).is_zero());
    }
    CHECK_THROWS_AS(fh.vartheta(GammaElement(iota) +
                                GammaElement(fh.generator_monomial(0, DeltaWord{{2}}))),
                    std::invalid_argument);
}

TEST_CASE("vartheta kills gamma levels and decomposables up to degree 20") {
    FreeHomotopy fh = FreeHomotopy::sphere(4);
    const E1Page page = fh.e1_page(64, 20);
    for (const auto& [st, cell] : page.cells) {
        for (const auto& m : cell) {
            if (st.second < 3)
                continue;
            const bool q_trivial = m.size() != 1 || m.front().second != 0;
            if (q_trivial)
                CHECK(fh.algebra().q_gamma(fh.vartheta(GammaElement(m))).is_zero());
        }
    }
}

TEST_CASE("vartheta iterates") {
    FreeHomotopy s3 = FreeHomotopy::sphere(3);
    const auto run3 = s3.vartheta_iterates_qgamma(s3.generator_monomial(0, DeltaWord{}), 2);
    REQUIRE(run3.size() == 3);
    CHECK(run3[0] == GammaElement(s3.generator_monomial(0, DeltaWord{})));
    CHECK(run3[1] == GammaElement(s3.generator_monomial(0, DeltaWord{{2}})));
    CHECK(run3[2] == GammaElement(s3.generator_monomial(0, DeltaWord{{4, 2}})));

    FreeHomotopy s2 = FreeHomotopy::sphere(2);
    const auto run2 = s2.vartheta_iterates_qgamma(s2.generator_monomial(0, DeltaWord{}), 3);
    REQUIRE(run2.size() == 4);
    CHECK(run2[0] == GammaElement(s2.generator_monomial(0, DeltaWord{})));
    for (int k = 1; k <= 3; ++k)
        CHECK(run2[static_cast<std::size_t>(k)].is_zero());

    FreeHomotopy s4 = FreeHomotopy::sphere(4);
    const auto run4 = s4.vartheta_iterates_qgamma(s4.generator_monomial(0, DeltaWord{}), 1);
    REQUIRE(run4.size() == 2);
    CHECK(run4[1] == GammaElement(s4.generator_monomial(0, DeltaWord{{3}})));
}

TEST_CASE("vartheta is injective and nonzero on indecomposables for n >= 3") {
    for (Index n = 3; n <= 5; ++n) {
        FreeHomotopy fh = FreeHomotopy::sphere(n);
        std::set<GammaElement> images;
        for (const auto& g : sphere_generators(n, 24)) {
            const GammaElement image =
                fh.algebra().q_gamma(fh.vartheta(GammaElement(fh.generator_monomial(0, g.word))));
            CHECK_FALSE(image.is_zero());
            CHECK(images.insert(image).second);
        }
    }
}

TEST_CASE("the pair relation holds as an action identity on basis classes") {
    // delta_i(delta_j(x)) must equal the action of the rewritten pair on x;
    // rewritten terms whose inner index exceeds deg x have excess beyond
    // deg x and act as zero
    Rewriter rw;
    for (Index n : {2, 3, 4}) {
        FreeHomotopy fh(GradedVectorSpace{{{"w", n}, {"u", 2}}});
        const E1Page page = fh.e1_page(16, 9);
        for (const auto& [st, cell] : page.cells) {
            const Index t = st.second;
            if (t < 2)
                continue;
            for (const auto& m : cell) {
                const GammaElement x(m);
                for (Index j = 2; j <= t; ++j) {
                    for (Index i = 2; i < 2 * j && i <= t + j; ++i) {
                        const GammaElement lhs = fh.delta(fh.delta(x, j), i);
                        GammaElement rhs;
                        for (const DeltaWord& pr : rw.pair(i, j).keys) {
                            const Index a = pr.idx[0], b = pr.idx[1];
                            if (b > t)
                                continue;
                            rhs += fh.delta(fh.delta(x, b), a);
                        }
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("alpha powers") {
    CHECK(alpha_power(3, 1).word == DeltaWord{{2}});
    CHECK(alpha_power(3, 2).word == DeltaWord{{4, 2}});
    CHECK(alpha_power(4, 1).word == DeltaWord{{2}});
    CHECK(alpha_power(5, 3).word == DeltaWord{{8, 4, 2}});
    CHECK_THROWS_AS(alpha_power(2, 1), std::invalid_argument);
    // always a nonzero indecomposable basis generator
    for (Index n = 3; n <= 6; ++n) {
        for (Index t = 1; t <= 5; ++t) {
            const SphereGenerator g = alpha_power(n, t);
            CHECK(g.word.admissible());
            CHECK(g.word.excess() < n);
        }
    }
}

TEST_CASE("graded space JSON") {
    const GradedVectorSpace w =
        GradedVectorSpace::from_json_text(R"({"generators":[{"name":"y","degree":4}]})");
    REQUIRE(w.generators.size() == 1);
    CHECK(w.generators[0].name == "y");
    CHECK(w.generators[0].degree == 4);
    CHECK_THROWS_AS(GradedVectorSpace::from_json_text("[]"), parse_error);
    CHECK_THROWS_AS(
        GradedVectorSpace::from_json_text(R"({"generators":[{"name":"y","degree":0}]})"),
        parse_error);
    CHECK_THROWS_AS(GradedVectorSpace::from_json_text(
                        R"({"generators":[{"name":"y","degree":1},{"name":"y","degree":2}]})"),
                    parse_error);
}
