#include <doctest.h>

#include <szz/algebra.hpp>

#include "test_support.hpp"

using namespace szz;
using namespace szz::testing;

TEST_CASE("dimension formula on the worked example and degenerate cases") {
    Graph g = square_with_diagonal();
    ZigzagAlgebra alg(g, example_family(g));
    CHECK(alg.dim() == 18);   // 2*4 + 2*5

    Graph one({"a"}, {});
    ZigzagAlgebra a1(one, SkewCoefficients::ones(one));
    CHECK(a1.dim() == 2);
    CHECK(a1.basis_labels() == std::vector<std::string>{"1", "X"});
    CHECK(a1.degrees() == std::vector<int>{0, 1});

    Graph two({"a", "b"}, {{"a", "b"}});
    ZigzagAlgebra a2(two, SkewCoefficients::ones(two));
    CHECK(a2.dim() == 6);
    CHECK(a2.basis_labels() ==
          std::vector<std::string>{"[a]", "[b]", "[a|b]", "[b|a]", "[a|b|a]", "[b|a|b]"});
}

TEST_CASE("one-vertex algebra: X squared is zero, unit acts as identity") {
    Graph one({"a"}, {});
    ZigzagAlgebra alg(one, SkewCoefficients::ones(one));
    AlgebraElement X = alg.basis_element(1);
    CHECK(multiply(X, X) == alg.zero());
    CHECK(multiply(alg.unit(), X) == X);
    CHECK(trace(X) == 1);
    FrobeniusReport rep = check_frobenius(alg);
    CHECK(rep.nondegenerate);
    CHECK(rep.trace_extended_beyond_three_vertices);
}

TEST_CASE("basis layout and degrees") {
    Graph g = square_with_diagonal();
    ZigzagAlgebra alg(g, example_family(g));
    int c0 = 0, c1 = 0, c2 = 0;
    for (int d : alg.degrees()) (d == 0 ? c0 : d == 1 ? c1 : c2)++;
    CHECK(c0 == 4);
    CHECK(c1 == 10);
    CHECK(c2 == 4);
    CHECK(alg.basis_labels()[alg.vertex_index(g.require("a"))] == "[a]");
    int ab = alg.arrow_index(g.require("a"), g.require("b"));
    CHECK(alg.basis_labels()[ab] == "[a|b]");
    // default distinguished neighbor of a is its least neighbor b
    CHECK(alg.distinguished_neighbor(g.require("a")) == g.require("b"));
    CHECK(alg.basis_labels()[alg.loop_index(g.require("a"))] == "[a|b|a]");
}

TEST_CASE("idempotents and unit") {
    Graph g = square_with_diagonal();
    ZigzagAlgebra alg(g, example_family(g));
    int ia = alg.vertex_index(g.require("a"));
    int ib = alg.vertex_index(g.require("b"));
    AlgebraElement ea = alg.basis_element(ia), eb = alg.basis_element(ib);
    CHECK(multiply(ea, ea) == ea);
    CHECK(multiply(ea, eb) == alg.zero());
    for (int i = 0; i < alg.dim(); ++i) {
        AlgebraElement x = alg.basis_element(i);
        CHECK(multiply(alg.unit(), x) == x);
        CHECK(multiply(x, alg.unit()) == x);
    }
}

TEST_CASE("worked-example products with the default distinguished neighbors") {
    Graph g = square_with_diagonal();
    SkewCoefficients v = example_family(g);
    ZigzagAlgebra alg(g, v);
    int a = g.require("a"), b = g.require("b"), d = g.require("d");

    // (a|d|a) = v^a_{d,b} [a|b|a] = (1/2)[a|b|a]
    AlgebraElement nf = normal_form(alg, Walk::of(g, {"a", "d", "a"}));
    CHECK(nf == Rational(1, 2) * alg.basis_element(alg.loop_index(a)));

    AlgebraElement ad = alg.basis_element(alg.arrow_index(a, d));
    AlgebraElement da = alg.basis_element(alg.arrow_index(d, a));
    CHECK(multiply(ad, da) == Rational(1, 2) * alg.basis_element(alg.loop_index(a)));

    // (a|b|c) with a != c reduces to zero, as does any longer path.
    CHECK(normal_form(alg, Walk::of(g, {"a", "b", "c"})) == alg.zero());
    CHECK(normal_form(alg, Walk::of(g, {"a", "b", "a", "b"})) == alg.zero());
    CHECK(normal_form(alg, Walk::of(g, {"a", "b"})) ==
          alg.basis_element(alg.arrow_index(a, b)));
    CHECK(normal_form(alg, Walk::of(g, {"b"})) == alg.basis_element(alg.vertex_index(b)));
}

TEST_CASE("explicit distinguished-neighbor override changes the loop basis coherently") {
    Graph g = square_with_diagonal();
    SkewCoefficients v = example_family(g);
    ZigzagAlgebra alg(g, v);
    // pick the greatest neighbor everywhere instead of the least
    std::vector<int> y2;
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
        y2.push_back(g.neighbors(static_cast<int>(x)).back());
    ZigzagAlgebra alg2(g, v, y2);
    // [a|b][b|a] coefficients differ exactly by the loop rescaling v^a_{y2_a, y_a}
    for (const auto& [a, b] : g.edges()) {
        for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
            const auto& e1 = alg.table(alg.arrow_index(s, t), alg.arrow_index(t, s));
            const auto& e2 = alg2.table(alg2.arrow_index(s, t), alg2.arrow_index(t, s));
            CHECK(e1.coeff == e2.coeff * v.value(s, alg2.distinguished_neighbor(s),
                                                 alg.distinguished_neighbor(s)));
        }
    }
}

TEST_CASE("trace values and the trace pairing") {
    Graph g = square_with_diagonal();
    SkewCoefficients v = example_family(g);
    ZigzagAlgebra alg(g, v);
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        CHECK(trace(alg.basis_element(alg.loop_index(static_cast<int>(x)))) == 1);
        CHECK(trace(alg.basis_element(alg.vertex_index(static_cast<int>(x)))) == 0);
    }
    for (const auto& [a, b] : g.edges()) {
        for (auto [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
            AlgebraElement st = alg.basis_element(alg.arrow_index(s, t));
            AlgebraElement ts = alg.basis_element(alg.arrow_index(t, s));
            CHECK(trace(multiply(st, ts)) == v.value(s, t, alg.distinguished_neighbor(s)));
        }
    }
}

TEST_CASE("frobenius reports: all-ones symmetric, worked example asymmetric") {
    Graph g = square_with_diagonal();
    ZigzagAlgebra ones(g, SkewCoefficients::ones(g));
    FrobeniusReport r1 = check_frobenius(ones);
    CHECK(r1.nondegenerate);
    CHECK(r1.symmetric);
    CHECK(!r1.trace_extended_beyond_three_vertices);

    SkewCoefficients v = example_family(g);
    ZigzagAlgebra alg(g, v);
    FrobeniusReport r2 = check_frobenius(alg);
    CHECK(r2.nondegenerate);
    CHECK(r2.gram_rank == 18);
    CHECK(!r2.symmetric);
    REQUIRE(r2.asymmetric_pair.has_value());
    auto [i, j] = *r2.asymmetric_pair;
    AlgebraElement bi = alg.basis_element(i), bj = alg.basis_element(j);
    CHECK(trace(multiply(bi, bj)) != trace(multiply(bj, bi)));
    // the advertised witness: trace([a|d][d|a]) = v^a_{d,b} vs trace([d|a][a|d]) = v^d_{a,y_d}
    int a = g.require("a"), d = g.require("d");
    Rational lhs = trace(multiply(alg.basis_element(alg.arrow_index(a, d)),
                                  alg.basis_element(alg.arrow_index(d, a))));
    Rational rhs = trace(multiply(alg.basis_element(alg.arrow_index(d, a)),
                                  alg.basis_element(alg.arrow_index(a, d))));
    CHECK(lhs != rhs);
}

TEST_CASE("associativity and grading on random algebras") {
    std::mt19937 rng(53);
    for (int t = 0; t < 8; ++t) {
        Graph g = random_connected_graph(rng, 5);
        ZigzagAlgebra alg(g, random_family(g, rng));
        CHECK(alg.dim() == 2 * static_cast<int>(g.vertex_count() + g.edge_count()));
        if (alg.dim() <= 30) {
            for (int i = 0; i < alg.dim(); ++i)
                for (int j = 0; j < alg.dim(); ++j) {
                    const auto& e = alg.table(i, j);
                    if (e.index >= 0 && e.coeff != 0)
                        CHECK(alg.degree(e.index) == alg.degree(i) + alg.degree(j));
                    for (int k = 0; k < alg.dim(); ++k) {
                        AlgebraElement x = alg.basis_element(i), y = alg.basis_element(j),
                                       z = alg.basis_element(k);
                        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
                    }
                }
        }
    }
}

TEST_CASE("grading splits elements into homogeneous parts") {
    Graph g = square_with_diagonal();
    ZigzagAlgebra alg(g, example_family(g));
    std::vector<Rational> coords(alg.dim(), Rational(1));
    AlgebraElement x(alg, coords);
    auto parts = grading(x);
    REQUIRE(parts.size() == 3);
    AlgebraElement sum = parts[0] + parts[1] + parts[2];
    CHECK(sum == x);
    for (int d = 0; d < 3; ++d)
        for (int i = 0; i < alg.dim(); ++i)
            if (alg.degree(i) != d) CHECK(parts[d][i] == 0);
    // product of two degree-1 elements is pure degree 2 (or zero)
    auto prod = multiply(parts[1], parts[1]);
    auto pp = grading(prod);
    CHECK(pp[0].is_zero());
    CHECK(pp[1].is_zero());
}

TEST_CASE("gram rank is full for random families") {
    std::mt19937 rng(59);
    for (int t = 0; t < 6; ++t) {
        Graph g = random_connected_graph(rng, 5);
        ZigzagAlgebra alg(g, random_family(g, rng));
        CHECK(check_frobenius(alg).nondegenerate);
    }
}

TEST_CASE("mismatched algebras are rejected") {
    Graph g = square_with_diagonal();
    Graph h = triangle();
    ZigzagAlgebra a(g, example_family(g));
    ZigzagAlgebra b(h, SkewCoefficients::ones(h));
    CHECK_THROWS_WITH_AS(multiply(a.unit(), b.unit()), doctest::Contains("AlgebraMismatch"),
                         Error);
    Graph disc({"a", "b", "c"}, {{"a", "b"}});
    CHECK_THROWS_WITH_AS(ZigzagAlgebra(disc, SkewCoefficients::ones(disc)),
                         doctest::Contains("Disconnected"), Error);
}
