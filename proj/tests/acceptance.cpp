// Acceptance gate: one pass/fail line per criterion; exit 1 on any failure.

#include <szz/classify.hpp>
#include <szz/json_io.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "test_support.hpp"

using namespace szz;
using namespace szz::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title << detail << "\n";
}

bool verified_positive(const Graph& g, const SkewCoefficients& v, const SkewCoefficients& u,
                       const IsoCertificate& cert) {
    if (!cert.positive() || !cert.scaling) return false;
    SkewCoefficients target =
        cert.automorphism ? act(cert.automorphism->inverse(), u) : u;
    ZigzagAlgebra av(g, v), at(g, target);
    return verify_homomorphism(*cert.scaling, std::nullopt, av, at);
}

} // namespace

int main() {
    criterion(1, "worked example: six exact path/cycle products", [] {
        auto start = std::chrono::steady_clock::now();
        Graph g = square_with_diagonal();
        SkewCoefficients v = example_family(g);
        Walk p1 = Walk::of(g, {"d", "b", "c", "d"});
        Walk p2 = Walk::of(g, {"d", "a", "b", "d"});
        bool ok = path_product(v, p1) == 14 && path_product(v, p2) == Rational(5, 14) &&
                  path_product(v, p1.concat(p2)) == 1 && cycle_product(v, p1) == 2 &&
                  cycle_product(v, p2) == Rational(1, 2) &&
                  cycle_product(v, p1.concat(p2)) == 1;
        auto elapsed = std::chrono::steady_clock::now() - start;
        return ok && elapsed < std::chrono::milliseconds(1);
    });

    // The 50 random (graph, family) pairs shared by criteria 2-4.
    std::mt19937 rng2(101);
    std::vector<Graph> graphs;
    for (int t = 0; t < 48; ++t) graphs.push_back(random_connected_graph(rng2, 8));
    graphs.push_back(Graph({"a"}, {}));
    graphs.push_back(Graph({"a", "b"}, {{"a", "b"}}));
    std::vector<ZigzagAlgebra> algebras;

    criterion(2, "dimension formula on 50 random graphs incl. |V| in {1,2}", [&] {
        for (const Graph& g : graphs) {
            algebras.emplace_back(g, random_family(g, rng2));
            if (algebras.back().dim() != 2 * static_cast<int>(g.vertex_count() + g.edge_count()))
                return false;
        }
        return true;
    });

    criterion(3, "associativity and grading, full triple check for |J| <= 30", [&] {
        for (const ZigzagAlgebra& alg : algebras) {
            const int dim = alg.dim();
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    const auto& e = alg.table(i, j);
                    if (e.index >= 0 && e.coeff != 0 &&
                        alg.degree(e.index) != alg.degree(i) + alg.degree(j))
                        return false;
                }
            if (dim > 30) continue;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    for (int k = 0; k < dim; ++k) {
                        AlgebraElement x = alg.basis_element(i), y = alg.basis_element(j),
                                       z = alg.basis_element(k);
                        if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                            return false;
                    }
        }
        return true;
    });

    criterion(4, "Frobenius: full Gram rank; ones symmetric; example asymmetric", [&] {
        for (const ZigzagAlgebra& alg : algebras)
            if (!check_frobenius(alg).nondegenerate) return false;
        Graph g = square_with_diagonal();
        ZigzagAlgebra ones(g, SkewCoefficients::ones(g));
        if (!check_frobenius(ones).symmetric) return false;
        ZigzagAlgebra ex(g, example_family(g));
        FrobeniusReport rep = check_frobenius(ex);
        return rep.nondegenerate && !rep.symmetric && rep.asymmetric_pair.has_value();
    });

    criterion(5, "cycle space: rank formula plus 100 decompose round-trips", [&] {
        std::mt19937 rng(103);
        std::uniform_int_distribution<int> coeff(-6, 6);
        int trips = 0;
        while (trips < 100) {
            Graph g = random_connected_graph(rng, 8);
            FundamentalCycleBasis basis(g);
            if (basis.size() != g.edge_count() - g.vertex_count() + 1) return false;
            for (int r = 0; r < 4 && trips < 100; ++r, ++trips) {
                std::vector<Int> m;
                CycleVector z(g);
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    m.push_back(coeff(rng));
                    z += m.back() * basis.vectors()[i];
                }
                if (decompose(z, basis) != m) return false;
            }
        }
        return true;
    });

    criterion(6, "f_v consistency on 100 random (graph, family, walk) triples", [] {
        std::mt19937 rng(107);
        for (int t = 0; t < 100; ++t) {
            Graph g = random_connected_graph(rng, 8);
            SkewCoefficients v = random_family(g, rng);
            FundamentalCycleBasis basis(g);
            Walk w = random_closed_walk(g, basis.tree(), rng);
            if (evaluate_class(class_of(v, basis), walk_to_vector(w)) != cycle_product(v, w))
                return false;
        }
        return true;
    });

    criterion(7, "classification soundness oracle on 30 random pairs", [] {
        std::mt19937 rng(109);
        for (int t = 0; t < 30; ++t) {
            Graph g = random_connected_graph(rng, 6);
            SkewCoefficients v = random_family(g, rng);
            SkewCoefficients u = random_family(g, rng);
            EquivalenceResult eq = decide_equivalent(v, u);
            if (eq.equivalent) {
                ZigzagAlgebra av(g, v), au(g, u);
                if (!verify_homomorphism(construct_vertex_fixing_iso(v, u), std::nullopt, av, au))
                    return false;
            }
            IsoCertificate cert = decide_isomorphic(v, u);
            if (cert.positive()) {
                if (!verified_positive(g, v, u, cert)) return false;
            } else {
                FundamentalCycleBasis basis(g);
                CohomologyClass fv = class_of(v, basis), fu = class_of(u, basis);
                for (const auto& sigma : enumerate_automorphisms(g))
                    if (fv == act_class(sigma, fu)) return false;
            }
        }
        return true;
    });

    criterion(8, "surjectivity: class_of(construct_from_class(f)) = f, 30 classes", [] {
        std::mt19937 rng(113);
        for (int t = 0; t < 30; ++t) {
            Graph g = random_connected_graph(rng, 8);
            FundamentalCycleBasis basis(g);
            std::vector<Rational> vals;
            for (std::size_t i = 0; i < basis.size(); ++i)
                vals.push_back(random_small_rational(rng));
            CohomologyClass f(basis, vals);
            if (!(class_of(construct_from_class(f), basis) == f)) return false;
        }
        return true;
    });

    criterion(9, "tree corollary: all family pairs isomorphic on 20 random trees", [] {
        std::mt19937 rng(127);
        for (int t = 0; t < 20; ++t) {
            Graph g = random_tree(rng, 10);
            SkewCoefficients v = random_family(g, rng);
            SkewCoefficients u = random_family(g, rng);
            IsoCertificate cert = decide_isomorphic(v, u);
            if (!verified_positive(g, v, u, cert)) return false;
        }
        return true;
    });

    criterion(10, "triangle moduli: x vs 1/x isomorphic, x vs y not (x,y in {2,3,5})", [] {
        Graph g = triangle();
        for (long x : {2L, 3L, 5L}) {
            SkewCoefficients vx = triangle_family(g, Rational(x));
            IsoCertificate pos = decide_isomorphic(vx, triangle_family(g, Rational(1, x)));
            if (pos.verdict != IsoVerdict::isomorphic_via_automorphism) return false;
            if (decide_equivalent(vx, triangle_family(g, Rational(1, x))).equivalent)
                return false;
            for (long y : {2L, 3L, 5L})
                if (y != x &&
                    decide_isomorphic(vx, triangle_family(g, Rational(y))).positive())
                    return false;
        }
        return true;
    });

    criterion(11, "bipartite obstruction: C3/C5 negative, C4/C6 positive, exhaustive", [] {
        for (int n : {3, 5}) {
            ObstructionReport rep = check_bipartite_obstruction(cycle_graph(n));
            if (rep.bipartite || !rep.exhaustive || !rep.consistent ||
                rep.isomorphic_count != 0)
                return false;
        }
        for (int n : {4, 6}) {
            ObstructionReport rep = check_bipartite_obstruction(cycle_graph(n));
            if (!rep.bipartite || !rep.exhaustive || !rep.consistent ||
                rep.isomorphic_count != rep.orientations_checked)
                return false;
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "all 11 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
