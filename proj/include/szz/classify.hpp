#ifndef SZZ_CLASSIFY_HPP
#define SZZ_CLASSIFY_HPP

#include <szz/algebra.hpp>
#include <szz/coefficients.hpp>
#include <szz/cycle_space.hpp>
#include <szz/graph.hpp>

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace szz {

/// A vertex-fixing graded isomorphism A_v(Γ) → A_u(Γ):
/// [a] ↦ [a], [d|e] ↦ α_{d,e}[d|e]. Only the per-edge products
/// β_{d,e} = α_{d,e} α_{e,d} are constrained, so the whole factor is carried
/// on the canonical direction and the reverse direction gets 1 — no square
/// roots needed.
struct EdgeScaling {
    // Per edge (indexed like Graph::edges()): forward is α along the
    // canonical (min|max) direction, backward along (max|min).
    std::vector<Rational> forward;
    std::vector<Rational> backward;

    Rational alpha(const Graph& g, int from, int to) const {
        int e = g.edge_index(from, to);
        return from < to ? forward.at(e) : backward.at(e);
    }

    Rational beta(int edge_index) const {
        return forward.at(edge_index) * backward.at(edge_index);
    }
};

struct Obstruction {
    Walk cycle;
    Rational lhs;   // value of class_of(v) on the cycle
    Rational rhs;   // value of class_of(u) on the cycle
};

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Obstruction> obstruction;
};

enum class IsoVerdict { equivalent, isomorphic_via_automorphism, not_isomorphic };

struct IsoCertificate {
    IsoVerdict verdict = IsoVerdict::not_isomorphic;
    std::optional<GraphAutomorphism> automorphism;   // absent for vertex-fixing case
    std::optional<EdgeScaling> scaling;
    std::optional<Obstruction> obstruction;          // witness for the negative verdict

    bool positive() const { return verdict != IsoVerdict::not_isomorphic; }
};

/// v ∼ u iff their classes agree on the fundamental basis. Graphs with fewer
/// than 3 vertices carry only the trivial family, so they are always
/// equivalent.
inline EquivalenceResult decide_equivalent(const SkewCoefficients& v, const SkewCoefficients& u,
                                           const FundamentalCycleBasis& basis) {
    v.check_same_graph(u);
    EquivalenceResult r;
    if (v.graph().vertex_count() <= 2) {
        r.equivalent = true;
        return r;
    }
    CohomologyClass fv = class_of(v, basis);
    CohomologyClass fu = class_of(u, basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (fv.values()[i] != fu.values()[i]) {
            r.equivalent = false;
            r.obstruction = Obstruction{basis.cycles()[i], fv.values()[i], fu.values()[i]};
            return r;
        }
    r.equivalent = true;
    return r;
}

inline EquivalenceResult decide_equivalent(const SkewCoefficients& v,
                                           const SkewCoefficients& u) {
    FundamentalCycleBasis basis(v.graph());
    return decide_equivalent(v, u, basis);
}

/// Computes the edge products β by spanning-tree propagation.
///
/// The homomorphism constraint is u^x_{z,y} = (β_{x,y}/β_{x,z}) v^x_{z,y}.
/// Writing d = u·v⁻¹ in weight form, β restricted to the star of x must be
/// proportional to g^d_x, i.e. β_{x,y} = λ_x g^d_x(y) with one unknown λ per
/// vertex. λ propagates along tree edges from the root; the non-tree edges
/// are then verified, which succeeds exactly when the classes agree.
inline EdgeScaling construct_vertex_fixing_iso(const SkewCoefficients& v,
                                               const SkewCoefficients& u,
                                               const FundamentalCycleBasis& basis) {
    v.check_same_graph(u);
    const Graph& g = v.graph();
    SkewCoefficients d = compose(u, invert(v));
    const SpanningTree& tree = basis.tree();

    std::vector<Rational> lambda(g.vertex_count(), Rational(0));
    if (g.vertex_count() > 0) lambda[0] = 1;
    for (int x : tree.bfs_order()) {
        if (x == 0) continue;
        int p = tree.parent(x);
        // β on edge {p,x} seen from both endpoints: λ_p g^d_p(x) = λ_x g^d_x(p).
        lambda[x] = lambda[p] * d.weight(p, x) / d.weight(x, p);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int e = basis.distinguished_edge(i);
        const auto& [a, b] = g.edges()[e];
        if (lambda[a] * d.weight(a, b) != lambda[b] * d.weight(b, a)) {
            CohomologyClass fv = class_of(v, basis);
            CohomologyClass fu = class_of(u, basis);
            throw Error("NotEquivalent",
                        "classes differ on the fundamental cycle through edge {" + g.name(a) +
                            "," + g.name(b) + "}: " + to_string(fv.values()[i]) + " vs " +
                            to_string(fu.values()[i]));
        }
    }

    EdgeScaling s;
    s.forward.reserve(g.edge_count());
    s.backward.assign(g.edge_count(), Rational(1));
    for (const auto& [a, b] : g.edges()) s.forward.push_back(lambda[a] * d.weight(a, b));
    return s;
}

inline EdgeScaling construct_vertex_fixing_iso(const SkewCoefficients& v,
                                               const SkewCoefficients& u) {
    FundamentalCycleBasis basis(v.graph());
    return construct_vertex_fixing_iso(v, u, basis);
}

/// Ground-truth oracle: materializes the candidate linear map on the basis J
/// and checks multiplicativity on every basis pair, unitality and
/// bijectivity. `sigma` composes a graph automorphism after the scaling, so
/// the map sends A_v(Γ) → A_u(Γ) with u = act(σ⁻¹, ·)-matched coefficients.
inline bool verify_homomorphism(const EdgeScaling& scaling,
                                const std::optional<GraphAutomorphism>& sigma,
                                const ZigzagAlgebra& av, const ZigzagAlgebra& au,
                                std::string* first_failure = nullptr) {
    const Graph& g = av.graph();
    auto note = [&](const std::string& msg) {
        if (first_failure) *first_failure = msg;
        return false;
    };
    if (!(g == au.graph())) return note("algebras live on different graphs");

    auto map_vertex = [&](int a) { return sigma ? (*sigma)(a) : a; };

    if (av.one_vertex()) {
        // Only the trivial family exists; the identity map is the certificate.
        return true;
    }

    // Images of the J basis of A_v as elements of A_u.
    std::vector<AlgebraElement> image;
    image.reserve(av.dim());
    const int n = static_cast<int>(g.vertex_count());
    for (int a = 0; a < n; ++a)
        image.push_back(au.basis_element(au.vertex_index(map_vertex(a))));
    for (const auto& [a, b] : g.edges()) {
        image.push_back(scaling.alpha(g, a, b) *
                        au.basis_element(au.arrow_index(map_vertex(a), map_vertex(b))));
        image.push_back(scaling.alpha(g, b, a) *
                        au.basis_element(au.arrow_index(map_vertex(b), map_vertex(a))));
    }
    for (int x = 0; x < n; ++x) {
        int y = av.distinguished_neighbor(x);
        Walk loop(g, {map_vertex(x), map_vertex(y), map_vertex(x)});
        image.push_back(scaling.beta(g.edge_index(x, y)) * normal_form(au, loop));
    }

    auto apply = [&](const AlgebraElement& x) {
        AlgebraElement out = au.zero();
        for (int i = 0; i < av.dim(); ++i)
            if (x[i] != 0) out += x[i] * image[i];
        return out;
    };

    // Bijectivity: each image is a nonzero multiple of a distinct basis element.
    std::vector<char> hit(au.dim(), 0);
    for (int i = 0; i < av.dim(); ++i) {
        int support = -1;
        for (int j = 0; j < au.dim(); ++j)
            if (image[i][j] != 0) {
                if (support != -1) return note("image of basis element not a basis multiple");
                support = j;
            }
        if (support == -1) return note("basis element maps to zero");
        if (hit[support]) return note("two basis elements map onto the same line");
        hit[support] = 1;
    }

    if (!(apply(av.unit()) == au.unit())) return note("unit is not preserved");

    for (int i = 0; i < av.dim(); ++i)
        for (int j = 0; j < av.dim(); ++j) {
            const auto& t = av.table(i, j);
            AlgebraElement lhs = t.index >= 0 ? t.coeff * image[t.index] : au.zero();
            AlgebraElement rhs = multiply(image[i], image[j]);
            if (!(lhs == rhs))
                return note("multiplicativity fails on basis pair (" + av.basis_labels()[i] +
                            ", " + av.basis_labels()[j] + ")");
        }
    return true;
}

/// Searches Aut(Γ) in deterministic order for σ with f_v = f_{σu}; the
/// certificate then factors as σ⁻¹ after the vertex-fixing scaling
/// A_v(Γ) → A_{σu}(Γ), matching the decomposition of arbitrary isomorphisms.
inline IsoCertificate decide_isomorphic(const SkewCoefficients& v, const SkewCoefficients& u) {
    v.check_same_graph(u);
    const Graph& g = v.graph();
    IsoCertificate cert;

    FundamentalCycleBasis basis(g);
    EquivalenceResult eq = decide_equivalent(v, u, basis);
    if (eq.equivalent) {
        cert.verdict = IsoVerdict::equivalent;
        cert.scaling = construct_vertex_fixing_iso(v, u, basis);
        return cert;
    }

    for (const auto& sigma : enumerate_automorphisms(g)) {
        SkewCoefficients moved = act(sigma, u);
        EquivalenceResult r = decide_equivalent(v, moved, basis);
        if (r.equivalent) {
            cert.verdict = IsoVerdict::isomorphic_via_automorphism;
            cert.automorphism = sigma.inverse();
            cert.scaling = construct_vertex_fixing_iso(v, moved, basis);
            return cert;
        }
    }

    cert.verdict = IsoVerdict::not_isomorphic;
    cert.obstruction = eq.obstruction;
    return cert;
}

/// Antisymmetric nonzero edge values ε_{a,b} = −ε_{b,a}, stored on the
/// canonical direction per edge.
class OrientationCoefficients {
public:
    OrientationCoefficients(const Graph& g, std::vector<Rational> forward_values)
        : graph_(&g), forward_(std::move(forward_values)) {
        if (forward_.size() != g.edge_count())
            throw Error("BadOrientation", "one value per edge required");
        for (const auto& x : forward_)
            if (x == 0) throw Error("ZeroValue", "orientation coefficients must be nonzero");
    }

    /// ±1 values from an orientation: bit i set means the canonical direction
    /// of edge i is the chosen one.
    static OrientationCoefficients from_orientation(const Graph& g, unsigned long bits) {
        std::vector<Rational> fwd;
        fwd.reserve(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            fwd.push_back((bits >> e) & 1 ? Rational(1) : Rational(-1));
        return OrientationCoefficients(g, std::move(fwd));
    }

    const Graph& graph() const { return *graph_; }

    Rational epsilon(int a, int b) const {
        int e = graph_->edge_index(a, b);
        if (e < 0) return 0;
        return a < b ? forward_[e] : -forward_[e];
    }

private:
    const Graph* graph_;
    std::vector<Rational> forward_;
};

/// v^a_{b,c} = ε_{a,c}/ε_{a,b}; the ratio form satisfies the axioms
/// automatically.
inline SkewCoefficients orientation_to_coefficients(const OrientationCoefficients& om) {
    const Graph& g = om.graph();
    std::vector<std::vector<Rational>> weights(g.vertex_count());
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        const auto& nbrs = g.neighbors(static_cast<int>(a));
        weights[a].reserve(nbrs.size());
        for (int y : nbrs) weights[a].push_back(om.epsilon(static_cast<int>(a), y));
    }
    return SkewCoefficients(g, std::move(weights));
}

struct ObstructionReport {
    bool bipartite = false;
    std::size_t orientations_checked = 0;
    bool exhaustive = false;
    std::size_t isomorphic_count = 0;   // orientations whose algebra matches the zigzag one
    // Non-bipartite graphs must give 0 matches; bipartite ones must match always.
    bool consistent = false;
};

/// Compares the zigzag algebra against every orientation-induced algebra;
/// exhausts all 2^|E| orientations when |E| <= 12, else samples 256.
inline ObstructionReport check_bipartite_obstruction(const Graph& g) {
    ObstructionReport rep;
    rep.bipartite = is_bipartite(g).bipartite;
    SkewCoefficients ones = SkewCoefficients::ones(g);

    std::vector<unsigned long> picks;
    if (g.edge_count() <= 12) {
        rep.exhaustive = true;
        for (unsigned long bits = 0; bits < (1ul << g.edge_count()); ++bits)
            picks.push_back(bits);
    } else {
        std::mt19937_64 rng(2016);
        std::uniform_int_distribution<unsigned long> dist(0, (1ul << g.edge_count()) - 1);
        for (int i = 0; i < 256; ++i) picks.push_back(dist(rng));
    }

    for (unsigned long bits : picks) {
        auto induced =
            orientation_to_coefficients(OrientationCoefficients::from_orientation(g, bits));
        if (decide_isomorphic(ones, induced).positive()) ++rep.isomorphic_count;
    }
    rep.orientations_checked = picks.size();
    rep.consistent = rep.bipartite ? rep.isomorphic_count == rep.orientations_checked
                                   : rep.isomorphic_count == 0;
    return rep;
}

} // namespace szz

#endif
