#ifndef SZZ_COEFFICIENTS_HPP
#define SZZ_COEFFICIENTS_HPP

#include <szz/cycle_space.hpp>
#include <szz/graph.hpp>
#include <szz/rational.hpp>

#include <map>
#include <tuple>
#include <vector>

namespace szz {

/// One raw entry v^at_{from,to} = value.
struct CoefficientTriple {
    std::string at;
    std::string from;
    std::string to;
    Rational value;
};

/// A family v^a_{b,c} satisfying
///   v^a_{b,b} = 1,   v^a_{b,c} v^a_{c,b} = 1,   v^a_{b,c} v^a_{c,d} v^a_{d,b} = 1.
///
/// Stored canonically per vertex x as weights g_x on the neighbors of x with
/// g_x(least neighbor) = 1 and v^x_{y,z} = g_x(z)/g_x(y). The three axioms
/// hold identically in this form, and every valid family has one (the
/// telescoping law collapses any chain of triples to a ratio).
class SkewCoefficients {
public:
    /// The all-ones (zigzag) family.
    static SkewCoefficients ones(const Graph& g) {
        std::vector<std::vector<Rational>> weights;
        weights.reserve(g.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            weights.emplace_back(g.neighbors(static_cast<int>(v)).size(), Rational(1));
        return SkewCoefficients(g, std::move(weights));
    }

    /// Builds from per-vertex weights indexed like g.neighbors(v); weights are
    /// normalized so the least neighbor carries weight 1.
    SkewCoefficients(const Graph& g, std::vector<std::vector<Rational>> weights)
        : graph_(&g), weights_(std::move(weights)) {
        if (weights_.size() != g.vertex_count())
            throw Error("BadWeights", "weight table size does not match vertex count");
        for (std::size_t v = 0; v < weights_.size(); ++v) {
            if (weights_[v].size() != g.neighbors(static_cast<int>(v)).size())
                throw Error("BadWeights", "weight row size does not match degree");
            for (const auto& w : weights_[v])
                if (w == 0) throw Error("ZeroValue", "coefficient values must be nonzero");
            if (!weights_[v].empty()) {
                Rational ref = weights_[v][0];
                for (auto& w : weights_[v]) w /= ref;
            }
        }
    }

    /// Validates a raw triple mapping: checks the axioms, completes triples
    /// derivable from them, and requires the input to determine every value.
    static SkewCoefficients validate(const Graph& g,
                                     const std::vector<CoefficientTriple>& raw);

    const Graph& graph() const { return *graph_; }

    /// v^a_{b,c}; all of b, c must be neighbors of a.
    Rational value(int a, int b, int c) const {
        return weight(a, c) / weight(a, b);
    }

    Rational value(const std::string& a, const std::string& b, const std::string& c) const {
        return value(graph_->require(a), graph_->require(b), graph_->require(c));
    }

    /// g_a(y) with g_a(least neighbor) = 1.
    const Rational& weight(int a, int y) const {
        const auto& nbrs = graph_->neighbors(a);
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), y);
        if (it == nbrs.end() || *it != y)
            throw Error("NotNeighbor",
                        "'" + graph_->name(y) + "' is not adjacent to '" + graph_->name(a) + "'");
        return weights_[a][it - nbrs.begin()];
    }

    SkewCoefficients compose(const SkewCoefficients& other) const {
        check_same_graph(other);
        auto w = weights_;
        for (std::size_t v = 0; v < w.size(); ++v)
            for (std::size_t i = 0; i < w[v].size(); ++i) w[v][i] *= other.weights_[v][i];
        return SkewCoefficients(*graph_, std::move(w));
    }

    SkewCoefficients invert() const {
        auto w = weights_;
        for (auto& row : w)
            for (auto& x : row) x = Rational(1) / x;
        return SkewCoefficients(*graph_, std::move(w));
    }

    bool operator==(const SkewCoefficients& other) const {
        return *graph_ == *other.graph_ && weights_ == other.weights_;
    }

    void check_same_graph(const SkewCoefficients& other) const {
        if (!(*graph_ == *other.graph_))
            throw Error("GraphMismatch", "coefficient families live on different graphs");
    }

    /// Deterministic triple listing for serialization: per vertex, per ordered
    /// neighbor pair, lexicographic.
    std::vector<CoefficientTriple> triples() const {
        std::vector<CoefficientTriple> out;
        for (std::size_t a = 0; a < graph_->vertex_count(); ++a) {
            const auto& nbrs = graph_->neighbors(static_cast<int>(a));
            for (int b : nbrs)
                for (int c : nbrs)
                    out.push_back({graph_->name(static_cast<int>(a)), graph_->name(b),
                                   graph_->name(c), value(static_cast<int>(a), b, c)});
        }
        return out;
    }

private:
    const Graph* graph_;
    std::vector<std::vector<Rational>> weights_;   // weights_[v][i] for i-th neighbor of v
};

inline SkewCoefficients SkewCoefficients::validate(const Graph& g,
                                                   const std::vector<CoefficientTriple>& raw) {
    struct Entry {
        int b, c;
        Rational value;
    };
    std::vector<std::vector<Entry>> per_vertex(g.vertex_count());
    for (const auto& t : raw) {
        int a = g.require(t.at);
        int b = g.require(t.from);
        int c = g.require(t.to);
        if (!g.adjacent(a, b) || !g.adjacent(a, c))
            throw Error("NotNeighbor", "triple at '" + t.at + "' references a non-neighbor");
        if (t.value == 0) throw Error("ZeroValue", "coefficient v^" + t.at + " is zero");
        if (b == c && t.value != 1)
            throw Error("AxiomViolation",
                        "axiom 1: v^" + t.at + "_{" + t.from + "," + t.from + "} must be 1");
        per_vertex[a].push_back({b, c, t.value});
    }

    // Pairwise inverse axiom on directly supplied opposite triples.
    for (std::size_t a = 0; a < per_vertex.size(); ++a)
        for (const auto& e1 : per_vertex[a])
            for (const auto& e2 : per_vertex[a])
                if (e1.b == e2.c && e1.c == e2.b && e1.value * e2.value != 1)
                    throw Error("AxiomViolation",
                                "axiom 2: v^" + g.name(static_cast<int>(a)) + "_{" +
                                    g.name(e1.b) + "," + g.name(e1.c) +
                                    "} times its reverse is not 1");

    // Per-vertex weight propagation: each triple fixes the ratio
    // g(c)/g(b); BFS from the least neighbor assigns absolute weights.
    std::vector<std::vector<Rational>> weights(g.vertex_count());
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        const auto& nbrs = g.neighbors(static_cast<int>(a));
        const int deg = static_cast<int>(nbrs.size());
        auto local = [&](int v) {
            auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
            return static_cast<int>(it - nbrs.begin());
        };
        std::vector<std::vector<std::pair<int, Rational>>> ratio(deg);   // (other, g_other/g_this)
        for (const auto& e : per_vertex[a]) {
            int ib = local(e.b), ic = local(e.c);
            ratio[ib].emplace_back(ic, e.value);
            ratio[ic].emplace_back(ib, Rational(1) / e.value);
        }
        std::vector<Rational> w(deg, Rational(0));
        if (deg > 0) {
            w[0] = 1;
            std::vector<int> stack{0};
            std::vector<char> known(deg, 0);
            known[0] = 1;
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (const auto& [j, r] : ratio[i]) {
                    Rational wj = w[i] * r;
                    if (!known[j]) {
                        known[j] = 1;
                        w[j] = wj;
                        stack.push_back(j);
                    } else if (w[j] != wj) {
                        throw Error("InconsistentCompletion",
                                    "conflicting values at vertex '" +
                                        g.name(static_cast<int>(a)) + "' for neighbor '" +
                                        g.name(nbrs[j]) + "'");
                    }
                }
            }
            for (int i = 0; i < deg; ++i)
                if (!known[i])
                    throw Error("MissingTriple",
                                "no triple determines v^" + g.name(static_cast<int>(a)) + "_{" +
                                    g.name(nbrs[0]) + "," + g.name(nbrs[i]) + "}");
        }
        weights[a] = std::move(w);
    }
    SkewCoefficients result(g, std::move(weights));

    // Re-check every supplied triple against the completed family; a failure
    // here is a cocycle (axiom 3) violation not caught by propagation order.
    for (const auto& t : raw)
        if (result.value(t.at, t.from, t.to) != t.value)
            throw Error("AxiomViolation", "axiom 3: supplied v^" + t.at + "_{" + t.from + "," +
                                              t.to + "} conflicts with the cocycle condition");
    return result;
}

inline SkewCoefficients compose(const SkewCoefficients& u, const SkewCoefficients& v) {
    return u.compose(v);
}

inline SkewCoefficients invert(const SkewCoefficients& v) { return v.invert(); }

/// Product of v along P: the interior-vertex product. Empty for length <= 1.
inline Rational path_product(const SkewCoefficients& v, const Walk& w) {
    const auto& seq = w.vertices();
    Rational out = 1;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        out *= v.value(seq[i], seq[i - 1], seq[i + 1]);
    return out;
}

/// Cycle product: one wrap-around factor at the base point times the path
/// product. Invariant under the defining relations of A_v(Γ).
inline Rational cycle_product(const SkewCoefficients& v, const Walk& w) {
    if (!w.closed()) throw Error("NotClosed", "cycle product needs a closed walk");
    const auto& seq = w.vertices();
    if (seq.size() < 3) return 1;
    return v.value(seq[0], seq[seq.size() - 2], seq[1]) * path_product(v, w);
}

/// A homomorphism C -> k*, recorded by its values on a fundamental basis.
class CohomologyClass {
public:
    CohomologyClass(const FundamentalCycleBasis& basis, std::vector<Rational> values)
        : basis_(&basis), values_(std::move(values)) {
        if (values_.size() != basis.size())
            throw Error("BadClass", "value count does not match basis size");
        for (const auto& x : values_)
            if (x == 0) throw Error("ZeroValue", "class values must be nonzero");
    }

    const FundamentalCycleBasis& basis() const { return *basis_; }
    const std::vector<Rational>& values() const { return values_; }

    bool operator==(const CohomologyClass& other) const { return values_ == other.values_; }

    CohomologyClass compose(const CohomologyClass& other) const {
        auto vals = values_;
        for (std::size_t i = 0; i < vals.size(); ++i) vals[i] *= other.values_[i];
        return CohomologyClass(*basis_, std::move(vals));
    }

private:
    const FundamentalCycleBasis* basis_;
    std::vector<Rational> values_;
};

/// f_v: each basis cycle to its cycle product.
inline CohomologyClass class_of(const SkewCoefficients& v, const FundamentalCycleBasis& basis) {
    std::vector<Rational> vals;
    vals.reserve(basis.size());
    for (const auto& c : basis.cycles()) vals.push_back(cycle_product(v, c));
    return CohomologyClass(basis, std::move(vals));
}

/// f(z) = Π f(C_i)^{m_i} where z = Σ m_i C_i.
inline Rational evaluate_class(const CohomologyClass& f, const CycleVector& z) {
    std::vector<Int> m = decompose(z, f.basis());
    Rational out = 1;
    for (std::size_t i = 0; i < m.size(); ++i) out *= pow_rational(f.values()[i], m[i]);
    return out;
}

/// A family realizing a prescribed class: weight f(C_i) on the head of each
/// distinguished non-tree edge (b_i|c_i), weight 1 everywhere else. Each
/// traversal of e_i then contributes exactly f(C_i)^{±1} to a cycle product,
/// so class_of(result) = f on the nose.
inline SkewCoefficients construct_from_class(const CohomologyClass& f) {
    const Graph& g = f.basis().graph();
    std::vector<std::vector<Rational>> weights;
    weights.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        weights.emplace_back(g.neighbors(static_cast<int>(v)).size(), Rational(1));
    for (std::size_t i = 0; i < f.basis().size(); ++i) {
        const auto& cyc = f.basis().cycles()[i].vertices();
        int b = cyc[cyc.size() - 2];   // the distinguished edge is the final step (b_i|c_i)
        int c = cyc[cyc.size() - 1];
        const auto& nbrs = g.neighbors(b);
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), c);
        weights[b][it - nbrs.begin()] = f.values()[i];
    }
    return SkewCoefficients(g, std::move(weights));
}

/// (σv)^a_{b,c} = v^{σ⁻¹(a)}_{σ⁻¹(b),σ⁻¹(c)}.
inline SkewCoefficients act(const GraphAutomorphism& sigma, const SkewCoefficients& v) {
    const Graph& g = v.graph();
    GraphAutomorphism inv = sigma.inverse();
    std::vector<std::vector<Rational>> weights(g.vertex_count());
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        const auto& nbrs = g.neighbors(static_cast<int>(a));
        weights[a].reserve(nbrs.size());
        for (int y : nbrs) weights[a].push_back(v.weight(inv(static_cast<int>(a)), inv(y)));
    }
    return SkewCoefficients(g, std::move(weights));
}

/// (σf)(C) = f(σ⁻¹(C)), evaluated on each basis cycle.
inline CohomologyClass act_class(const GraphAutomorphism& sigma, const CohomologyClass& f) {
    GraphAutomorphism inv = sigma.inverse();
    std::vector<Rational> vals;
    vals.reserve(f.basis().size());
    for (const auto& c : f.basis().cycles())
        vals.push_back(evaluate_class(f, walk_to_vector(apply_automorphism(inv, c))));
    return CohomologyClass(f.basis(), std::move(vals));
}

} // namespace szz

#endif
