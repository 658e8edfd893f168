#ifndef SZZ_CYCLE_SPACE_HPP
#define SZZ_CYCLE_SPACE_HPP

#include <szz/graph.hpp>
#include <szz/rational.hpp>

#include <vector>

namespace szz {

/// Element of ZE'/{(a|b)+(b|a)}: one integer per undirected edge, read in the
/// canonical direction (lexicographically smaller to larger endpoint); the
/// sign encodes the actual direction. Coefficients are arbitrary precision.
class CycleVector {
public:
    explicit CycleVector(const Graph& g)
        : graph_(&g), coeffs_(g.edge_count(), Int(0)) {}

    CycleVector(const Graph& g, std::vector<Int> coeffs)
        : graph_(&g), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != g.edge_count())
            throw Error("BadVector", "coefficient count does not match edge count");
    }

    const Graph& graph() const { return *graph_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& operator[](int edge_index) const { return coeffs_.at(edge_index); }
    Int& operator[](int edge_index) { return coeffs_.at(edge_index); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    CycleVector& operator+=(const CycleVector& other) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        return *this;
    }

    CycleVector& operator-=(const CycleVector& other) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        return *this;
    }

    friend CycleVector operator+(CycleVector a, const CycleVector& b) { return a += b; }
    friend CycleVector operator-(CycleVector a, const CycleVector& b) { return a -= b; }

    friend CycleVector operator*(const Int& m, CycleVector v) {
        for (auto& c : v.coeffs_) c *= m;
        return v;
    }

    bool operator==(const CycleVector& other) const { return coeffs_ == other.coeffs_; }

private:
    const Graph* graph_;
    std::vector<Int> coeffs_;
};

/// δ extended linearly: edge (a|b) ↦ a − b. Returns the signed incidence sum
/// per vertex.
inline std::vector<Int> boundary(const CycleVector& z) {
    const Graph& g = z.graph();
    std::vector<Int> out(g.vertex_count(), Int(0));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edges()[e];   // a < b, canonical direction a -> b
        out[a] += z[static_cast<int>(e)];
        out[b] -= z[static_cast<int>(e)];
    }
    return out;
}

/// The chain Σ(a_i|a_{i+1}) of a walk; back-and-forth steps cancel.
inline CycleVector chain_of(const Walk& w) {
    CycleVector z(w.graph());
    const auto& seq = w.vertices();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int e = w.graph().edge_index(seq[i], seq[i + 1]);
        if (seq[i] < seq[i + 1])
            z[e] += 1;
        else
            z[e] -= 1;
    }
    return z;
}

inline std::vector<Int> boundary(const Walk& w) { return boundary(chain_of(w)); }

/// Chain of a closed walk, i.e., a member of ker δ.
inline CycleVector walk_to_vector(const Walk& w) {
    if (!w.closed()) throw Error("NotClosed", "walk does not start and end at the same vertex");
    return chain_of(w);
}

/// One cycle per non-tree edge e_i = {x,y} (x < y): the tree path from y to x
/// followed by the step (x|y), so e_i carries coefficient +1 in C_i and 0 in
/// every other basis cycle.
class FundamentalCycleBasis {
public:
    explicit FundamentalCycleBasis(const Graph& g) : tree_(g) {
        for (int e : tree_.non_tree_edges()) {
            const auto& [x, y] = g.edges()[e];
            Walk path = tree_.tree_path(y, x);
            Walk cycle = path.concat(Walk(g, {x, y}));
            cycles_.push_back(cycle);
            vectors_.push_back(walk_to_vector(cycle));
            distinguished_edges_.push_back(e);
        }
    }

    const Graph& graph() const { return tree_.graph(); }
    const SpanningTree& tree() const { return tree_; }
    std::size_t size() const { return cycles_.size(); }
    const std::vector<Walk>& cycles() const { return cycles_; }
    const std::vector<CycleVector>& vectors() const { return vectors_; }
    /// Edge index of the distinguished non-tree edge of C_i.
    int distinguished_edge(std::size_t i) const { return distinguished_edges_.at(i); }

private:
    SpanningTree tree_;
    std::vector<Walk> cycles_;
    std::vector<CycleVector> vectors_;
    std::vector<int> distinguished_edges_;
};

inline FundamentalCycleBasis fundamental_basis(const Graph& g) {
    return FundamentalCycleBasis(g);
}

/// Coordinates of z in the fundamental basis; triangularity makes each m_i
/// the coordinate of z on the i-th non-tree edge. Verifies the exact
/// reconstruction z = Σ m_i C_i.
inline std::vector<Int> decompose(const CycleVector& z, const FundamentalCycleBasis& basis) {
    for (const auto& b : boundary(z))
        if (b != 0) throw Error("NotACycle", "vector is not in the kernel of the boundary map");
    std::vector<Int> m;
    m.reserve(basis.size());
    CycleVector rebuilt(z.graph());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Int mi = z[basis.distinguished_edge(i)];
        rebuilt += mi * basis.vectors()[i];
        m.push_back(std::move(mi));
    }
    if (!(rebuilt == z))
        throw Error("ReconstructionMismatch", "basis decomposition failed to reconstruct input");
    return m;
}

} // namespace szz

#endif
