#ifndef SZZ_GRAPH_HPP
#define SZZ_GRAPH_HPP

#include <szz/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace szz {

/// Simple graph: no loops, no multi-edges. Vertices are opaque strings with
/// the lexicographic order; every "deterministic order" below refers to it.
/// Immutable after construction.
class Graph {
public:
    Graph(std::vector<std::string> vertices,
          std::vector<std::pair<std::string, std::string>> edges) {
        std::sort(vertices.begin(), vertices.end());
        for (std::size_t i = 1; i < vertices.size(); ++i)
            if (vertices[i] == vertices[i - 1])
                throw Error("DuplicateVertex", "vertex '" + vertices[i] + "' listed twice");
        vertices_ = std::move(vertices);

        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b] : edges) {
            int ia = index_of(a);
            int ib = index_of(b);
            if (ia < 0) throw Error("UnknownVertex", "edge endpoint '" + a + "' is not a vertex");
            if (ib < 0) throw Error("UnknownVertex", "edge endpoint '" + b + "' is not a vertex");
            if (ia == ib) throw Error("LoopEdge", "loop at vertex '" + a + "'");
            auto e = std::minmax(ia, ib);
            if (!seen.insert(e).second)
                throw Error("DuplicateEdge", "edge {" + a + "," + b + "} listed twice");
        }
        edges_.assign(seen.begin(), seen.end());

        adjacency_.resize(vertices_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            adjacency_[edges_[e].first].push_back(edges_[e].second);
            adjacency_[edges_[e].second].push_back(edges_[e].first);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    // Each edge as (i,j) with i < j, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::string& name(int v) const { return vertices_.at(v); }

    int index_of(const std::string& v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v) return -1;
        return static_cast<int>(it - vertices_.begin());
    }

    int require(const std::string& v) const {
        int i = index_of(v);
        if (i < 0) throw Error("UnknownVertex", "'" + v + "' is not a vertex");
        return i;
    }

    /// Neighbors of v in increasing order.
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }

    std::size_t degree(int v) const { return adjacency_.at(v).size(); }

    bool adjacent(int a, int b) const {
        const auto& n = adjacency_.at(a);
        return std::binary_search(n.begin(), n.end(), b);
    }

    /// Index of edge {a,b} in edges(), or -1.
    int edge_index(int a, int b) const {
        std::pair<int, int> e = std::minmax(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// The double quiver DΓ: two opposite directed edges per undirected edge.
/// Directed edges are listed edge-major, (min|max) before (max|min).
class DoubleQuiver {
public:
    explicit DoubleQuiver(const Graph& g) : base_(&g) {
        for (const auto& [a, b] : g.edges()) {
            directed_.emplace_back(a, b);
            directed_.emplace_back(b, a);
        }
    }

    const Graph& base() const { return *base_; }
    const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }

private:
    const Graph* base_;
    std::vector<std::pair<int, int>> directed_;
};

/// A walk (a_1 | ... | a_n) in DΓ, n >= 1; consecutive vertices adjacent.
/// Length-0 walks are the trivial paths (a).
class Walk {
public:
    Walk(const Graph& g, std::vector<int> vertex_seq) : graph_(&g), seq_(std::move(vertex_seq)) {
        if (seq_.empty())
            throw Error("InvalidWalk", "a walk needs at least one vertex");
        for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
            if (!g.adjacent(seq_[i], seq_[i + 1]))
                throw Error("InvalidWalk", "vertices '" + g.name(seq_[i]) + "' and '" +
                                               g.name(seq_[i + 1]) + "' are not adjacent");
    }

    static Walk of(const Graph& g, const std::vector<std::string>& names) {
        std::vector<int> seq;
        seq.reserve(names.size());
        for (const auto& v : names) seq.push_back(g.require(v));
        return Walk(g, std::move(seq));
    }

    const Graph& graph() const { return *graph_; }
    const std::vector<int>& vertices() const { return seq_; }
    std::size_t length() const { return seq_.size() - 1; }
    int source() const { return seq_.front(); }
    int target() const { return seq_.back(); }
    bool closed() const { return seq_.front() == seq_.back(); }

    /// The reverse walk P*.
    Walk reversed() const {
        std::vector<int> rev(seq_.rbegin(), seq_.rend());
        return Walk(*graph_, std::move(rev));
    }

    /// Concatenation; requires target() == other.source().
    Walk concat(const Walk& other) const {
        if (target() != other.source())
            throw Error("InvalidWalk", "cannot concatenate: endpoints do not match");
        std::vector<int> seq = seq_;
        seq.insert(seq.end(), other.seq_.begin() + 1, other.seq_.end());
        return Walk(*graph_, std::move(seq));
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(seq_.size());
        for (int v : seq_) out.push_back(graph_->name(v));
        return out;
    }

    bool operator==(const Walk& other) const { return seq_ == other.seq_; }

private:
    const Graph* graph_;
    std::vector<int> seq_;
};

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == g.vertex_count();
}

/// Two-coloring certificate or an odd closed walk.
struct BipartiteReport {
    bool bipartite;
    std::vector<int> part_a;             // color-0 vertices, increasing
    std::vector<int> part_b;             // color-1 vertices, increasing
    std::optional<Walk> odd_cycle;       // present iff !bipartite
};

/// BFS 2-coloring; on failure returns an odd closed walk built from the two
/// BFS ancestor chains of the offending edge.
inline BipartiteReport is_bipartite(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> color(n, -1), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    // Same color across an edge: the two BFS ancestor chains
                    // plus {v,w} close an odd walk.
                    std::vector<int> up_v{v}, up_w{w};
                    auto contains = [](const std::vector<int>& xs, int x) {
                        return std::find(xs.begin(), xs.end(), x) != xs.end();
                    };
                    int x = v;
                    while (parent[x] != -1) { x = parent[x]; up_v.push_back(x); }
                    x = w;
                    while (!contains(up_v, x)) { x = parent[x]; up_w.push_back(x); }
                    int meet = x;
                    std::vector<int> chain_v;                        // v .. meet
                    for (int y : up_v) { chain_v.push_back(y); if (y == meet) break; }
                    std::vector<int> walk(chain_v.rbegin(), chain_v.rend()); // meet .. v
                    for (int y : up_w) walk.push_back(y);            // w .. meet
                    BipartiteReport r;
                    r.bipartite = false;
                    r.odd_cycle = Walk(g, std::move(walk));
                    return r;
                }
            }
        }
    }
    BipartiteReport r;
    r.bipartite = true;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? r.part_a : r.part_b).push_back(v);
    return r;
}

/// BFS spanning tree rooted at the least vertex. Neighbors are scanned in
/// descending order, so a vertex reachable from several frontier vertices
/// attaches to the greatest one; the tree is unique for a given graph.
class SpanningTree {
public:
    explicit SpanningTree(const Graph& g) : graph_(&g) {
        if (!is_connected(g)) throw Error("Disconnected", "graph is not connected");
        const int n = static_cast<int>(g.vertex_count());
        parent_.assign(n, -1);
        std::vector<char> seen(n, 0);
        std::set<int> tree_edges;
        if (n > 0) {
            std::queue<int> q;
            q.push(0);
            seen[0] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                bfs_order_.push_back(v);
                const auto& nbrs = g.neighbors(v);
                for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
                    int w = *it;
                    if (!seen[w]) {
                        seen[w] = 1;
                        parent_[w] = v;
                        tree_edges.insert(g.edge_index(v, w));
                        q.push(w);
                    }
                }
            }
        }
        for (int e = 0; e < static_cast<int>(g.edge_count()); ++e)
            (tree_edges.count(e) ? tree_edge_indices_ : non_tree_edge_indices_).push_back(e);
    }

    const Graph& graph() const { return *graph_; }
    const std::vector<int>& tree_edges() const { return tree_edge_indices_; }
    /// Non-tree edges in lexicographic order.
    const std::vector<int>& non_tree_edges() const { return non_tree_edge_indices_; }
    int parent(int v) const { return parent_.at(v); }
    const std::vector<int>& bfs_order() const { return bfs_order_; }

    bool contains_edge(int edge_index) const {
        return std::binary_search(tree_edge_indices_.begin(), tree_edge_indices_.end(),
                                  edge_index);
    }

    /// The unique tree path from a to b as a walk.
    Walk tree_path(int a, int b) const {
        auto chain_to_root = [&](int v) {
            std::vector<int> c{v};
            while (parent_[v] != -1) { v = parent_[v]; c.push_back(v); }
            return c;
        };
        std::vector<int> ca = chain_to_root(a), cb = chain_to_root(b);
        // Strip the common suffix down to the meeting vertex.
        std::size_t shared = 0;
        while (shared < std::min(ca.size(), cb.size()) &&
               ca[ca.size() - 1 - shared] == cb[cb.size() - 1 - shared])
            ++shared;
        std::vector<int> walk(ca.begin(), ca.end() - shared + 1);             // a .. meet
        for (std::size_t i = cb.size() - shared; i-- > 0;) walk.push_back(cb[i]);
        return Walk(*graph_, std::move(walk));
    }

private:
    const Graph* graph_;
    std::vector<int> parent_;
    std::vector<int> bfs_order_;
    std::vector<int> tree_edge_indices_;
    std::vector<int> non_tree_edge_indices_;
};

inline SpanningTree spanning_tree(const Graph& g) { return SpanningTree(g); }

/// A bijection on vertices preserving adjacency; stored as an image array.
class GraphAutomorphism {
public:
    GraphAutomorphism(const Graph& g, std::vector<int> image)
        : graph_(&g), image_(std::move(image)) {
        const int n = static_cast<int>(g.vertex_count());
        if (static_cast<int>(image_.size()) != n)
            throw Error("NotAutomorphism", "image has wrong size");
        std::vector<char> hit(n, 0);
        for (int v : image_) {
            if (v < 0 || v >= n || hit[v])
                throw Error("NotAutomorphism", "image is not a bijection");
            hit[v] = 1;
        }
        for (const auto& [a, b] : g.edges())
            if (!g.adjacent(image_[a], image_[b]))
                throw Error("NotAutomorphism", "map does not preserve edges");
    }

    static GraphAutomorphism identity(const Graph& g) {
        std::vector<int> img(g.vertex_count());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<int>(i);
        return GraphAutomorphism(g, std::move(img));
    }

    const Graph& graph() const { return *graph_; }
    int operator()(int v) const { return image_.at(v); }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != static_cast<int>(i)) return false;
        return true;
    }

    GraphAutomorphism inverse() const {
        std::vector<int> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<int>(i);
        return GraphAutomorphism(*graph_, std::move(inv));
    }

    /// (this ∘ other): applies other first.
    GraphAutomorphism compose(const GraphAutomorphism& other) const {
        std::vector<int> img(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) img[i] = image_[other.image_[i]];
        return GraphAutomorphism(*graph_, std::move(img));
    }

    bool operator==(const GraphAutomorphism& other) const { return image_ == other.image_; }

private:
    const Graph* graph_;
    std::vector<int> image_;
};

/// Exhaustive backtracking with degree pruning; fine for |V| <= ~10.
/// Returns Aut(Γ) with the identity first, then increasing image sequences.
inline std::vector<GraphAutomorphism> enumerate_automorphisms(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::vector<int>> images;
    std::vector<int> assign(n, -1);
    std::vector<char> used(n, 0);

    auto consistent = [&](int v, int img) {
        if (g.degree(v) != g.degree(img)) return false;
        for (int w = 0; w < v; ++w) {
            if (g.adjacent(v, w) != g.adjacent(img, assign[w])) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            images.push_back(assign);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[img] || !consistent(v, img)) continue;
            assign[v] = img;
            used[img] = 1;
            self(self, v + 1);
            used[img] = 0;
            assign[v] = -1;
        }
    };
    rec(rec, 0);

    // Backtracking already produces increasing image order; move id up front.
    std::vector<GraphAutomorphism> out;
    out.reserve(images.size());
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    out.push_back(GraphAutomorphism(g, id));
    for (auto& img : images)
        if (img != id) out.push_back(GraphAutomorphism(g, std::move(img)));
    return out;
}

inline Walk apply_automorphism(const GraphAutomorphism& sigma, const Walk& w) {
    std::vector<int> seq;
    seq.reserve(w.vertices().size());
    for (int v : w.vertices()) seq.push_back(sigma(v));
    return Walk(w.graph(), std::move(seq));
}

} // namespace szz

#endif
