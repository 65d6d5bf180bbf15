#pragma once

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

/// Vertices are the contiguous labels 1..n.
using Vertex = int;

/// An undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool touches(Vertex x) const { return x == u || x == v; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// A simple acyclic graph on vertices 1..n.
///
/// Construction validates the input (labels in range, no loops, no repeated
/// edges, no cycles) and throws `std::invalid_argument` otherwise. Once
/// built a forest is immutable; every structural operation returns a new one.
class Forest {
public:
    Forest() = default;
    explicit Forest(int n, std::vector<Edge> edges = {});

    static Forest star(int k);
    static Forest path(int k);
    static Forest disjoint_union(const Forest& a, const Forest& b);

    int order() const noexcept { return n_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(const Edge& e) const;
    bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

    int component_count() const noexcept { return n_ - static_cast<int>(edges_.size()); }
    bool is_tree() const noexcept { return n_ >= 1 && component_count() == 1; }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    std::vector<std::vector<Vertex>> components() const;

    /// Relabels vertex v to `new_label[v]` (index 0 unused); `new_label`
    /// must be a permutation of 1..n.
    Forest relabeled(std::span<const Vertex> new_label) const;

    /// The subforest induced on `vertices`, relabeled 1..k in the given order.
    Forest induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Forest& a, const Forest& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;                 // sorted
    std::vector<std::vector<Vertex>> adj_;    // adj_[v], v in 1..n
};

// ---------------------------------------------------------------------------
// Structural vocabulary

/// Edges whose endpoints both have degree >= 2.
std::vector<Edge> internal_edges(const Forest& f);
bool is_internal_edge(const Forest& f, const Edge& e);

/// Vertices of degree >= 2 with no leaf neighbour.
std::vector<Vertex> deep_vertices(const Forest& f);

/// Number of internal edges at v.
int internal_degree(const Forest& f, Vertex v);

/// True when f has no internal edges, i.e. every component is a star.
bool is_star_forest(const Forest& f);

struct LeafComponent {
    Vertex center = 0;
    std::vector<Vertex> members;   // sorted

    int order() const { return static_cast<int>(members.size()); }
};

/// The components of f with its internal edges removed. Each is a star; the
/// center is its unique vertex of degree >= 2 in f (for St_2 and St_1
/// components without such a vertex, the smaller label).
struct LeafComponentDecomposition {
    std::vector<LeafComponent> components;
    std::vector<Edge> internal_edges;

    /// Index into `components` of the component containing v.
    int component_of(Vertex v) const;

    std::vector<int> owner;   // owner[v] = component index, index 0 unused
};

LeafComponentDecomposition leaf_components(const Forest& f);

/// Orders of the leaf components, sorted decreasingly.
Partition leaf_component_partition(const Forest& f);

/// A subgraph kept in the labels of the host forest.
struct Subgraph {
    std::vector<Vertex> vertices;   // sorted
    std::vector<Edge> edges;        // sorted

    bool empty() const { return vertices.empty(); }
    bool is_connected() const;
};

/// Vertices of internal degree > 1, their leaf neighbours, and all edges of
/// `tree` among them. Throws `std::invalid_argument` if `tree` is not a tree.
Subgraph internal_subgraph(const Forest& tree);

/// Leaf components of `tree` whose vertices all lie in the internal subgraph.
std::vector<LeafComponent> internal_leaf_components(const Forest& tree);

// ---------------------------------------------------------------------------
// Deletion and contractions

Forest delete_edge(const Forest& f, const Edge& e);

struct Contraction {
    Forest forest;
    Vertex merged = 0;      // label of the vertex produced by contracting e
    Vertex new_leaf = 0;    // label of the attached leaf (always n)
    /// relabel[x] = label in `forest` of vertex x of the input, for x != e.v;
    /// e.v maps to `merged`.
    std::vector<Vertex> relabel;
};

/// Contracts e = uv into u, drops v's label (higher labels shift down by
/// one), and attaches a new leaf with label n to the merged vertex.
Contraction leaf_contract(const Forest& f, const Edge& e);

/// The leaf contraction without the edge to the new leaf; label n is left
/// isolated.
Forest dot_contract(const Forest& f, const Edge& e);

/// Longest path length in edges. Throws `std::invalid_argument` unless f is
/// a tree.
int diameter(const Forest& tree);

/// Edge-list rendering "u-v u-v ..." for diagnostics.
std::string describe(const Forest& f);

}  // namespace csf
