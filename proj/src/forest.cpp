#include "csf/forest.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace csf {

std::ostream& operator<<(std::ostream& os, const Edge& e)
{
    return os << e.u << '-' << e.v;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Forest::Forest(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n + 1)
{
    if (n < 0)
        throw std::invalid_argument("forest order must be non-negative");
    std::sort(edges_.begin(), edges_.end());
    DisjointSets sets(n);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 1 || e.v > n)
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " has a vertex outside 1.." + std::to_string(n));
        if (e.u == e.v)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("repeated edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v));
        if (!sets.unite(e.u, e.v))
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " closes a cycle; input must be a forest");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
}

Forest Forest::star(int k)
{
    if (k < 1)
        throw std::invalid_argument("star order must be positive");
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= k; ++v)
        edges.emplace_back(1, v);
    return Forest(k, std::move(edges));
}

Forest Forest::path(int k)
{
    if (k < 1)
        throw std::invalid_argument("path order must be positive");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < k; ++v)
        edges.emplace_back(v, v + 1);
    return Forest(k, std::move(edges));
}

Forest Forest::disjoint_union(const Forest& a, const Forest& b)
{
    std::vector<Edge> edges(a.edges_.begin(), a.edges_.end());
    for (const Edge& e : b.edges_)
        edges.emplace_back(e.u + a.n_, e.v + a.n_);
    return Forest(a.n_ + b.n_, std::move(edges));
}

void Forest::check_vertex(Vertex v) const
{
    if (!contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n_));
}

std::span<const Vertex> Forest::neighbors(Vertex v) const
{
    check_vertex(v);
    return adj_[v];
}

int Forest::degree(Vertex v) const
{
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Forest::has_edge(const Edge& e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<Vertex>> Forest::components() const
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(n_ + 1, 0);
    for (Vertex s = 1; s <= n_; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : adj_[comp[i]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Forest Forest::relabeled(std::span<const Vertex> new_label) const
{
    if (static_cast<int>(new_label.size()) != n_ + 1)
        throw std::invalid_argument("relabeling has wrong size");
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const Edge& e : edges_)
        edges.emplace_back(new_label[e.u], new_label[e.v]);
    return Forest(n_, std::move(edges));
}

Forest Forest::induced(std::span<const Vertex> vertices) const
{
    std::vector<Vertex> index(n_ + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        index[vertices[i]] = static_cast<Vertex>(i + 1);
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
        if (index[e.u] && index[e.v])
            edges.emplace_back(index[e.u], index[e.v]);
    }
    return Forest(static_cast<int>(vertices.size()), std::move(edges));
}

// ---------------------------------------------------------------------------

bool is_internal_edge(const Forest& f, const Edge& e)
{
    return f.degree(e.u) >= 2 && f.degree(e.v) >= 2;
}

std::vector<Edge> internal_edges(const Forest& f)
{
    std::vector<Edge> out;
    for (const Edge& e : f.edges()) {
        if (is_internal_edge(f, e))
            out.push_back(e);
    }
    return out;
}

bool is_star_forest(const Forest& f)
{
    return std::none_of(f.edges().begin(), f.edges().end(),
                        [&](const Edge& e) { return is_internal_edge(f, e); });
}

std::vector<Vertex> deep_vertices(const Forest& f)
{
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= f.order(); ++v) {
        if (f.degree(v) < 2)
            continue;
        auto nbrs = f.neighbors(v);
        if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return f.degree(w) == 1; }))
            out.push_back(v);
    }
    return out;
}

int internal_degree(const Forest& f, Vertex v)
{
    if (f.degree(v) < 2)
        return 0;
    int count = 0;
    for (Vertex w : f.neighbors(v)) {
        if (f.degree(w) >= 2)
            ++count;
    }
    return count;
}

int LeafComponentDecomposition::component_of(Vertex v) const
{
    if (v < 1 || v >= static_cast<int>(owner.size()))
        throw std::out_of_range("vertex " + std::to_string(v) + " not in decomposition");
    return owner[v];
}

LeafComponentDecomposition leaf_components(const Forest& f)
{
    LeafComponentDecomposition out;
    out.internal_edges = internal_edges(f);
    out.owner.assign(f.order() + 1, -1);

    std::vector<Edge> kept;
    for (const Edge& e : f.edges()) {
        if (!is_internal_edge(f, e))
            kept.push_back(e);
    }
    const Forest stripped(f.order(), std::move(kept));
    for (auto& members : stripped.components()) {
        LeafComponent comp;
        comp.center = members.front();
        for (Vertex v : members) {
            if (f.degree(v) >= 2) {
                comp.center = v;
                break;
            }
        }
        for (Vertex v : members)
            out.owner[v] = static_cast<int>(out.components.size());
        comp.members = std::move(members);
        out.components.push_back(std::move(comp));
    }
    return out;
}

Partition leaf_component_partition(const Forest& f)
{
    std::vector<int> orders;
    for (const auto& comp : leaf_components(f).components)
        orders.push_back(comp.order());
    return Partition::from_multiset(std::move(orders));
}

bool Subgraph::is_connected() const
{
    if (vertices.empty())
        return true;
    std::vector<std::vector<Vertex>> adj(vertices.size());
    auto index = [&](Vertex v) {
        return static_cast<std::size_t>(
            std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (const Edge& e : edges) {
        adj[index(e.u)].push_back(static_cast<Vertex>(index(e.v)));
        adj[index(e.v)].push_back(static_cast<Vertex>(index(e.u)));
    }
    std::vector<char> seen(vertices.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == vertices.size();
}

Subgraph internal_subgraph(const Forest& tree)
{
    if (!tree.is_tree())
        throw std::invalid_argument("internal_subgraph requires a tree");
    std::vector<char> in(tree.order() + 1, 0);
    for (Vertex v = 1; v <= tree.order(); ++v) {
        if (internal_degree(tree, v) > 1) {
            in[v] = 1;
            for (Vertex w : tree.neighbors(v)) {
                if (tree.degree(w) == 1)
                    in[w] = 1;
            }
        }
    }
    Subgraph out;
    for (Vertex v = 1; v <= tree.order(); ++v) {
        if (in[v])
            out.vertices.push_back(v);
    }
    for (const Edge& e : tree.edges()) {
        if (in[e.u] && in[e.v])
            out.edges.push_back(e);
    }
    return out;
}

std::vector<LeafComponent> internal_leaf_components(const Forest& tree)
{
    const Subgraph sub = internal_subgraph(tree);
    std::vector<LeafComponent> out;
    for (auto& comp : leaf_components(tree).components) {
        bool inside = std::all_of(comp.members.begin(), comp.members.end(), [&](Vertex v) {
            return std::binary_search(sub.vertices.begin(), sub.vertices.end(), v);
        });
        if (inside)
            out.push_back(std::move(comp));
    }
    return out;
}

// ---------------------------------------------------------------------------

Forest delete_edge(const Forest& f, const Edge& e)
{
    if (!f.has_edge(e))
        throw std::invalid_argument("delete_edge: no edge " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v));
    std::vector<Edge> edges;
    edges.reserve(f.edge_count() - 1);
    for (const Edge& x : f.edges()) {
        if (x != e)
            edges.push_back(x);
    }
    return Forest(f.order(), std::move(edges));
}

Contraction leaf_contract(const Forest& f, const Edge& e)
{
    if (!f.has_edge(e))
        throw std::invalid_argument("leaf_contract: no edge " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v));
    const int n = f.order();
    Contraction out;
    out.relabel.assign(n + 1, 0);
    for (Vertex x = 1; x <= n; ++x)
        out.relabel[x] = x < e.v ? x : x - 1;
    out.relabel[e.v] = out.relabel[e.u];
    out.merged = out.relabel[e.u];
    out.new_leaf = n;

    std::vector<Edge> edges;
    edges.reserve(f.edge_count());
    for (const Edge& x : f.edges()) {
        if (x != e)
            edges.emplace_back(out.relabel[x.u], out.relabel[x.v]);
    }
    edges.emplace_back(out.merged, out.new_leaf);
    out.forest = Forest(n, std::move(edges));
    return out;
}

Forest dot_contract(const Forest& f, const Edge& e)
{
    Contraction c = leaf_contract(f, e);
    return delete_edge(c.forest, Edge(c.merged, c.new_leaf));
}

int diameter(const Forest& tree)
{
    if (!tree.is_tree())
        throw std::invalid_argument("diameter requires a connected tree");
    auto bfs = [&](Vertex s) {
        std::vector<int> dist(tree.order() + 1, -1);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        Vertex far = s;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            if (dist[x] > dist[far])
                far = x;
            for (Vertex y : tree.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        return std::pair{far, dist[far]};
    };
    return bfs(bfs(1).first).second;
}

std::string describe(const Forest& f)
{
    std::ostringstream os;
    os << "n=" << f.order() << " [";
    for (std::size_t i = 0; i < f.edge_count(); ++i)
        os << (i ? " " : "") << f.edges()[i];
    os << ']';
    return os.str();
}

}  // namespace csf
