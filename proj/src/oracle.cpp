#include "csf/oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace csf {

SymFunc power_csf(int n, std::span<const Edge> edges)
{
    if (edges.size() > 30)
        throw std::invalid_argument("power_csf: too many edges for subset expansion");
    for (const Edge& e : edges) {
        if (e.u < 1 || e.v > n || e.u == e.v)
            throw std::invalid_argument("power_csf: edge outside 1..n or a loop");
    }
    std::map<Partition, Integer> counts;
    std::vector<int> parent(n + 1);
    std::vector<int> size(n + 1);
    const std::uint64_t subsets = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        std::fill(size.begin(), size.end(), 1);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        int chosen = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!((mask >> i) & 1))
                continue;
            ++chosen;
            int a = find(edges[i].u), b = find(edges[i].v);
            if (a != b) {
                parent[a] = b;
                size[b] += size[a];
            }
        }
        std::vector<int> orders;
        for (int v = 1; v <= n; ++v) {
            if (find(v) == v)
                orders.push_back(size[v]);
        }
        counts[Partition::from_multiset(std::move(orders))] += chosen % 2 ? -1 : 1;
    }
    SymFunc out(Basis::power, n);
    for (const auto& [lambda, c] : counts)
        out.add_term(lambda, Rational(c));
    return out;
}

SymFunc power_csf(const Forest& f)
{
    return power_csf(f.order(), f.edges());
}

Integer chromatic_count(const Forest& f, int k)
{
    if (k < 1)
        throw std::invalid_argument("chromatic_count requires k >= 1");
    // ways[v][c]: colorings of the subtree below v with v colored c.
    std::vector<std::vector<Integer>> ways(f.order() + 1);
    std::vector<char> seen(f.order() + 1, 0);
    Integer total = 1;
    for (Vertex root = 1; root <= f.order(); ++root) {
        if (seen[root])
            continue;
        std::vector<std::pair<Vertex, Vertex>> order;   // (vertex, parent), preorder
        order.emplace_back(root, 0);
        seen[root] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (Vertex w : f.neighbors(order[i].first)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order.emplace_back(w, order[i].first);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto [v, parent] = *it;
            std::vector<Integer> mine(k, 1);
            for (Vertex w : f.neighbors(v)) {
                if (w == parent)
                    continue;
                Integer child_total = 0;
                for (const Integer& x : ways[w])
                    child_total += x;
                for (int c = 0; c < k; ++c)
                    mine[c] *= child_total - ways[w][c];
            }
            ways[v] = std::move(mine);
        }
        Integer root_total = 0;
        for (const Integer& x : ways[root])
            root_total += x;
        total *= root_total;
    }
    return total;
}

}  // namespace csf
