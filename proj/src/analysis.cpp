#include "csf/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "csf/dnc.hpp"

namespace csf {

std::pair<Partition, Integer> leading_partition(const SymFunc& f)
{
    if (f.basis() != Basis::star)
        throw std::invalid_argument("leading_partition expects a star-basis function");
    if (f.is_zero())
        throw std::invalid_argument("leading_partition of the zero function is undefined");
    const auto& [lambda, c] = *f.terms().begin();
    return {lambda, to_integer(c)};
}

std::pair<Partition, Integer> predicted_leading(const Forest& f)
{
    Integer coeff = 1;
    for (Vertex u : deep_vertices(f))
        coeff *= -(f.degree(u) - 1);
    return {leaf_component_partition(f), coeff};
}

std::vector<AdjacencyPair> adjacency_multisets(const SymFunc& f)
{
    const Partition lead = leading_partition(f).first;
    std::vector<AdjacencyPair> out;
    if (lead.length() < 2)
        return out;
    for (const auto& [mu, c] : f.terms()) {
        if (mu.length() + 1 != lead.length() || mu.contains(1))
            continue;
        out.push_back({mu, to_integer(c), multiset_difference(lead, mu)});
    }
    return out;
}

std::vector<std::pair<int, int>> extracted_adjacencies(const SymFunc& f)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& pair : adjacency_multisets(f)) {
        if (pair.multiset.size() != 2 || pair.coeff < 0)
            return {};
        for (Integer i = 0; i < pair.coeff; ++i)
            out.emplace_back(pair.multiset[0], pair.multiset[1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer n_of_p(const SymFunc& f, int p)
{
    const Partition lead = leading_partition(f).first;
    if (!lead.contains(p))
        throw std::invalid_argument("n_of_p: " + std::to_string(p) + " is not a part of " +
                                    lead.to_string());
    Integer total = 0;
    for (const auto& pair : adjacency_multisets(f))
        total += std::count(pair.multiset.begin(), pair.multiset.end(), p) * pair.coeff;
    return total;
}

std::vector<int> internal_component_orders(const SymFunc& f)
{
    const Partition lead = leading_partition(f).first;
    const auto pairs = adjacency_multisets(f);
    std::vector<int> out;
    std::vector<int> distinct(lead.parts().begin(), lead.parts().end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int p : distinct) {
        if (p == 1)
            continue;
        Integer n = 0;
        for (const auto& pair : pairs)
            n += std::count(pair.multiset.begin(), pair.multiset.end(), p) * pair.coeff;
        if (n > lead.multiplicity(p))
            out.push_back(p);
    }
    out.insert(out.end(), lead.multiplicity(1), 1);
    return out;
}

bool hook_check(const SymFunc& f, const Forest& t)
{
    const int n = t.order();
    if (f.basis() != Basis::star || f.degree() != n)
        return false;
    for (int m = 0; m <= n - 1; ++m) {
        std::vector<int> parts(m, 1);
        parts.push_back(n - m);
        const Partition hook = Partition::from_multiset(std::move(parts));
        if (f.coefficient(hook) != Rational(hook_coefficient_predicted(t, m)))
            return false;
    }
    return true;
}

AdjacencyReport analyze(const SymFunc& f)
{
    AdjacencyReport report;
    std::tie(report.leading, report.leading_coeff) = leading_partition(f);
    report.pairs = adjacency_multisets(f);
    for (int p : report.leading.parts()) {
        if (report.n_values.count(p))
            continue;
        Integer n = 0;
        for (const auto& pair : report.pairs)
            n += std::count(pair.multiset.begin(), pair.multiset.end(), p) * pair.coeff;
        report.n_values[p] = n;
    }
    report.internal_orders = internal_component_orders(f);
    report.within_guarantee = !report.leading.contains(1);
    return report;
}

nlohmann::json to_json(const AdjacencyReport& report)
{
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& pair : report.pairs)
        pairs.push_back(
            {{"mu", pair.mu}, {"coeff", to_decimal(pair.coeff)}, {"E", pair.multiset}});
    nlohmann::json n_values = nlohmann::json::object();
    for (const auto& [p, n] : report.n_values)
        n_values[std::to_string(p)] = to_decimal(n);
    return {{"leading", report.leading},
            {"leading_coeff", to_decimal(report.leading_coeff)},
            {"pairs", std::move(pairs)},
            {"N", std::move(n_values)},
            {"internal_orders", report.internal_orders},
            {"within_guarantee", report.within_guarantee}};
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> structural_adjacencies(const Forest& tree)
{
    const auto lc = leaf_components(tree);
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : lc.internal_edges) {
        const auto& a = lc.components[lc.component_of(e.u)];
        const auto& b = lc.components[lc.component_of(e.v)];
        if (a.center != e.u || b.center != e.v)
            continue;
        out.emplace_back(std::max(a.order(), b.order()), std::min(a.order(), b.order()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> deep_vertex_neighbor_orders(const Forest& tree)
{
    const auto deep = deep_vertices(tree);
    if (deep.size() != 1)
        throw std::invalid_argument("deep_vertex_neighbor_orders requires exactly one deep vertex");
    const auto lc = leaf_components(tree);
    std::vector<int> out;
    for (Vertex w : tree.neighbors(deep.front())) {
        const auto& comp = lc.components[lc.component_of(w)];
        if (comp.center == w)
            out.push_back(comp.order());
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<int> structural_internal_orders(const Forest& tree)
{
    std::vector<int> out;
    for (const auto& comp : internal_leaf_components(tree))
        out.push_back(comp.order());
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace csf
