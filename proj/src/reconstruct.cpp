#include "csf/reconstruct.hpp"

#include <algorithm>
#include <map>

#include "csf/analysis.hpp"
#include "csf/dnc.hpp"

namespace csf {

std::string_view class_name(DiameterClass c)
{
    switch (c) {
    case DiameterClass::star:
        return "star";
    case DiameterClass::bistar:
        return "bistar";
    case DiameterClass::extended_bistar:
        return "extended_bistar";
    case DiameterClass::diam4:
        return "diam4";
    case DiameterClass::diam5:
        return "diam5";
    case DiameterClass::distinct_parts:
        return "distinct_parts";
    }
    return "?";
}

Forest assemble_stars(const std::vector<int>& orders, const std::vector<std::pair<int, int>>& links)
{
    std::vector<Vertex> center(orders.size());
    std::vector<Edge> edges;
    Vertex next = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1)
            throw std::invalid_argument("assemble_stars: component orders must be positive");
        center[i] = next++;
        for (int leaf = 1; leaf < orders[i]; ++leaf)
            edges.emplace_back(center[i], next++);
    }
    for (const auto& [a, b] : links) {
        if (a < 0 || b < 0 || a >= static_cast<int>(orders.size()) ||
            b >= static_cast<int>(orders.size()))
            throw std::invalid_argument("assemble_stars: link index out of range");
        edges.emplace_back(center[a], center[b]);
    }
    return Forest(next - 1, std::move(edges));
}

namespace {

using Kind = ReconstructionError::Kind;

bool reexpands_to(const Forest& candidate, const SymFunc& f)
{
    return candidate.order() == f.degree() && star_expand(candidate) == f;
}

std::vector<int> parts_of(const Partition& p)
{
    return {p.parts().begin(), p.parts().end()};
}

int parts_above_one(const Partition& p)
{
    return static_cast<int>(p.length()) - p.multiplicity(1);
}

void require_star(const SymFunc& f, const char* who)
{
    if (f.basis() != Basis::star)
        throw ReconstructionError(Kind::not_a_tree_csf,
                                  std::string(who) + ": input must be in the star basis");
    if (f.is_zero())
        throw ReconstructionError(Kind::not_a_tree_csf, std::string(who) + ": zero function");
}

/// Hub construction: every component other than `hub` links to the hub.
Forest hub_tree(const std::vector<int>& others, int hub_order)
{
    std::vector<int> orders{hub_order};
    std::vector<std::pair<int, int>> links;
    for (int order : others) {
        links.emplace_back(0, static_cast<int>(orders.size()));
        orders.push_back(order);
    }
    return assemble_stars(orders, links);
}

/// All sub-multisets of a decreasing sequence, each decreasing.
std::vector<std::vector<int>> sub_multisets(const std::vector<int>& items)
{
    std::vector<std::pair<int, int>> counts;   // (value, multiplicity)
    for (int x : items) {
        if (!counts.empty() && counts.back().first == x)
            ++counts.back().second;
        else
            counts.emplace_back(x, 1);
    }
    std::vector<std::vector<int>> out{{}};
    for (const auto& [value, mult] : counts) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out) {
            for (int take = 0; take <= mult; ++take) {
                auto grown = prefix;
                grown.insert(grown.end(), take, value);
                next.push_back(std::move(grown));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<int> minus(const std::vector<int>& all, const std::vector<int>& part)
{
    std::vector<int> rest = all;
    for (int x : part)
        rest.erase(std::find(rest.begin(), rest.end(), x));
    return rest;
}

}  // namespace

Forest reconstruct_bistar(const SymFunc& f)
{
    require_star(f, "reconstruct_bistar");
    const Partition lead = leading_partition(f).first;
    if (parts_above_one(lead) != 2)
        throw ReconstructionError(Kind::shape_mismatch,
                                  "reconstruct_bistar: leading partition " + lead.to_string() +
                                      " is not of the form (i,j,1^k) with i,j > 1");
    const int k = lead.multiplicity(1);
    std::vector<int> orders{lead[0], lead[1]};
    std::vector<std::pair<int, int>> links;
    int previous = 0;
    for (int i = 0; i < k; ++i) {
        orders.push_back(1);
        links.emplace_back(previous, static_cast<int>(orders.size()) - 1);
        previous = static_cast<int>(orders.size()) - 1;
    }
    links.emplace_back(previous, 1);
    Forest tree = assemble_stars(orders, links);
    if (!reexpands_to(tree, f))
        throw ReconstructionError(Kind::no_candidate,
                                  "reconstruct_bistar: the extended bi-star does not match");
    return tree;
}

Forest reconstruct_diam4(const SymFunc& f)
{
    require_star(f, "reconstruct_diam4");
    const Partition lead = leading_partition(f).first;
    const int ones = lead.multiplicity(1);
    if (ones > 1 || parts_above_one(lead) < 3)
        throw ReconstructionError(Kind::shape_mismatch,
                                  "reconstruct_diam4: leading partition " + lead.to_string() +
                                      " cannot belong to a diameter-4 tree with three or more "
                                      "non-trivial leaf components");

    std::vector<int> hubs;
    if (ones == 1) {
        hubs.push_back(1);
    } else {
        hubs = internal_component_orders(f);
        if (hubs.empty())
            throw ReconstructionError(Kind::no_candidate,
                                      "reconstruct_diam4: no part p with N(p) > m_p");
    }
    const auto all = parts_of(lead);
    for (int hub : hubs) {
        Forest tree = hub_tree(minus(all, {hub}), hub);
        if (reexpands_to(tree, f))
            return tree;
    }
    throw ReconstructionError(Kind::no_candidate,
                              "reconstruct_diam4: no hub candidate re-expands to the input");
}

Forest reconstruct_diam5(const SymFunc& f)
{
    require_star(f, "reconstruct_diam5");
    const Partition lead = leading_partition(f).first;
    const int ones = lead.multiplicity(1);
    if (ones > 2 || lead.length() < 3)
        throw ReconstructionError(Kind::shape_mismatch,
                                  "reconstruct_diam5: leading partition " + lead.to_string() +
                                      " needs at least three parts and at most two 1s");
    const auto pairs = adjacency_multisets(f);

    // Orders {r, s} of the two components in the internal subgraph.
    std::vector<std::pair<int, int>> centers;
    if (ones == 2) {
        centers.emplace_back(1, 1);
    } else if (ones == 1) {
        std::vector<int> seen;
        for (const auto& pair : pairs) {
            if (pair.multiset.size() == 2 && pair.multiset[1] == 1 &&
                std::find(seen.begin(), seen.end(), pair.multiset[0]) == seen.end()) {
                seen.push_back(pair.multiset[0]);
                centers.emplace_back(pair.multiset[0], 1);
            }
        }
    } else {
        const auto q = internal_component_orders(f);
        if (q.size() == 2)
            centers.emplace_back(q[0], q[1]);
        else if (q.size() == 1 && lead.multiplicity(q[0]) >= 2)
            centers.emplace_back(q[0], q[0]);
    }

    // With no 1s the adjacency multisets list every internal edge; with a
    // single 1 they list the components next to the deep vertex.
    const auto expected_edges = ones == 0 ? extracted_adjacencies(f)
                                          : std::vector<std::pair<int, int>>{};
    std::vector<int> expected_deep;
    if (ones == 1) {
        for (const auto& pair : pairs) {
            if (pair.multiset.size() == 2 && pair.multiset[1] == 1 && pair.coeff > 0)
                for (Integer i = 0; i < pair.coeff; ++i)
                    expected_deep.push_back(pair.multiset[0]);
        }
        std::sort(expected_deep.begin(), expected_deep.end(), std::greater<>());
    }

    const auto all = parts_of(lead);
    for (const auto& [r, s] : centers) {
        const auto rest = minus(all, {r, s});
        auto sides = sub_multisets(rest);
        std::sort(sides.begin(), sides.end());
        for (const auto& side_r : sides) {
            const auto side_s = minus(rest, side_r);
            // One side may be empty; such trees have diameter 4 but are
            // still checked by re-expansion.
            if (r == s && side_s < side_r)
                continue;   // mirror image of a split already tried

            std::vector<int> orders{r, s};
            std::vector<std::pair<int, int>> links{{0, 1}};
            for (int x : side_r) {
                links.emplace_back(0, static_cast<int>(orders.size()));
                orders.push_back(x);
            }
            for (int x : side_s) {
                links.emplace_back(1, static_cast<int>(orders.size()));
                orders.push_back(x);
            }
            Forest tree = assemble_stars(orders, links);
            if (ones == 0 && structural_adjacencies(tree) != expected_edges)
                continue;
            if (ones == 1 && (deep_vertices(tree).size() != 1 ||
                              deep_vertex_neighbor_orders(tree) != expected_deep))
                continue;
            if (reexpands_to(tree, f))
                return tree;
        }
    }
    throw ReconstructionError(Kind::no_candidate,
                              "reconstruct_diam5: no split of " + lead.to_string() +
                                  " re-expands to the input");
}

Forest reconstruct_distinct_parts(const SymFunc& f)
{
    require_star(f, "reconstruct_distinct_parts");
    const Partition lead = leading_partition(f).first;
    const auto parts = parts_of(lead);
    if (lead.contains(1) || std::adjacent_find(parts.begin(), parts.end()) != parts.end())
        throw ReconstructionError(Kind::shape_mismatch,
                                  "reconstruct_distinct_parts: leading partition " +
                                      lead.to_string() + " has a 1 or a repeated part");
    auto index_of = [&](int order) {
        return static_cast<int>(std::find(parts.begin(), parts.end(), order) - parts.begin());
    };
    std::vector<std::pair<int, int>> links;
    for (const auto& pair : adjacency_multisets(f)) {
        if (pair.multiset.size() != 2 || pair.coeff != 1 || pair.multiset[0] == pair.multiset[1])
            throw ReconstructionError(Kind::no_candidate,
                                      "reconstruct_distinct_parts: adjacency multiset for " +
                                          pair.mu.to_string() + " is not a simple pair");
        links.emplace_back(index_of(pair.multiset[0]), index_of(pair.multiset[1]));
    }
    if (links.size() + 1 != parts.size())
        throw ReconstructionError(Kind::no_candidate,
                                  "reconstruct_distinct_parts: " + std::to_string(links.size()) +
                                      " adjacencies cannot connect " +
                                      std::to_string(parts.size()) + " components");
    Forest tree;
    try {
        tree = assemble_stars(parts, links);
    } catch (const std::invalid_argument&) {
        throw ReconstructionError(Kind::no_candidate,
                                  "reconstruct_distinct_parts: adjacencies contain a cycle");
    }
    if (!reexpands_to(tree, f))
        throw ReconstructionError(Kind::no_candidate,
                                  "reconstruct_distinct_parts: assembled tree does not match");
    return tree;
}

std::optional<Forest> try_branch(DiameterClass c, const SymFunc& f)
{
    try {
        switch (c) {
        case DiameterClass::star: {
            const Partition lead = leading_partition(f).first;
            if (lead.length() != 1)
                return std::nullopt;
            Forest tree = Forest::star(lead[0]);
            return reexpands_to(tree, f) ? std::optional(tree) : std::nullopt;
        }
        case DiameterClass::bistar:
        case DiameterClass::extended_bistar: {
            const Partition lead = leading_partition(f).first;
            const bool extended = lead.contains(1);
            if (extended != (c == DiameterClass::extended_bistar))
                return std::nullopt;
            return reconstruct_bistar(f);
        }
        case DiameterClass::diam4:
            return reconstruct_diam4(f);
        case DiameterClass::diam5:
            return reconstruct_diam5(f);
        case DiameterClass::distinct_parts:
            return reconstruct_distinct_parts(f);
        }
    } catch (const ReconstructionError&) {
    }
    return std::nullopt;
}

ReconstructionResult reconstruct(const SymFunc& f)
{
    require_star(f, "reconstruct");
    if (!f.is_integral())
        throw ReconstructionError(Kind::not_a_tree_csf,
                                  "reconstruct: tree CSFs have integer star coefficients");
    const int n = f.degree();
    if (n < 1 || f.coefficient(Partition::from_multiset({n})) != 1)
        throw ReconstructionError(Kind::not_a_tree_csf,
                                  "reconstruct: the coefficient of st_(n) must be 1");

    for (DiameterClass c : {DiameterClass::star, DiameterClass::bistar,
                            DiameterClass::extended_bistar, DiameterClass::diam4,
                            DiameterClass::diam5, DiameterClass::distinct_parts}) {
        if (auto tree = try_branch(c, f))
            return {std::move(*tree), c, true};
    }
    throw ReconstructionError(Kind::no_candidate,
                              "reconstruct: no tree of diameter <= 5 (or with distinct "
                              "leading parts) has this CSF");
}

Partition split_product_leading(const SymFunc& f, int n2)
{
    if (f.basis() != Basis::star)
        throw std::invalid_argument("split_product_leading expects a star-basis function");
    std::optional<Partition> best;
    for (const auto& [lambda, c] : f.terms()) {
        if (!lambda.contains(n2))
            continue;
        Partition alpha = remove_part(lambda, n2);
        if (!best || alpha < *best)
            best = std::move(alpha);
    }
    if (!best)
        throw std::invalid_argument("split_product_leading: no term has a part equal to " +
                                    std::to_string(n2));
    return *best;
}

}  // namespace csf
