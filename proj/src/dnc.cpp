#include "csf/dnc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "csf/canonical.hpp"

namespace csf {

std::string_view op_name(DncOp op)
{
    switch (op) {
    case DncOp::deletion:
        return "delete";
    case DncOp::dot_contraction:
        return "dot";
    case DncOp::leaf_contraction:
        return "leafcontract";
    }
    return "?";
}

namespace {

Partition component_orders(const Forest& f)
{
    std::vector<int> orders;
    for (const auto& comp : f.components())
        orders.push_back(static_cast<int>(comp.size()));
    return Partition::from_multiset(std::move(orders));
}

}  // namespace

Edge select_internal_edge(const Forest& f)
{
    const Canonization c = canonize(f);
    const auto internal = internal_edges(c.forest);
    if (internal.empty())
        throw std::invalid_argument("select_internal_edge: forest has no internal edge");
    std::vector<Vertex> original(f.order() + 1, 0);
    for (Vertex v = 1; v <= f.order(); ++v)
        original[c.label[v]] = v;
    const Edge& chosen = internal.front();
    return Edge(original[chosen.u], original[chosen.v]);
}

// ---------------------------------------------------------------------------

StarExpander::IntTerms StarExpander::expand_forest(const Forest& f)
{
    IntTerms product{{Partition{}, Integer(1)}};
    for (const auto& members : f.components()) {
        const Forest component = f.induced(members);
        const IntTerms& factor = expand_tree(component);
        IntTerms next;
        for (const auto& [a, ca] : product) {
            for (const auto& [b, cb] : factor) {
                Integer& slot = next[partition_union(a, b)];
                slot += ca * cb;
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        product = std::move(next);
    }
    return product;
}

const StarExpander::IntTerms& StarExpander::expand_tree(const Forest& tree)
{
    Canonization c = canonize(tree);
    if (auto it = memo_.find(c.code); it != memo_.end())
        return it->second;

    const Forest& t = c.forest;
    const auto internal = internal_edges(t);
    IntTerms result;
    if (internal.empty()) {
        result.emplace(Partition::from_multiset({t.order()}), 1);
    } else {
        const Edge e = internal.front();
        const Contraction contracted = leaf_contract(t, e);
        const Forest dotted =
            delete_edge(contracted.forest, Edge(contracted.merged, contracted.new_leaf));

        result = expand_forest(delete_edge(t, e));
        for (const auto& [lambda, coeff] : expand_forest(dotted))
            result[lambda] -= coeff;
        for (const auto& [lambda, coeff] : expand_tree(contracted.forest))
            result[lambda] += coeff;
        std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
    }
    return memo_.emplace(std::move(c.code), std::move(result)).first->second;
}

SymFunc StarExpander::expand(const Forest& f)
{
    SymFunc out(Basis::star, f.order());
    for (const auto& [lambda, coeff] : expand_forest(f))
        out.add_term(lambda, Rational(coeff));
    return out;
}

SymFunc star_expand(const Forest& f)
{
    thread_local StarExpander expander;
    return expander.expand(f);
}

// ---------------------------------------------------------------------------

namespace {

void expand_with(const Forest& f, const EdgeChooser& choose, const Rational& sign, SymFunc& out)
{
    const auto internal = internal_edges(f);
    if (internal.empty()) {
        out.add_term(component_orders(f), sign);
        return;
    }
    const Edge e = choose(f, internal);
    if (!std::binary_search(internal.begin(), internal.end(), e))
        throw std::logic_error("edge chooser returned a non-internal edge");
    const Contraction contracted = leaf_contract(f, e);
    expand_with(delete_edge(f, e), choose, sign, out);
    expand_with(delete_edge(contracted.forest, Edge(contracted.merged, contracted.new_leaf)),
                choose, -sign, out);
    expand_with(contracted.forest, choose, sign, out);
}

int build_trace(DncTrace& trace, Forest f, int parent, DncOp op, int sign, int dots)
{
    const int index = static_cast<int>(trace.nodes.size());
    {
        TraceNode node;
        node.canonical = canonical_form(f);
        node.parent = parent;
        node.op = op;
        node.sign = sign;
        node.dot_count = dots;
        node.forest = std::move(f);
        trace.nodes.push_back(std::move(node));
    }
    const Forest& here = trace.nodes[index].forest;
    if (is_star_forest(here))
        return index;

    const Edge e = select_internal_edge(here);
    const Contraction contracted = leaf_contract(here, e);
    Forest deleted = delete_edge(here, e);
    Forest dotted = delete_edge(contracted.forest, Edge(contracted.merged, contracted.new_leaf));
    Forest leafed = contracted.forest;
    trace.nodes[index].expanded_edge = e;

    int a = build_trace(trace, std::move(deleted), index, DncOp::deletion, 1, dots);
    int b = build_trace(trace, std::move(dotted), index, DncOp::dot_contraction, -1, dots + 1);
    int c = build_trace(trace, std::move(leafed), index, DncOp::leaf_contraction, 1, dots);
    trace.nodes[index].children = {a, b, c};
    return index;
}

}  // namespace

SymFunc star_expand_with(const Forest& f, const EdgeChooser& choose)
{
    SymFunc out(Basis::star, f.order());
    expand_with(f, choose, 1, out);
    return out;
}

std::vector<int> DncTrace::leaves() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].is_leaf())
            out.push_back(static_cast<int>(i));
    }
    return out;
}

Partition DncTrace::shape(int node) const
{
    return component_orders(nodes.at(node).forest);
}

std::map<Partition, DncTrace::ShapeStats> DncTrace::shape_stats() const
{
    std::map<Partition, ShapeStats> out;
    for (int leaf : leaves()) {
        auto& stats = out[shape(leaf)];
        ++stats.paths;
        stats.dot_counts.insert(nodes[leaf].dot_count);
    }
    return out;
}

SymFunc DncTrace::expansion_from_paths() const
{
    SymFunc out(Basis::star, nodes.empty() ? 0 : nodes.front().forest.order());
    for (int leaf : leaves())
        out.add_term(shape(leaf), nodes[leaf].dot_count % 2 ? -1 : 1);
    return out;
}

std::string DncTrace::to_dot() const
{
    std::ostringstream os;
    os << "digraph dnc {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TraceNode& node = nodes[i];
        os << "  n" << i << " [label=\"" << shape(static_cast<int>(i)).to_string();
        if (node.expanded_edge)
            os << "\\ne=" << node.expanded_edge->u << "-" << node.expanded_edge->v;
        os << "\\n" << describe(node.forest) << "\"";
        if (node.is_leaf())
            os << ", style=rounded";
        os << "];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TraceNode& node = nodes[i];
        if (node.parent < 0)
            continue;
        const char* label = node.op == DncOp::deletion          ? "+ \\\\e"
                            : node.op == DncOp::dot_contraction ? "- ⊙e\\\\ℓ"
                                                                : "+ ⊙e";
        os << "  n" << node.parent << " -> n" << i << " [label=\"" << label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::pair<SymFunc, DncTrace> star_expand_traced(const Forest& f)
{
    DncTrace trace;
    build_trace(trace, f, -1, DncOp::deletion, 1, 0);
    SymFunc expansion = trace.expansion_from_paths();
    return {std::move(expansion), std::move(trace)};
}

Integer hook_coefficient_predicted(const Forest& tree, int m)
{
    if (!tree.is_tree())
        throw std::invalid_argument("hook_coefficient_predicted requires a tree");
    if (m < 0 || m > tree.order() - 1)
        throw std::invalid_argument("hook index m out of range");
    const Integer c = binomial(static_cast<int>(internal_edges(tree).size()), m);
    return m % 2 ? Integer(-c) : c;
}

}  // namespace csf
