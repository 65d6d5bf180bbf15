#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csf/forest.hpp"
#include "csf/symfunc.hpp"

namespace csf {

// Star expansion by deletion-near-contraction (DNC):
//
//   X_G = X_{G \ e} - X_{(G ⊙ e) \ l_e} + X_{G ⊙ e}
//
// applied to internal edges only, until every forest left is a star forest
// St_lambda, whose CSF is the basis element st_lambda.

enum class DncOp { deletion, dot_contraction, leaf_contraction };

std::string_view op_name(DncOp op);

/// The internal edge a DNC step expands: the smallest (min, max) pair under
/// the canonical labeling of f, reported in f's own labels. Throws if f has
/// no internal edge.
Edge select_internal_edge(const Forest& f);

/// Memoized star expansion. Results are cached per tree, keyed by canonical
/// form; a forest expands to the product of its components. Not thread-safe;
/// use one expander per thread.
class StarExpander {
public:
    SymFunc expand(const Forest& f);

    std::size_t cache_size() const noexcept { return memo_.size(); }
    void clear() { memo_.clear(); }

private:
    using IntTerms = std::map<Partition, Integer>;

    IntTerms expand_forest(const Forest& f);
    const IntTerms& expand_tree(const Forest& tree);

    std::unordered_map<std::string, IntTerms> memo_;
};

/// Star-basis CSF of a forest, using a per-thread StarExpander.
SymFunc star_expand(const Forest& f);

/// Chooses which internal edge to expand; `internal` is never empty.
using EdgeChooser = std::function<Edge(const Forest& f, std::span<const Edge> internal)>;

/// Unmemoized expansion over the whole forest with a caller-chosen edge at
/// every step. Used to check that the result does not depend on the order.
SymFunc star_expand_with(const Forest& f, const EdgeChooser& choose);

struct TraceNode {
    Forest forest;
    std::string canonical;
    int parent = -1;
    DncOp op = DncOp::deletion;          // how this node was reached
    int sign = 1;                        // -1 for a dot-contraction branch
    std::optional<Edge> expanded_edge;   // set on internal nodes
    std::vector<int> children;           // deletion, dot, leaf-contraction
    int dot_count = 0;                   // dot-contractions from the root

    bool is_leaf() const { return children.empty(); }
};

/// The full ternary DNC tree, root first.
class DncTrace {
public:
    std::vector<TraceNode> nodes;

    std::vector<int> leaves() const;

    /// Component orders of a node's forest, as a partition.
    Partition shape(int node) const;

    struct ShapeStats {
        std::size_t paths = 0;
        std::set<int> dot_counts;
    };
    /// Root-to-leaf paths grouped by the shape of the final star forest.
    std::map<Partition, ShapeStats> shape_stats() const;

    /// sum over root-to-leaf paths of (-1)^(dot count) st_shape.
    SymFunc expansion_from_paths() const;

    /// Graphviz rendering; nodes carry their component orders, edges the
    /// operation and sign.
    std::string to_dot() const;
};

/// Expansion plus its full DNC tree (no memoization).
std::pair<SymFunc, DncTrace> star_expand_traced(const Forest& f);

/// (-1)^m * C(#internal edges, m): the predicted coefficient of
/// st_(n-m, 1^m) for a tree.
Integer hook_coefficient_predicted(const Forest& tree, int m);

}  // namespace csf
