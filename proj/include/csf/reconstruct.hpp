#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csf/forest.hpp"
#include "csf/symfunc.hpp"

namespace csf {

enum class DiameterClass { star, bistar, extended_bistar, diam4, diam5, distinct_parts };

std::string_view class_name(DiameterClass c);

struct ReconstructionResult {
    Forest tree;
    DiameterClass diameter_class = DiameterClass::star;
    bool verified = false;   // always true on return: the tree re-expands to the input
};

class ReconstructionError : public std::runtime_error {
public:
    enum class Kind {
        no_candidate,      // no tree of the supported shapes re-expands to the input
        not_a_tree_csf,    // fails a necessary condition for a tree CSF
        shape_mismatch,    // a branch was called on a leading partition it cannot handle
    };

    ReconstructionError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Rebuilds a tree from its star-basis CSF. Tries, in order: star,
/// bi-star / extended bi-star, diameter 4, diameter 5, and finally the
/// distinct-parts construction; the first candidate whose star expansion
/// equals `f` is returned.
ReconstructionResult reconstruct(const SymFunc& f);

/// lambda_lead = (i, j, 1^k) with i, j > 1: stars St_i and St_j whose
/// centers are joined through k degree-2 vertices.
Forest reconstruct_bistar(const SymFunc& f);

/// Diameter 4: one leaf component (the hub) lies in the internal subgraph
/// and every other component's center is joined to the hub's center. The
/// hub is the singleton when lambda_lead has one 1, otherwise a part p with
/// N(p) > m_p.
Forest reconstruct_diam4(const SymFunc& f);

/// Diameter 5: two adjacent components of orders {r, s} form the internal
/// subgraph; every split of the remaining components between the two
/// centers that matches the adjacency evidence is built and verified, in
/// lexicographic order of the r-side multiset. A side may be empty.
Forest reconstruct_diam5(const SymFunc& f);

/// lambda_lead without 1s and with distinct parts: each adjacency multiset
/// {p, q} joins the centers of the p- and q-components.
Forest reconstruct_distinct_parts(const SymFunc& f);

/// The branch for one diameter class, or nullopt when it yields no verified
/// tree. `distinct_parts` is accepted as well.
std::optional<Forest> try_branch(DiameterClass c, const SymFunc& f);

/// For f = X_{T1} X_{T2} with N2 = |V(T2)|: the lexicographically least
/// alpha such that (N2, alpha), sorted, has a nonzero coefficient.
Partition split_product_leading(const SymFunc& f, int n2);

/// Stars of the given orders (component i: center, then leaves) with the
/// centers of each linked pair of components joined by an edge. Throws
/// `std::invalid_argument` if the links do not give a forest.
Forest assemble_stars(const std::vector<int>& orders,
                      const std::vector<std::pair<int, int>>& links);

}  // namespace csf
