#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "csf/forest.hpp"
#include "csf/symfunc.hpp"

namespace csf {

// Reconstruction evidence read off a star-basis CSF, and the same
// quantities predicted from a tree's structure.

/// One adjacency multiset E_mu = lambda_lead - mu, for a partition mu with
/// nonzero coefficient, one part fewer than lambda_lead, and no part 1.
struct AdjacencyPair {
    Partition mu;
    Integer coeff;
    std::vector<int> multiset;   // weakly decreasing; two elements for tree CSFs
};

struct AdjacencyReport {
    Partition leading;
    Integer leading_coeff;
    std::vector<AdjacencyPair> pairs;      // increasing lexicographic order of mu
    std::map<int, Integer> n_values;       // N(p) for each distinct part p of `leading`
    std::vector<int> internal_orders;      // see internal_component_orders
    /// False when lambda_lead contains a 1 (deep vertices exist): the
    /// N(p) membership criterion is then not backed by theory and the
    /// report is advisory.
    bool within_guarantee = true;
};

/// (lambda_lead, c_lead): the lexicographically least partition with a
/// nonzero coefficient. Throws on the zero function or a non-star basis.
std::pair<Partition, Integer> leading_partition(const SymFunc& f);

/// Structural prediction for a forest: (lambda_LC(f), (-1)^m prod (deg(u)-1))
/// over its m deep vertices.
std::pair<Partition, Integer> predicted_leading(const Forest& f);

std::vector<AdjacencyPair> adjacency_multisets(const SymFunc& f);

/// The adjacency multisets as a sorted list of (larger, smaller) order
/// pairs, each repeated c_mu times. Empty if some E_mu is not a pair or has
/// a negative coefficient.
std::vector<std::pair<int, int>> extracted_adjacencies(const SymFunc& f);

/// N(p) = sum over adjacency pairs of m_p(E_mu) * c_mu. Throws if p is not a
/// part of lambda_lead.
Integer n_of_p(const SymFunc& f, int p);

/// Parts p > 1 of lambda_lead with N(p) > m_p (each once, decreasing),
/// followed by m_1 copies of 1.
std::vector<int> internal_component_orders(const SymFunc& f);

/// c_(n-m, 1^m) == (-1)^m C(#I(t), m) for every 0 <= m <= n-1.
bool hook_check(const SymFunc& f, const Forest& t);

AdjacencyReport analyze(const SymFunc& f);

nlohmann::json to_json(const AdjacencyReport& report);

// --- structural counterparts ------------------------------------------------

/// For each internal edge joining two leaf-component centers, the orders of
/// the two components (larger first), sorted.
std::vector<std::pair<int, int>> structural_adjacencies(const Forest& tree);

/// For a tree with exactly one deep vertex u: for each leaf component
/// adjacent to u, its order (sorted decreasingly).
std::vector<int> deep_vertex_neighbor_orders(const Forest& tree);

/// Distinct orders of the leaf components lying in the internal subgraph,
/// decreasing.
std::vector<int> structural_internal_orders(const Forest& tree);

}  // namespace csf
