#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "csf/forest.hpp"

namespace csf {

/// AHU encoding of a forest: each tree is rooted at its center (the smaller
/// of the two rooted codes when it has two centers) and encoded as nested
/// parentheses with sorted child codes; component codes are sorted and
/// concatenated. Two forests get equal codes iff they are isomorphic.
std::string canonical_form(const Forest& f);

struct Canonization {
    std::string code;
    /// label[v] = canonical label of vertex v (index 0 unused).
    std::vector<Vertex> label;
    Forest forest;   // f relabeled by `label`
};

/// The canonical code together with a labeling that realizes it: vertices
/// are numbered in preorder of the canonically rooted, canonically ordered
/// components. Isomorphic inputs map to identical labeled forests.
Canonization canonize(const Forest& f);

bool is_isomorphic(const Forest& a, const Forest& b);

/// One representative (canonically labeled) per isomorphism class of trees
/// on n vertices, sorted by canonical code.
std::vector<Forest> enumerate_trees(int n);

/// The labeled tree on n >= 2 vertices with the given Prüfer sequence
/// (length n - 2, entries in 1..n).
Forest prufer_decode(std::span<const int> sequence, int n);

/// A uniformly random labeled tree on n vertices.
Forest random_tree(int n, std::mt19937_64& rng);

}  // namespace csf
