#pragma once

#include <span>

#include "csf/forest.hpp"
#include "csf/symfunc.hpp"

namespace csf {

/// Independent CSF in the power-sum basis by subset expansion:
///   X_G = sum_{S ⊆ E} (-1)^|S| p_lambda(S),
/// lambda(S) being the component orders of the spanning subgraph (V, S).
/// Accepts any simple graph on 1..n (cycles allowed); 2^|E| work.
SymFunc power_csf(int n, std::span<const Edge> edges);
SymFunc power_csf(const Forest& f);

/// Number of proper colorings of a forest with colors 1..k, by a per-color
/// dynamic program over each rooted component.
Integer chromatic_count(const Forest& f, int k);

}  // namespace csf
