#pragma once

// Exhaustive test universes: weighted trees up to isomorphism.

#include <functional>
#include <vector>

#include "singraph/graph.hpp"

namespace singraph {

/// Unweighted trees on n vertices up to isomorphism (all weights -2).
std::vector<WeightedDualGraph> unlabeled_trees(std::size_t n);

/// Calls `visit` once per isomorphism class of trees with 1..max_vertices
/// vertices and weights in [min_weight, max_weight].
void for_each_weighted_tree(std::size_t max_vertices, Int min_weight, Int max_weight,
                            const std::function<void(const WeightedDualGraph&)>& visit);

/// Minimal, negative definite, rational trees of the universe above.
std::vector<WeightedDualGraph> rational_tree_universe(std::size_t max_vertices, Int min_weight);

}  // namespace singraph
