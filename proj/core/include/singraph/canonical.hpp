#pragma once

#include <string>

#include "singraph/graph.hpp"

namespace singraph {

/// Largest non-tree component handled by exhaustive matching.
inline constexpr std::size_t kMaxExhaustiveIsoVertices = 16;

/// Isomorphism-invariant key of a weighted graph, ignoring vertex ids.
///
/// Tree components use a centre-rooted AHU encoding that carries weights and
/// edge multiplicities; other components fall back to the lexicographically
/// least adjacency string over all vertex orders compatible with a refined
/// invariant partition. Component keys are sorted, so forests are handled.
std::string canonical_key(const WeightedDualGraph& g);

bool is_isomorphic(const WeightedDualGraph& a, const WeightedDualGraph& b);

/// Copy of g relabelled v1..vn in a canonical vertex order.
WeightedDualGraph canonical_relabel(const WeightedDualGraph& g);

}  // namespace singraph
