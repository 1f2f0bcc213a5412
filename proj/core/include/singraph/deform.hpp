#pragma once

// Collections of positive roots, the graphs they span, the explicit star
// deformations of the confining graphs and root lifting between a graph and
// the double or triple point it is obtained from.

#include <array>
#include <cstddef>
#include <vector>

#include "singraph/classify.hpp"
#include "singraph/graph.hpp"

namespace singraph {

struct RootCollection {
  std::vector<Cycle> roots;

  std::size_t size() const { return roots.size(); }
  /// Sum of the roots; zero cycle on n vertices for an empty collection.
  Cycle sum(std::size_t n) const;
};

/// Throws GraphError unless every D_i is a positive root of g, the sum is
/// almost reduced and D_i.D_j >= 0 for i != j.
void validate_collection(const WeightedDualGraph& g, const RootCollection& col);

/// No other collection of the same number of positive roots generates every
/// D_i with non-negative integer coefficients.
bool is_integrally_minimal(const WeightedDualGraph& g, const RootCollection& col);
/// Same, with the positive roots of g supplied by the caller.
bool is_integrally_minimal(const WeightedDualGraph& g, const RootCollection& col, const std::vector<Cycle>& roots);

/// One vertex per root with weight D_i.D_i and edge multiplicity D_i.D_j.
/// Throws GraphError when a weight is not negative or the form is not
/// negative definite.
WeightedDualGraph collection_graph(const WeightedDualGraph& g, const RootCollection& col);

struct StarDeformation {
  ConfiningMatch match;
  /// D_0 (the centre of the star) followed by D_1..D_4.
  RootCollection collection;
  /// D_i.D_i as given by the lemma's formulas in the b_{i,j}.
  std::array<Int, 5> expected_self_intersections;
};

/// The lemma's collection for the first Table-2 subgraph of g. Throws
/// GraphError when g has no such subgraph and Error if a postcondition fails.
StarDeformation star_deformation(const WeightedDualGraph& g);

struct Adjacency {
  /// Connected graph of the deformed singularity; empty for a smooth point.
  WeightedDualGraph graph;
  RootCollection witness;
};

/// Graphs of all integrally minimal collections with at most max_m roots
/// (max_m = 0 means the number of vertices), sum at most Z, each component
/// of the incidence graph summing to a positive root. Components of a
/// disconnected collection graph are reported separately. Ordered by
/// canonical key, with the smooth point first.
std::vector<Adjacency> enumerate_adjacencies(const WeightedDualGraph& g, std::size_t max_m = 0);

struct RootLift {
  /// Vertices of the deep graph whose weight was made more negative.
  std::vector<std::size_t> deepened;
  /// Roots of the deep graph, each with its counterpart on the base graph.
  std::vector<std::pair<Cycle, Cycle>> pairs;
  /// Base roots with d_v <= 1 on the deepened vertices that have no preimage.
  std::vector<Cycle> unmatched_base;
  /// Deep roots whose coefficients are not a root of the base graph.
  std::vector<Cycle> unmatched_deep;

  bool bijective() const { return unmatched_base.empty() && unmatched_deep.empty(); }
};

/// Compares the positive roots of `deep` with those of `base`, where
/// vertex_map[v] is the base vertex of deep vertex v. The graphs must have
/// the same edges under the map and deep weights at most the base weights.
RootLift lift_roots(const WeightedDualGraph& deep, const WeightedDualGraph& base,
                    const std::vector<std::size_t>& vertex_map);
/// Vertices matched by id.
RootLift lift_roots(const WeightedDualGraph& deep, const WeightedDualGraph& base);

}  // namespace singraph
