#pragma once

// Fundamental cycles, rationality and multiplicity, positive roots and the
// iterated blow-up of a rational singularity.

#include <functional>
#include <vector>

#include "singraph/graph.hpp"

namespace singraph {

struct FundamentalCycle {
  Cycle z;
  /// Vertex added at each step, starting with the initial vertex.
  std::vector<std::size_t> sequence;
};

/// Picks the vertex to add among the candidates (all v with Z_j.E_v > 0).
using SequenceChooser = std::function<std::size_t(const std::vector<std::size_t>& candidates)>;

/// Laufer's algorithm started at the least vertex, always adding the least
/// vertex with positive intersection. Throws NotNegativeDefinite or
/// GraphError (disconnected input).
FundamentalCycle fundamental_cycle(const WeightedDualGraph& g);
/// Same, with caller-controlled start vertex and tie-breaking.
FundamentalCycle fundamental_cycle(const WeightedDualGraph& g, std::size_t start, const SequenceChooser& choose);

/// Artin's criterion p_a(Z) = 0.
bool is_rational(const WeightedDualGraph& g);
/// -Z.Z of a rational graph; throws NotRational otherwise.
Int multiplicity(const WeightedDualGraph& g);

/// Candidate bound for box enumeration; SINGRAPH_MAX_BOX overrides it.
std::uint64_t max_box_candidates();
inline constexpr std::uint64_t kDefaultMaxBox = 10'000'000;

/// All 0 < D <= Z with p_a(D) = 0, in lexicographic order of coefficient
/// vectors. Every root is cross-checked against the computation-sequence
/// characterisation; a disagreement throws.
std::vector<Cycle> positive_roots(const WeightedDualGraph& g);

/// D is reachable from a single E_v by steps Z_{j+1} = Z_j + E_i with
/// Z_j.E_i > 0 and extends the same way up to the fundamental cycle.
bool is_part_of_computation_sequence(const WeightedDualGraph& g, const Cycle& d);

/// d_v <= 1 wherever w_v < -2.
bool is_almost_reduced(const WeightedDualGraph& g, const Cycle& d);

/// K.(D - D_red).
Int obstruction_number(const WeightedDualGraph& g, const Cycle& d);

/// Connected components of {v : Z.E_v = 0}: the singularities on the first
/// blow-up of a rational singularity.
std::vector<WeightedDualGraph> blow_up_decomposition(const WeightedDualGraph& g);

struct ProfileEntry {
  Int multiplicity;
  int depth;
  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

inline constexpr int kMaxProfileDepth = 64;

/// Multiplicities of all singularities met in the iterated blow-up, in
/// pre-order, starting with g itself at depth 0.
std::vector<ProfileEntry> resolution_profile(const WeightedDualGraph& g);

/// Number of profile entries with multiplicity 4.
std::size_t quadruple_point_count(const WeightedDualGraph& g);

}  // namespace singraph
