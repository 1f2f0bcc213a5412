#pragma once

// Shape grammars of the quasi-homogeneous taut graphs and of the confining
// non-simple graphs, the obtainable-from-RDP/RTP decision and the
// simpleness and sandwich predicates built on them.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singraph/graph.hpp"

namespace singraph {

enum class LauferTag { I_II, III_1, III_2, III_3, III_4, III_5, III_6, III_7, III_8, III_9, None };

std::string to_string(LauferTag tag);

/// Template slot name ("center", "arm2[0]", ...) paired with a vertex index.
using SlotAssignment = std::vector<std::pair<std::string, std::size_t>>;

struct LauferType {
  LauferTag tag = LauferTag::None;
  SlotAssignment witness;
};

/// Arms of a tree with exactly one vertex of valency three, each listed from
/// the vertex next to the centre outward.
struct StarShape {
  std::size_t center;
  std::array<std::vector<std::size_t>, 3> arms;
};

/// Decomposition at the unique valency-3 vertex; nullopt for chains, graphs
/// with several branch vertices, higher valencies or cycles.
std::optional<StarShape> star_shape(const WeightedDualGraph& g);

/// First matching template in the order I/II, III.1, ..., III.9.
/// Throws GraphError for non-minimal or disconnected input.
LauferType laufer_type(const WeightedDualGraph& g);

/// Every template the graph matches; the templates are meant to be disjoint.
std::vector<LauferTag> matching_laufer_tags(const WeightedDualGraph& g);

bool is_rdp(const WeightedDualGraph& g);
bool is_rtp(const WeightedDualGraph& g);

enum class BaseKind { RDP, RTP, None };
std::string to_string(BaseKind kind);

struct ObtainableVerdict {
  BaseKind kind = BaseKind::None;
  /// Weights of the double or triple point the graph is obtained from.
  std::vector<Int> base_weights;
};

/// Searches RDP first, then RTP with the (-3) at each vertex of weight <= -3
/// in id order. Throws NotRational for non-rational input.
ObtainableVerdict obtainable_from_base(const WeightedDualGraph& g);
/// RTP search only.
ObtainableVerdict obtainable_from_rtp(const WeightedDualGraph& g);

bool is_conjecturally_simple(const WeightedDualGraph& g);

enum class ConfiningType { E6, E7, E8 };
std::string to_string(ConfiningType type);

/// Induced subgraph of shape ~E6, ~E7 or ~E8. Arms follow the lemma's
/// numbering: arm 0 is the short ("downward") arm, arm 2 the long one.
struct ConfiningMatch {
  ConfiningType type;
  std::size_t center;
  std::array<std::vector<std::size_t>, 3> arms;
  /// All vertices of the subgraph, centre first.
  std::vector<std::size_t> vertices() const;
};

/// First Table-2 shape (in order ~E6, ~E7, ~E8) found as a subgraph.
std::optional<ConfiningMatch> find_confining_subgraph(const WeightedDualGraph& g);

struct NonsimpleWitness {
  enum class Kind { HighValencyStar, TwoTripleMerge, ConfiningSubgraph };
  Kind kind;
  std::size_t vertex = 0;            // HighValencyStar
  std::vector<std::size_t> path;     // TwoTripleMerge, branch vertex to branch vertex
  std::optional<ConfiningMatch> confining;
};

std::string to_string(NonsimpleWitness::Kind kind);

/// Witness that a rational, non-obtainable graph deforms into a star.
/// Throws GraphError when called on an obtainable graph.
NonsimpleWitness nonsimple_witness(const WeightedDualGraph& g);

/// True when g contains D4 or the chain of five (-2)-curves with a (-3)
/// below its middle as an induced subgraph, or when no vertex has z_v = 1
/// and Z.E_v < 0. Such graphs are not sandwiched.
bool sandwich_obstruction(const WeightedDualGraph& g);

}  // namespace singraph
