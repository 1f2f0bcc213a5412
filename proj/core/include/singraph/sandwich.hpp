#pragma once

// Sandwiched singularities: augmenting a graph by (-1)-curves carrying curve
// branches, blowing the result down to a decorated plane curve, the space
// X(C,l) of a decorated curve, the decorated-curve recipes for the III.3 and
// III.4 graphs and a decision procedure for being sandwiched.

#include <optional>
#include <string>
#include <vector>

#include "singraph/cluster.hpp"
#include "singraph/graph.hpp"

namespace singraph {

/// The configuration has no blow-down to a smooth surface germ.
class NotBlowdownable : public Error {
 public:
  using Error::Error;
};

/// Base graph extended by (-1)-vertices, each transverse to one curve branch.
struct AugmentedGraph {
  /// Base vertices plus the (-1)-vertices.
  WeightedDualGraph graph;
  /// Indices into `graph` of the (-1)-vertices, one per branch.
  std::vector<std::size_t> arrows;
  /// Base vertex each (-1)-vertex is attached to, as an index into `graph`.
  std::vector<std::size_t> attached_to;
};

/// Recipe for reduced fundamental cycle: -Z.E_v arrows at each vertex and one
/// fewer at e0 (by default the least end vertex). Throws GraphError for a
/// non-reduced Z or when e0 would get a negative count.
AugmentedGraph attach_arrows(const WeightedDualGraph& g, std::optional<std::size_t> e0 = std::nullopt);

/// Blow-down certificate: the curves of a configuration listed as the points
/// of a cluster, first blown up first.
struct ProximityMatrix {
  /// order[k] is the graph vertex created by blowing up point k.
  std::vector<std::size_t> order;
  Cluster cluster;

  Matrix matrix() const { return cluster.proximity_matrix(); }
};

/// Repeatedly contracts the least (-1)-vertex meeting at most two curves,
/// each transversally, until nothing is left. Verifies I = -P^T P.
/// Throws NotBlowdownable.
ProximityMatrix proximity_factorize(const WeightedDualGraph& g);
ProximityMatrix proximity_factorize(const AugmentedGraph& a);

/// Curve whose branches are transverse to the arrow vertices; l(i) is the
/// sum of the branch multiplicities over the cluster.
DecoratedCurve decorated_curve_of(const AugmentedGraph& a, const ProximityMatrix& p);

/// Embedded resolution of (C,l): the singular points of C, then l(i) - m(i)
/// further blow-ups along each branch (continuing with free points past the
/// cluster). Returns the components of the curves meeting no branch,
/// vertex ids "E<n>" in blow-up order. Empty for a smooth X(C,l).
std::vector<WeightedDualGraph> graph_of(const DecoratedCurve& c);

/// Branches added to the III.3 triple point curve (A_{2k}, 2k+4+s).
struct Iii3Arms {
  /// m for each smooth branch making E_{1,m} (left arm, 1 <= m <= k) more negative.
  std::vector<int> left;
  /// Number of smooth branches on the short arm.
  int short_arm = 0;
  /// n for each A_{2k} branch on E_{2,n} (right arm, 1 <= n <= s+1).
  std::vector<int> right;
};

DecoratedCurve recipe_iii3(int k, int s, const Iii3Arms& arms = {});

enum class Iii4Variant { E6, E8, Cusp };
std::string to_string(Iii4Variant v);

struct Iii4Arms {
  /// Smooth branches with l = 2 (first blown-up curve for E6, E_{1,2} for E8).
  int first = 0;
  /// Smooth branches with l = 3 on E_{1,2} (E6 only).
  int second = 0;
  /// t for each branch (E6, t+7) or (E8, t+8) on E_{2,t}, 1 <= t <= k.
  std::vector<int> right;
};

/// (E6, k+7), (E8, k+8) or (x^3 + y^{3k-1}, 4+3k) with k > 2; the last
/// variant takes no extra branches.
DecoratedCurve recipe_iii4(Iii4Variant variant, int k, const Iii4Arms& arms = {});

/// Bound k+1 on the ends of the singularities of X(C,l) for a cover of the
/// smooth branches by k parts with C_i.C_j <= min(l(i), l(j)) <= C_i.C_j + 1
/// inside each part. Throws GraphError if the cover or the property fails,
/// Error if some component of graph_of(c) has more ends.
std::size_t ends_bound(const DecoratedCurve& c, const std::vector<std::vector<std::size_t>>& parts);

/// Multiplicities over the resolution of (E8, t+8) allowed by the III.4
/// argument: (3,2,1^{t+3}) or (2^4,1^t).
bool is_admissible_e8_profile(const std::vector<Int>& multiplicities, int t);

enum class SandwichAnswer { Yes, No, Unknown };
std::string to_string(SandwichAnswer a);

struct SandwichVerdict {
  SandwichAnswer answer = SandwichAnswer::Unknown;
  /// Augmentation that blows down, when the answer is Yes.
  std::optional<AugmentedGraph> witness;
  std::string reason;
};

/// Searches for (-1)-vertices, at most arrow_budget per vertex (0 means the
/// multiplicity), making the graph blow down. Unknown when the budget cut the
/// search short, never a false No.
SandwichVerdict is_sandwiched(const WeightedDualGraph& g, Int arrow_budget = 0);

}  // namespace singraph
