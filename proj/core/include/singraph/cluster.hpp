#pragma once

// Clusters of infinitely near points and decorated plane curves built on
// them.  A branch is given by the last cluster point it passes through; it
// leaves that point transversally through a general point of its exceptional
// curve, so its multiplicities solve P^T m = e_attach.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singraph/graph.hpp"

namespace singraph {

using Matrix = std::vector<std::vector<Int>>;

struct ClusterPoint {
  int id = 0;
  std::optional<int> parent;
  /// Points this one is proximate to; always contains the parent.
  std::vector<int> proximate_to;
  friend bool operator==(const ClusterPoint&, const ClusterPoint&) = default;
};

/// Ordered cluster, each point after the points it is proximate to.
class Cluster {
 public:
  Cluster() = default;
  /// Validates the proximity structure; throws GraphError.
  explicit Cluster(std::vector<ClusterPoint> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<ClusterPoint>& points() const { return points_; }
  const ClusterPoint& point(std::size_t p) const { return points_.at(p); }
  std::size_t index_of(int id) const;
  std::optional<std::size_t> parent(std::size_t p) const { return parent_[p]; }
  const std::vector<std::size_t>& proximate(std::size_t p) const { return prox_[p]; }
  bool is_free(std::size_t p) const { return prox_[p].size() <= 1; }

  /// Unit lower triangular, P[q][p] = -1 when q is proximate to p.
  Matrix proximity_matrix() const;
  /// Intersection form -P^T P of the strict transforms of the exceptional curves.
  Matrix intersection_matrix() const;
  /// Dual graph of the exceptional curves, vertex ids "E<point id>".
  WeightedDualGraph exceptional_graph() const;
  /// Solution of P^T m = e_p: multiplicities of a branch leaving through a
  /// general point of E_p.
  std::vector<Int> branch_multiplicities(std::size_t p) const;
  /// Points from the root to p.
  std::vector<std::size_t> path_to(std::size_t p) const;

  /// Appends a free point on the last exceptional curve of `parent`
  /// (nullopt for the origin); returns its index.
  std::size_t add_free(std::optional<std::size_t> parent);
  /// Appends the satellite point on E_parent and E_other.
  std::size_t add_satellite(std::size_t parent, std::size_t other);

  friend bool operator==(const Cluster&, const Cluster&) = default;

 private:
  void index();

  std::vector<ClusterPoint> points_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> prox_;
};

struct CurveBranch {
  std::size_t attach;  // cluster index
  Int l = 0;
  friend bool operator==(const CurveBranch&, const CurveBranch&) = default;
};

/// Plane curve germ given by a cluster and branches, with a decoration l(i)
/// per branch.
class DecoratedCurve {
 public:
  DecoratedCurve() = default;
  /// Throws GraphError when some l(i) < m(i).
  DecoratedCurve(Cluster cluster, std::vector<CurveBranch> branches);

  const Cluster& cluster() const { return cluster_; }
  const std::vector<CurveBranch>& branches() const { return branches_; }
  std::size_t branch_count() const { return branches_.size(); }
  Int l(std::size_t i) const { return branches_.at(i).l; }

  /// m_p(C_i) for every cluster point p.
  const std::vector<Int>& multiplicities(std::size_t i) const { return mult_.at(i); }
  /// Multiplicity of the whole curve at each cluster point.
  std::vector<Int> total_multiplicities() const;
  /// Points at which the curve is singular; the points of its minimal
  /// resolution in the multiplicity-sequence sense.
  std::vector<bool> singular_points() const;
  /// Sum of the multiplicities of C_i over the singular points.
  Int m(std::size_t i) const;
  /// Sum of the multiplicities of C_i over the whole cluster.
  Int cluster_length(std::size_t i) const;
  /// Noether: sum over common points of m_p(C_i) m_p(C_j).
  Int intersection(std::size_t i, std::size_t j) const;
  Int delta() const;
  bool is_smooth_branch(std::size_t i) const;
  /// One smooth branch with l = 0.
  bool is_nonsingular() const;
  /// Multiplicities of C_i at its singular points, in path order.
  std::vector<Int> multiplicity_sequence(std::size_t i) const;

  friend bool operator==(const DecoratedCurve&, const DecoratedCurve&) = default;

 private:
  Cluster cluster_;
  std::vector<CurveBranch> branches_;
  std::vector<std::vector<Int>> mult_;
};

/// {"points":[{"id":1,"parent":null,"proximate_to":[]},...],
///  "branches":[{"attach":5,"l":6},...]}
/// A missing parent in proximate_to is added. Throws ParseError.
DecoratedCurve parse_decorated_curve(std::string_view text);
DecoratedCurve read_decorated_curve_file(const std::string& path);
std::string decorated_curve_to_json(const DecoratedCurve& c, int indent = -1);

}  // namespace singraph
