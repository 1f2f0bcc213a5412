#pragma once

// Combinatorial candidates for the fibres of delta-constant deformations of
// a decorated curve. Geometric realisability is not decided: every candidate
// only satisfies the bookkeeping rules (intersection numbers and decorations
// split over the new singular points, l_p(i) >= m_p(i), A-series splitting).

#include <string>
#include <vector>

#include "singraph/cluster.hpp"

namespace singraph {

/// "A<n>" for a single branch of multiplicity two or two smooth branches,
/// "A0" for one smooth branch, "S<n>" for n > 2 smooth branches and
/// "other" for anything else.
std::string germ_type(const DecoratedCurve& c);

struct DeltaConstCandidate {
  /// Singular germs of the fibre, followed by smooth points still carrying
  /// a decoration of at least 2.
  std::vector<DecoratedCurve> germs;

  /// Types of the germs that are singular as plane curves, sorted.
  std::vector<std::string> singularity_types() const;
};

/// Smooth decorated germ with the given contact orders (symmetric, diagonal
/// ignored) and decorations.
DecoratedCurve smooth_branch_germ(const std::vector<std::vector<Int>>& contact, const std::vector<Int>& l);
/// Single A_{2k} branch with decoration l.
DecoratedCurve cusp_germ(int k, Int l);

/// Candidates for a curve of smooth branches or for a single A_{2k} branch,
/// with at most `depth` singular points (0: k for A_{2k}, three otherwise).
/// The trivial deformation is always included. Throws GraphError for other
/// branch types.
std::vector<DeltaConstCandidate> delta_const_candidates(const DecoratedCurve& c, std::size_t depth = 0);

}  // namespace singraph
