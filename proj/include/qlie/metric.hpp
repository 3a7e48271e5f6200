#pragma once

#include <string>
#include <vector>

#include "qlie/lie_algebra.hpp"
#include "qlie/rational.hpp"

namespace qlie {

/// Inner product making the path basis orthogonal: one positive squared
/// norm per basis path.
struct DiagonalMetric {
  std::vector<Rat> norms_squared;

  int dim() const { return static_cast<int>(norms_squared.size()); }
  bool operator==(const DiagonalMetric& other) const = default;
};

DiagonalMetric ones_metric(int dim);

/// Ricci data on the unnormalized path basis: the symmetric form
/// R[p][q] = <Ric(x_p), x_q>, the operator G^{-1} R, and (when the
/// operator is diagonal) its diagonal.
struct RicciResult {
  std::vector<std::vector<Rat>> form;
  std::vector<std::vector<Rat>> op;
  std::vector<Rat> diagonal;  // empty unless the operator is diagonal

  bool operator_diagonal() const { return !diagonal.empty(); }
};

/// Full Ricci form
///   <Ric(x), y> = -1/2 sum <[x,x_i],x_j><[y,x_i],x_j> / (|x_i|^2 |x_j|^2)
///                 +1/4 sum <[x_i,x_j],x><[x_i,x_j],y> / (|x_i|^2 |x_j|^2),
/// exactly rational since every <[u,v],w> is 0 or +-|w|^2. This is the
/// cross-check route; ricci_diagonal_nice is the production route.
RicciResult ricci_form(const QuiverLieAlgebra& alg, const DiagonalMetric& g);

/// Diagonal Ricci for a nice orthogonal basis:
///   r_k = -1/2 sum_{i,j} <[xb_k,xb_i],xb_j>^2
///         +1/2 sum_{i<j} <[xb_i,xb_j],xb_k>^2
/// with each square |x_j|^2 / (|x_k|^2 |x_i|^2) when [x_k,x_i] = +-x_j.
std::vector<Rat> ricci_diagonal_nice(const QuiverLieAlgebra& alg,
                                     const DiagonalMetric& g);

/// The squared coefficient <[ab,xb],(ax)b>^2 = |ax|^2/(|a|^2 |x|^2), which
/// must equal 1/|a|^2 whenever |x|^2 = |ax|^2 (NormMismatch otherwise).
Rat bracket_norm_coefficient(const QuiverLieAlgebra& alg,
                             const DiagonalMetric& g, int a, int x);

/// Verifies the four-case expression of Ric in terms of the reduced
/// algebra's Ricci curvature, as exact rational identities:
///   (1) x in S:  r_x = -1/2 sum_{xy path} |xy|^2/(|x|^2 |y|^2)
///   (2) x in P1: r_x - r'_x = -1/2 sum_{a in S, ax path} ...
///   (3) x in P2: r_x - r'_x = +1/2 |x|^2/(|b|^2 |c|^2), x = bc, b in S
///   (4) x in P0: r_x = r'_x.
void ricci_decomposition_check(const Quiver& q, const DiagonalMetric& g);

/// Restriction of a parent metric to the reduced algebra, matching paths
/// by flattening.
DiagonalMetric restrict_metric(const QuiverLieAlgebra& parent,
                               const QuiverLieAlgebra& reduced,
                               const DiagonalMetric& g);

/// Metric file: one "path-name = p/q" line per path, '#' comments and
/// blank lines ignored, missing paths default to 1.
DiagonalMetric parse_metric_file(const QuiverLieAlgebra& alg,
                                 const std::string& text);

}  // namespace qlie
