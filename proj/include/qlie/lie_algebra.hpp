#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qlie/quiver.hpp"
#include "qlie/rational.hpp"

namespace qlie {

struct BracketValue {
  int index;  // basis index of the output path
  int sign;   // +1 or -1
  bool operator==(const BracketValue& other) const = default;
};

/// The Lie algebra on Path(Q) with [x, y] = x.y - y.x. Every bracket of
/// basis paths is 0 or a single signed basis path, so the structure
/// constants live in a sparse table keyed by (i, j) with i < j.
class QuiverLieAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<PathSeq>& basis() const { return basis_; }
  const PathSeq& path(int index) const { return basis_.at(index); }
  std::string name(int index) const { return path_name(quiver_, basis_.at(index)); }

  std::optional<int> index_of(const PathSeq& path) const;
  std::optional<int> index_of_name(const std::string& name) const;

  /// Concatenation product x_i . x_j: the basis index of the composite
  /// path, or nothing when the targets do not line up.
  std::optional<int> concat(int i, int j) const;

  /// [x_i, x_j] as a signed basis element, or nothing when zero.
  std::optional<BracketValue> bracket(int i, int j) const;

  /// Entries (i, j) -> value with i < j; the other half follows by
  /// antisymmetry.
  const std::map<std::pair<int, int>, BracketValue>& table() const {
    return table_;
  }

  /// grades()[l - 1] = basis indices of the paths of length l.
  const std::vector<std::vector<int>>& grades() const { return grades_; }
  int max_length() const { return static_cast<int>(grades_.size()); }

 private:
  friend QuiverLieAlgebra build_algebra(const Quiver& q);

  Quiver quiver_;
  std::vector<PathSeq> basis_;
  std::map<std::vector<int>, int> index_;
  std::map<std::pair<int, int>, BracketValue> table_;
  std::vector<std::vector<int>> grades_;
};

/// Builds basis, bracket table and grading for a validated acyclic quiver
/// with at least one arrow, then verifies antisymmetry and the Jacobi
/// identity exhaustively on basis triples.
QuiverLieAlgebra build_algebra(const Quiver& q);

/// Step of the descending central series C^k, computed from the bracket
/// table. Checked against the span of paths of length > k at every k, and
/// equal to the quiver length.
int nilpotency_step(const QuiverLieAlgebra& alg);

/// [n^i, n^j] = n^{i+j} as spans, both inclusions; the containing
/// direction is witnessed by splitting each length-(i+j) path at i.
void check_graded_bracket(const QuiverLieAlgebra& alg);

/// Both nice-basis conditions, exhaustively over ordered index pairs:
/// at most one output per (i, j), at most one partner j per (i, k).
void check_nice_basis(const QuiverLieAlgebra& alg);

/// Linear map acting diagonally on the path basis.
struct DiagonalMap {
  std::vector<Rat> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  bool operator==(const DiagonalMap& other) const = default;
};

DiagonalMap constant_map(int dim, const Rat& value);

/// Length grading: eigenvalue = path length. A derivation on every quiver
/// Lie algebra, since lengths add under concatenation.
DiagonalMap length_grading(const QuiverLieAlgebra& alg);

/// Leibniz rule over the table: every entry [x_i, x_j] = +-x_k must
/// satisfy d_k = d_i + d_j.
bool is_derivation(const QuiverLieAlgebra& alg, const DiagonalMap& d);

/// Extends a diagonal derivation d' of the reduced algebra by zero on S.
/// Requires d' to be a derivation constant on Aut(Q')-orbits of paths
/// (HypothesisViolated otherwise); the result is a derivation of the
/// parent algebra.
DiagonalMap extend_derivation(const QuiverLieAlgebra& parent,
                              const QuiverLieAlgebra& reduced,
                              const DiagonalMap& d_prime,
                              const std::vector<int>& starting);

/// Basis index in `parent` of each basis path of `reduced`, via name
/// flattening.
std::vector<int> reduced_to_parent_index(const QuiverLieAlgebra& parent,
                                         const QuiverLieAlgebra& reduced);

}  // namespace qlie
