#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlie/errors.hpp"

namespace qlie {

struct Arrow {
  std::string name;
  int source = -1;  // vertex index
  int target = -1;
  bool operator==(const Arrow& other) const = default;
};

/// Finite quiver. Vertices and arrows live in declaration order; the arrow
/// order fixes the canonical path order and with it every matrix,
/// certificate and serialized artifact downstream.
class Quiver {
 public:
  /// Declares a vertex if new; returns its index either way.
  int add_vertex(const std::string& name);

  /// Adds an arrow, implicitly declaring unknown endpoints.
  int add_arrow(const std::string& name, const std::string& source,
                const std::string& target);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int index) const { return arrows_.at(index); }
  const std::string& vertex_name(int index) const {
    return vertices_.at(index);
  }
  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> arrow_index(const std::string& name) const;
  std::vector<int> isolated_vertices() const;

  // Arrows compare as an ordered list by (name, endpoint names); vertices
  // as a set. Vertex order is representational only.
  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

/// Composable arrow sequence of length >= 1, stored as indices into one
/// quiver's arrow list. Canonical order: shorter first, then lexicographic
/// by arrow declaration index.
struct PathSeq {
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const PathSeq& other) const = default;
  bool operator<(const PathSeq& other) const;
};

int path_source(const Quiver& q, const PathSeq& x);
int path_target(const Quiver& q, const PathSeq& x);
bool is_path(const Quiver& q, const PathSeq& x);

/// Dot-joined arrow names; the canonical external name of a path.
std::string path_name(const Quiver& q, const PathSeq& x);

/// Arrow names of x with composite names split back into underlying
/// arrows. Identifies paths of a reduced quiver with paths of its parent.
std::vector<std::string> flatten_path(const Quiver& q, const PathSeq& x);

/// Accepts exactly the finite quivers without directed cycles; a loop is a
/// cycle of length one. Throws CycleFound with a witness otherwise.
void validate(const Quiver& q);

/// All paths in canonical order. Requires a validated quiver.
std::vector<PathSeq> enumerate_paths(const Quiver& q);

/// Maximum path length. Throws EmptyQuiver without arrows.
int quiver_length(const Quiver& q);

/// Arrows starting some maximal-length path, ascending by index.
std::vector<int> starting_set(const Quiver& q);

/// Same vertices, arrows (E minus S) plus composite arrows "a.b" for a in
/// S, b in E with t(a) = s(b). Requires length >= 2.
///
/// Postconditions (checked): the paths of the result flatten to exactly
/// Path(Q) minus S, and the length drops by one.
Quiver reduced_quiver(const Quiver& q);

/// Blocks indexed by the target vertices v_j of S: S_j (arrows of S into
/// v_j), P1_j (paths of Q' out of v_j), P2_j (paths a.y, a in S_j, y in
/// P1_j) and the untouched remainder P0.
struct QuiverPartition {
  Quiver reduced;
  std::vector<int> starting;                    // S, parent arrow indices
  std::vector<int> target_vertices;             // V_S, ascending
  std::vector<std::vector<int>> s_blocks;       // S_j
  std::vector<std::vector<PathSeq>> p1_blocks;  // paths of `reduced`
  std::vector<std::vector<PathSeq>> p2_blocks;  // paths of `reduced`
  std::vector<PathSeq> p0;                      // paths of `reduced`
};

QuiverPartition partition(const Quiver& q);

}  // namespace qlie
