#include "qlie/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "qlie/automorphism.hpp"

namespace qlie {

std::optional<int> QuiverLieAlgebra::index_of(const PathSeq& path) const {
  auto it = index_.find(path.arrows);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> QuiverLieAlgebra::index_of_name(
    const std::string& name) const {
  for (int i = 0; i < dim(); ++i) {
    if (this->name(i) == name) return i;
  }
  return std::nullopt;
}

std::optional<int> QuiverLieAlgebra::concat(int i, int j) const {
  const PathSeq& x = basis_.at(i);
  const PathSeq& y = basis_.at(j);
  if (path_target(quiver_, x) != path_source(quiver_, y)) return std::nullopt;
  std::vector<int> joined = x.arrows;
  joined.insert(joined.end(), y.arrows.begin(), y.arrows.end());
  auto it = index_.find(joined);
  if (it == index_.end()) {
    throw InternalError("composable concatenation missing from the basis");
  }
  return it->second;
}

std::optional<BracketValue> QuiverLieAlgebra::bracket(int i, int j) const {
  if (i == j) return std::nullopt;
  bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return std::nullopt;
  BracketValue v = it->second;
  if (flip) v.sign = -v.sign;
  return v;
}

namespace {

// [[x_a, x_b], x_c] as a signed basis element or nothing
std::optional<BracketValue> double_bracket(const QuiverLieAlgebra& alg, int a,
                                           int b, int c) {
  auto inner = alg.bracket(a, b);
  if (!inner) return std::nullopt;
  auto outer = alg.bracket(inner->index, c);
  if (!outer) return std::nullopt;
  return BracketValue{outer->index, inner->sign * outer->sign};
}

void check_jacobi(const QuiverLieAlgebra& alg) {
  int n = alg.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0 with integer coefficients
        std::map<int, int> acc;
        if (auto t = double_bracket(alg, i, j, k)) acc[t->index] += t->sign;
        if (auto t = double_bracket(alg, j, k, i)) acc[t->index] += t->sign;
        if (auto t = double_bracket(alg, k, i, j)) acc[t->index] += t->sign;
        for (const auto& [idx, coeff] : acc) {
          if (coeff != 0) {
            throw InternalError("Jacobi identity fails on basis triple (" +
                                alg.name(i) + ", " + alg.name(j) + ", " +
                                alg.name(k) + ")");
          }
        }
      }
    }
  }
}

}  // namespace

QuiverLieAlgebra build_algebra(const Quiver& q) {
  validate(q);
  if (q.arrow_count() == 0) {
    throw EmptyQuiver("the Lie algebra needs at least one arrow");
  }

  QuiverLieAlgebra alg;
  alg.quiver_ = q;
  alg.basis_ = enumerate_paths(q);
  for (int i = 0; i < alg.dim(); ++i) {
    alg.index_[alg.basis_[i].arrows] = i;
  }
  alg.grades_.resize(alg.basis_.back().length());
  for (int i = 0; i < alg.dim(); ++i) {
    alg.grades_[alg.basis_[i].length() - 1].push_back(i);
  }

  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = i + 1; j < alg.dim(); ++j) {
      auto xy = alg.concat(i, j);
      auto yx = alg.concat(j, i);
      if (xy && yx) {
        throw BothProductsNonzero("both " + alg.name(i) + "." + alg.name(j) +
                                  " and the reverse are paths; the quiver "
                                  "has a cycle");
      }
      if (xy) alg.table_[{i, j}] = BracketValue{*xy, +1};
      if (yx) alg.table_[{i, j}] = BracketValue{*yx, -1};
    }
  }

  check_jacobi(alg);
  return alg;
}

int nilpotency_step(const QuiverLieAlgebra& alg) {
  int n = alg.dim();
  std::vector<char> cur(n, 1);  // C^0 = everything
  int k = 0;
  while (true) {
    std::vector<char> next(n, 0);
    bool any = false;
    for (const auto& [key, value] : alg.table()) {
      if (cur[key.first] || cur[key.second]) {
        next[value.index] = 1;
        any = true;
      }
    }
    ++k;
    // C^k must be spanned by exactly the paths of length > k
    for (int i = 0; i < n; ++i) {
      bool expect = alg.path(i).length() > k;
      if (static_cast<bool>(next[i]) != expect) {
        throw InternalError("central series C^" + std::to_string(k) +
                            " does not match the length grading");
      }
    }
    if (!any) break;
    cur = std::move(next);
  }
  if (k != alg.max_length()) {
    throw InternalError("nilpotency step differs from the quiver length");
  }
  return k;
}

void check_graded_bracket(const QuiverLieAlgebra& alg) {
  int m = alg.max_length();
  // achieved[{li, lj}] = outputs of brackets between grades li <= lj
  std::map<std::pair<int, int>, std::set<int>> achieved;
  for (const auto& [key, value] : alg.table()) {
    int li = alg.path(key.first).length();
    int lj = alg.path(key.second).length();
    if (li > lj) std::swap(li, lj);
    if (alg.path(value.index).length() != li + lj) {
      throw GradedBracketFailure(li, lj,
                                 "bracket output leaves the expected grade");
    }
    achieved[{li, lj}].insert(value.index);
  }

  for (int li = 1; li <= m; ++li) {
    for (int lj = li; lj <= m; ++lj) {
      auto it = achieved.find({li, lj});
      if (li + lj > m) {
        if (it != achieved.end()) {
          throw GradedBracketFailure(li, lj, "nonzero bracket above grade m");
        }
        continue;
      }
      // each path of length li+lj splits at li into a witnessing bracket
      std::set<int> expected;
      for (int z : alg.grades()[li + lj - 1]) {
        expected.insert(z);
        const PathSeq& path = alg.path(z);
        PathSeq x{{path.arrows.begin(), path.arrows.begin() + li}};
        PathSeq y{{path.arrows.begin() + li, path.arrows.end()}};
        auto xi = alg.index_of(x);
        auto yi = alg.index_of(y);
        if (!xi || !yi) {
          throw GradedBracketFailure(li, lj, "split of " + alg.name(z) +
                                                 " is not a basis pair");
        }
        auto b = alg.bracket(*xi, *yi);
        if (!b || b->index != z || b->sign != +1) {
          throw GradedBracketFailure(
              li, lj, "bracket of the split of " + alg.name(z) +
                          " does not reproduce it");
        }
      }
      std::set<int> got = (it == achieved.end()) ? std::set<int>{} : it->second;
      if (got != expected) {
        throw GradedBracketFailure(li, lj, "span mismatch");
      }
    }
  }
}

void check_nice_basis(const QuiverLieAlgebra& alg) {
  int n = alg.dim();
  // condition (1): at most one nonzero output per ordered pair
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto xy = alg.concat(i, j);
      auto yx = alg.concat(j, i);
      if (xy && yx) {
        throw NiceBasisViolation(
            "pair (" + alg.name(i) + ", " + alg.name(j) +
            ") has two nonzero structure constants, outputs " +
            alg.name(*xy) + " and " + alg.name(*yx));
      }
    }
  }
  // condition (2): at most one partner j per (i, output k)
  for (int i = 0; i < n; ++i) {
    std::map<int, int> partner;  // output k -> j
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto b = alg.bracket(i, j);
      if (!b) continue;
      auto [it, inserted] = partner.insert({b->index, j});
      if (!inserted) {
        throw NiceBasisViolation("pair (" + alg.name(i) + ", output " +
                                 alg.name(b->index) + ") has two partners " +
                                 alg.name(it->second) + " and " + alg.name(j));
      }
    }
  }
}

DiagonalMap constant_map(int dim, const Rat& value) {
  DiagonalMap d;
  d.entries.assign(dim, value);
  return d;
}

DiagonalMap length_grading(const QuiverLieAlgebra& alg) {
  DiagonalMap d;
  d.entries.reserve(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    d.entries.push_back(rat(alg.path(i).length()));
  }
  return d;
}

bool is_derivation(const QuiverLieAlgebra& alg, const DiagonalMap& d) {
  if (d.dim() != alg.dim()) {
    throw DimensionMismatch("diagonal map does not match the basis");
  }
  for (const auto& [key, value] : alg.table()) {
    if (d.entries[value.index] !=
        d.entries[key.first] + d.entries[key.second]) {
      return false;
    }
  }
  return true;
}

std::vector<int> reduced_to_parent_index(const QuiverLieAlgebra& parent,
                                         const QuiverLieAlgebra& reduced) {
  // match by fully flattened arrow names; both quivers may sit anywhere in
  // a reduction chain, so their own arrow names can be composite
  std::map<std::vector<std::string>, int> parent_by_flat;
  for (int i = 0; i < parent.dim(); ++i) {
    parent_by_flat[flatten_path(parent.quiver(), parent.path(i))] = i;
  }
  std::vector<int> map(reduced.dim(), -1);
  for (int i = 0; i < reduced.dim(); ++i) {
    auto it =
        parent_by_flat.find(flatten_path(reduced.quiver(), reduced.path(i)));
    if (it == parent_by_flat.end()) {
      throw InternalError("reduced path " + reduced.name(i) +
                          " does not flatten to a parent path");
    }
    map[i] = it->second;
  }
  return map;
}

DiagonalMap extend_derivation(const QuiverLieAlgebra& parent,
                              const QuiverLieAlgebra& reduced,
                              const DiagonalMap& d_prime,
                              const std::vector<int>& starting) {
  if (!is_derivation(reduced, d_prime)) {
    throw HypothesisViolated(
        "the map to extend is not a derivation of the reduced algebra");
  }
  // commuting with Aut(Q') means, for a diagonal map, constant eigenvalues
  // on orbits of paths; constancy under a generating set is enough
  for (const ArrowPermutation& f :
       automorphism_chain(reduced.quiver()).generators) {
    for (int i = 0; i < reduced.dim(); ++i) {
      PathSeq img = apply_automorphism(reduced.quiver(), f, reduced.path(i));
      auto j = reduced.index_of(img);
      if (!j) {
        throw InternalError("automorphism image left the basis");
      }
      if (d_prime.entries[i] != d_prime.entries[*j]) {
        throw HypothesisViolated(
            "eigenvalues are not constant on Aut-orbits: " + reduced.name(i) +
            " vs " + reduced.name(*j));
      }
    }
  }

  std::vector<char> filled(parent.dim(), 0);
  DiagonalMap out = constant_map(parent.dim(), rat(0));
  for (int s : starting) {
    auto idx = parent.index_of(PathSeq{{s}});
    if (!idx) {
      throw InternalError("starting arrow missing from the parent basis");
    }
    filled[*idx] = 1;  // value stays 0 on S
  }
  auto to_parent = reduced_to_parent_index(parent, reduced);
  for (int i = 0; i < reduced.dim(); ++i) {
    if (filled[to_parent[i]]) {
      throw InternalError("extension maps two sources onto one basis path");
    }
    out.entries[to_parent[i]] = d_prime.entries[i];
    filled[to_parent[i]] = 1;
  }
  for (char f : filled) {
    if (!f) throw InternalError("extension left a basis path unassigned");
  }

  if (!is_derivation(parent, out)) {
    throw InternalError("extension by zero on S is not a derivation");
  }
  return out;
}

}  // namespace qlie
