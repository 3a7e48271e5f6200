#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qlie/quiver.hpp"

namespace qlie {

/// Bijection of the arrow set preserving composability both ways:
/// t(x) = s(y) iff t(f(x)) = s(f(y)).
struct ArrowPermutation {
  std::vector<int> image;  // image[i] = f(arrow i)

  int degree() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  ArrowPermutation compose(const ArrowPermutation& inner) const;  // this o inner
  ArrowPermutation inverse() const;
  bool operator==(const ArrowPermutation& other) const = default;
};

ArrowPermutation identity_permutation(int degree);

bool is_automorphism(const Quiver& q, const ArrowPermutation& f);

/// All automorphisms, lexicographic by image tuple (identity first).
/// Backtracking over the composability digraph on arrows, pruned by
/// in/out composability degrees. Exhaustive; meant for desk-scale quivers.
std::vector<ArrowPermutation> automorphisms(const Quiver& q);

/// Stabilizer-chain view of Aut(Q): for each arrow i, one transversal
/// element per point of the orbit of i under the stabilizer of 0..i-1.
/// The generators generate the whole group and the order is the product
/// of the orbit sizes, so invariance of a diagonal quantity under the
/// generators is invariance under all of Aut(Q). Never enumerates the
/// group, which can be factorially large on parallel bundles.
struct AutomorphismChain {
  std::vector<ArrowPermutation> generators;  // identity excluded
  mpz_class order;
};

AutomorphismChain automorphism_chain(const Quiver& q);

/// Arrow-wise image of a path; again a path of the same length.
PathSeq apply_automorphism(const Quiver& q, const ArrowPermutation& f,
                           const PathSeq& x);

/// For a starting arrow `a` of `parent` and x in Path(Q') with
/// t(a) = s(x): the automorphism of Q' = `reduced` swapping the first
/// arrow x1 of x with the composite arrow a.x1, fixing everything else.
/// Maps x to a.x and is an involution.
ArrowPermutation swap_automorphism(const Quiver& parent, int a,
                                   const Quiver& reduced, const PathSeq& x);

/// "id", or cycles like "(c d)" on arrow names.
std::string cycle_notation(const Quiver& q, const ArrowPermutation& f);

}  // namespace qlie
