#pragma once

#include "qlie/soliton.hpp"

namespace qlie {

/// Walks the reduction chain of q and checks, at every level with the
/// constructed metric: Ric = -id + ext(D') + A exactly, with both ext(D')
/// and A derivations, and the restricted metric equal to the reduced
/// level's own constructed metric. Throws CheckError on any failure.
void verify_soliton_recursion(const Quiver& q);

/// The whole invariant suite for one quiver: validation, Jacobi, nice
/// basis, step and central series, graded brackets, reduction identities,
/// both Ricci routes, the four-case Ricci decomposition, the recursion
/// identity at every level, and the final certificate with an
/// Aut-invariant diagonal derivation. Throws on the first failure.
void full_verification(const Quiver& q);

}  // namespace qlie
