#include "qlie/verify.hpp"

#include "qlie/automorphism.hpp"

namespace qlie {

void verify_soliton_recursion(const Quiver& q) {
  DiagonalMetric g = construct_soliton_metric(q);
  QuiverLieAlgebra alg = build_algebra(q);
  std::vector<Rat> r = ricci_diagonal_nice(alg, g);

  if (alg.max_length() == 1) {
    // abelian base: Ric = 0 = -id + id on the all-ones metric
    for (const Rat& rk : r) {
      if (rk != 0) throw CheckError("abelian level has nonzero Ricci");
    }
    if (!(g == ones_metric(alg.dim()))) {
      throw CheckError("abelian level metric is not all ones");
    }
    return;
  }

  QuiverPartition part = partition(q);
  LevelData ld = level_data(part);
  DiagonalMap a = a_operator(alg, part, ld);
  if (!is_derivation(alg, a)) {
    throw CheckError("A operator is not a derivation");
  }

  QuiverLieAlgebra reduced_alg = build_algebra(part.reduced);
  DiagonalMetric g_restricted = restrict_metric(alg, reduced_alg, g);
  if (!(g_restricted == construct_soliton_metric(part.reduced))) {
    throw CheckError(
        "restricted metric differs from the reduced level's construction");
  }

  std::vector<Rat> r_prime = ricci_diagonal_nice(reduced_alg, g_restricted);
  DiagonalMap d_prime;
  for (const Rat& rk : r_prime) d_prime.entries.push_back(rk + 1);
  DiagonalMap ext = extend_derivation(alg, reduced_alg, d_prime,
                                      part.starting);  // derivation by post

  for (int k = 0; k < alg.dim(); ++k) {
    if (r[k] != -1 + ext.entries[k] + a.entries[k]) {
      throw CheckError("Ric != -id + ext(D') + A at path " + alg.name(k));
    }
  }

  verify_soliton_recursion(part.reduced);
}

void full_verification(const Quiver& q) {
  validate(q);
  if (q.arrow_count() == 0) {
    throw EmptyQuiver("nothing to verify on an empty quiver");
  }

  QuiverLieAlgebra alg = build_algebra(q);  // Jacobi checked inside
  check_nice_basis(alg);

  int m = quiver_length(q);
  if (nilpotency_step(alg) != m) {
    throw CheckError("nilpotency step differs from the quiver length");
  }
  check_graded_bracket(alg);

  if (m >= 2) {
    reduced_quiver(q);  // Path(Q) = S + Path(Q'), length m-1 checked inside
  }

  DiagonalMetric g = construct_soliton_metric(q);
  RicciResult full = ricci_form(alg, g);
  if (!full.operator_diagonal()) {
    throw CheckError("Ricci operator has a nonzero off-diagonal entry");
  }
  if (full.diagonal != ricci_diagonal_nice(alg, g)) {
    throw CrossCheckMismatch("the two Ricci routes disagree");
  }

  if (m >= 2) {
    ricci_decomposition_check(q, g);
  }
  verify_soliton_recursion(q);

  SolitonCertificate cert = verify_certificate(alg, g, q);
  if (!cert.all_checks()) {
    throw CheckError("constructed metric failed a certificate check");
  }
  if (m >= 2 && !cert.decomposition) {
    throw CheckError("certificate is missing the D = ext(D') + A split");
  }

  // D itself must be constant on Aut(Q)-orbits
  for (const ArrowPermutation& f : automorphism_chain(q).generators) {
    for (int i = 0; i < alg.dim(); ++i) {
      int j = alg.index_of(apply_automorphism(q, f, alg.path(i))).value();
      if (cert.derivation.entries[i] != cert.derivation.entries[j]) {
        throw CheckError("derivation is not Aut-invariant");
      }
    }
  }

  auto feasible = diagonal_soliton_feasibility(alg, g);
  if (!feasible || feasible->first != -1 ||
      !(feasible->second == cert.derivation)) {
    throw CheckError("feasibility solver disagrees with the certificate");
  }
}

}  // namespace qlie
