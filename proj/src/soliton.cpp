#include "qlie/soliton.hpp"

#include "qlie/automorphism.hpp"

namespace qlie {

LevelData level_data(const QuiverPartition& part) {
  LevelData ld;
  for (size_t j = 0; j < part.target_vertices.size(); ++j) {
    int s_count = static_cast<int>(part.s_blocks[j].size());
    int p1_count = static_cast<int>(part.p1_blocks[j].size());
    LevelData::Entry e;
    e.vertex = part.target_vertices[j];
    e.s_count = s_count;
    e.p1_count = p1_count;
    e.p2_count = static_cast<int>(part.p2_blocks[j].size());
    e.n_value = rat(p1_count + s_count + 1, 2);
    ld.entries.push_back(e);
  }
  return ld;
}

DiagonalMetric construct_soliton_metric(const Quiver& q) {
  validate(q);
  int m = quiver_length(q);  // EmptyQuiver without arrows
  auto paths = enumerate_paths(q);
  if (m == 1) {
    return ones_metric(static_cast<int>(paths.size()));
  }

  QuiverPartition part = partition(q);
  LevelData ld = level_data(part);
  DiagonalMetric reduced_metric = construct_soliton_metric(part.reduced);
  auto reduced_paths = enumerate_paths(part.reduced);

  // index parent paths by flattened arrow names
  std::map<std::vector<std::string>, int> parent_index;
  for (size_t i = 0; i < paths.size(); ++i) {
    parent_index[flatten_path(q, paths[i])] = static_cast<int>(i);
  }

  DiagonalMetric g;
  g.norms_squared.assign(paths.size(), rat(0));
  std::vector<char> filled(paths.size(), 0);

  for (size_t j = 0; j < part.s_blocks.size(); ++j) {
    for (int a : part.s_blocks[j]) {
      int idx = parent_index.at(flatten_path(q, PathSeq{{a}}));
      g.norms_squared[idx] = ld.entries[j].n_value;
      filled[idx] = 1;
    }
  }
  for (size_t i = 0; i < reduced_paths.size(); ++i) {
    int idx = parent_index.at(flatten_path(part.reduced, reduced_paths[i]));
    if (filled[idx]) {
      throw InternalError("metric transfer hit a path twice");
    }
    g.norms_squared[idx] = reduced_metric.norms_squared[i];
    filled[idx] = 1;
  }
  for (char f : filled) {
    if (!f) throw InternalError("metric transfer left a path unassigned");
  }
  return g;
}

DiagonalMap a_operator(const QuiverLieAlgebra& alg, const QuiverPartition& part,
                       const LevelData& ld) {
  DiagonalMap a = constant_map(alg.dim(), rat(0));  // 0 on P0 and S-free rest
  std::map<std::vector<std::string>, int> parent_by_flat;
  for (int i = 0; i < alg.dim(); ++i) {
    parent_by_flat[flatten_path(alg.quiver(), alg.path(i))] = i;
  }
  auto to_parent = [&](const PathSeq& reduced_path) {
    auto it = parent_by_flat.find(flatten_path(part.reduced, reduced_path));
    if (it == parent_by_flat.end()) {
      throw InternalError("partition path missing from the basis");
    }
    return it->second;
  };

  for (size_t j = 0; j < ld.entries.size(); ++j) {
    const Rat two_n = 2 * ld.entries[j].n_value;
    for (int s : part.s_blocks[j]) {
      int idx = alg.index_of(PathSeq{{s}}).value();
      a.entries[idx] = 1 - rat(ld.entries[j].p1_count) / two_n;
    }
    for (const PathSeq& x : part.p1_blocks[j]) {
      a.entries[to_parent(x)] = -rat(ld.entries[j].s_count) / two_n;
    }
    for (const PathSeq& x : part.p2_blocks[j]) {
      a.entries[to_parent(x)] = 1 / two_n;
    }
  }
  return a;
}

namespace {

bool metric_aut_invariant(const QuiverLieAlgebra& alg,
                          const DiagonalMetric& g) {
  // invariance under a generating set is invariance under the group
  for (const ArrowPermutation& f :
       automorphism_chain(alg.quiver()).generators) {
    for (int i = 0; i < alg.dim(); ++i) {
      PathSeq img = apply_automorphism(alg.quiver(), f, alg.path(i));
      auto j = alg.index_of(img);
      if (!j) throw InternalError("automorphism image left the basis");
      if (g.norms_squared[i] != g.norms_squared[*j]) return false;
    }
  }
  return true;
}

}  // namespace

SolitonCertificate verify_certificate(const QuiverLieAlgebra& alg,
                                      const DiagonalMetric& g,
                                      const Quiver& q) {
  SolitonCertificate cert;
  cert.metric = g;
  cert.c = rat(-1);

  RicciResult full = ricci_form(alg, g);
  std::vector<Rat> r = ricci_diagonal_nice(alg, g);
  cert.operator_diagonal = full.operator_diagonal();
  if (cert.operator_diagonal && full.diagonal != r) {
    throw CrossCheckMismatch(
        "full-form and nice-basis Ricci routes disagree");
  }
  cert.ricci_diagonal = r;

  cert.derivation.entries.reserve(alg.dim());
  for (const Rat& rk : r) cert.derivation.entries.push_back(rk + 1);

  // residual of Ric - (c id + D), entry by entry
  cert.ric_equals_minus_id_plus_d = true;
  for (int k = 0; k < alg.dim(); ++k) {
    if (r[k] - (cert.c + cert.derivation.entries[k]) != 0) {
      cert.ric_equals_minus_id_plus_d = false;
    }
  }

  cert.d_is_derivation = is_derivation(alg, cert.derivation);
  cert.aut_invariant = metric_aut_invariant(alg, g);

  // record D = ext(D') + A when the level identity actually holds
  if (alg.max_length() >= 2) {
    try {
      QuiverPartition part = partition(q);
      LevelData ld = level_data(part);
      DiagonalMap a = a_operator(alg, part, ld);
      QuiverLieAlgebra reduced_alg = build_algebra(part.reduced);
      DiagonalMetric g_prime = restrict_metric(alg, reduced_alg, g);
      std::vector<Rat> r_prime = ricci_diagonal_nice(reduced_alg, g_prime);
      DiagonalMap d_prime;
      for (const Rat& rk : r_prime) d_prime.entries.push_back(rk + 1);
      DiagonalMap ext =
          extend_derivation(alg, reduced_alg, d_prime, part.starting);
      bool exact = true;
      for (int k = 0; k < alg.dim(); ++k) {
        if (cert.derivation.entries[k] != ext.entries[k] + a.entries[k]) {
          exact = false;
        }
      }
      if (exact) cert.decomposition = {std::move(ext), std::move(a)};
    } catch (const CheckError&) {
      // arbitrary metrics need not satisfy the extension hypotheses
    }
  }
  return cert;
}

std::optional<std::pair<Rat, DiagonalMap>> diagonal_soliton_feasibility(
    const QuiverLieAlgebra& alg, const DiagonalMetric& g) {
  RicciResult full = ricci_form(alg, g);
  if (!full.operator_diagonal()) {
    throw NonDiagonalRicci("the Ricci operator is not diagonal");
  }
  const std::vector<Rat>& r = full.diagonal;

  // d_k = r_k - c turns every derivation constraint d_k = d_i + d_j into
  // c = r_i + r_j - r_k
  std::optional<Rat> c;
  for (const auto& [key, value] : alg.table()) {
    Rat candidate = r[key.first] + r[key.second] - r[value.index];
    if (!c) {
      c = candidate;
    } else if (*c != candidate) {
      return std::nullopt;
    }
  }
  if (!c) c = rat(-1);  // abelian: underdetermined, pinned by convention

  DiagonalMap d;
  d.entries.reserve(alg.dim());
  for (const Rat& rk : r) d.entries.push_back(rk - *c);

  if (!is_derivation(alg, d)) {
    throw InternalError("feasibility solution is not a derivation");
  }
  for (int k = 0; k < alg.dim(); ++k) {
    if (r[k] != *c + d.entries[k]) {
      throw InternalError("feasibility solution violates Ric = c id + D");
    }
  }
  return std::make_pair(*c, std::move(d));
}

}  // namespace qlie
