#include "qlie/metric.hpp"

#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace qlie {

DiagonalMetric ones_metric(int dim) {
  DiagonalMetric g;
  g.norms_squared.assign(dim, rat(1));
  return g;
}

namespace {

void check_metric(const QuiverLieAlgebra& alg, const DiagonalMetric& g) {
  if (g.dim() != alg.dim()) {
    throw DimensionMismatch("metric has " + std::to_string(g.dim()) +
                            " entries for a basis of " +
                            std::to_string(alg.dim()));
  }
  for (int i = 0; i < g.dim(); ++i) {
    if (g.norms_squared[i] <= 0) {
      throw NonPositiveNorm("squared norm of " + alg.name(i) +
                            " is not positive");
    }
  }
}

}  // namespace

RicciResult ricci_form(const QuiverLieAlgebra& alg, const DiagonalMetric& g) {
  check_metric(alg, g);
  int n = alg.dim();
  const auto& w = g.norms_squared;

  RicciResult res;
  res.form.assign(n, std::vector<Rat>(n, rat(0)));

  // ordered bracket triples [x_u, x_v] = sign x_k, grouped by (v, k); two
  // triples in one group contribute a first-sum term to form[u1][u2]
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_mid_out;
  for (const auto& [key, value] : alg.table()) {
    by_mid_out[{key.second, value.index}].push_back({key.first, value.sign});
    by_mid_out[{key.first, value.index}].push_back({key.second, -value.sign});
  }
  for (const auto& [group, members] : by_mid_out) {
    const auto& [v, k] = group;
    for (const auto& [u1, s1] : members) {
      for (const auto& [u2, s2] : members) {
        res.form[u1][u2] -= Rat(s1 * s2) * w[k] / (2 * w[v]);
      }
    }
  }
  // second sum: only p = q = output survives; both orders of (i, j) double
  // the 1/4
  for (const auto& [key, value] : alg.table()) {
    res.form[value.index][value.index] +=
        w[value.index] * w[value.index] / (2 * w[key.first] * w[key.second]);
  }

  res.op.assign(n, std::vector<Rat>(n, rat(0)));
  bool diagonal = true;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      res.op[p][q] = res.form[p][q] / w[p];
      if (p != q && res.op[p][q] != 0) diagonal = false;
    }
  }
  if (diagonal) {
    res.diagonal.reserve(n);
    for (int p = 0; p < n; ++p) res.diagonal.push_back(res.op[p][p]);
  }
  return res;
}

std::vector<Rat> ricci_diagonal_nice(const QuiverLieAlgebra& alg,
                                     const DiagonalMetric& g) {
  check_metric(alg, g);
  const auto& w = g.norms_squared;
  std::vector<Rat> r(alg.dim(), rat(0));
  for (const auto& [key, value] : alg.table()) {
    auto [i, j] = key;
    int k = value.index;
    Rat square = w[k] / (2 * w[i] * w[j]);  // <[xb_i,xb_j],xb_k>^2 / 2
    r[i] -= square;
    r[j] -= square;
    r[k] += square;
  }
  return r;
}

Rat bracket_norm_coefficient(const QuiverLieAlgebra& alg,
                             const DiagonalMetric& g, int a, int x) {
  check_metric(alg, g);
  auto ax = alg.concat(a, x);
  if (!ax) {
    throw NotComposable(alg.name(a) + "." + alg.name(x) + " is not a path");
  }
  const auto& w = g.norms_squared;
  if (w[x] != w[*ax]) {
    throw NormMismatch("|" + alg.name(x) + "|^2 = " + rat_str(w[x]) +
                       " differs from |" + alg.name(*ax) +
                       "|^2 = " + rat_str(w[*ax]));
  }
  Rat coeff2 = w[*ax] / (w[a] * w[x]);
  if (coeff2 * w[a] != 1) {
    throw InternalError("<[ab,xb],(ax)b>^2 is not 1/|a|^2");
  }
  return coeff2;
}

DiagonalMetric restrict_metric(const QuiverLieAlgebra& parent,
                               const QuiverLieAlgebra& reduced,
                               const DiagonalMetric& g) {
  check_metric(parent, g);
  auto to_parent = reduced_to_parent_index(parent, reduced);
  DiagonalMetric out;
  out.norms_squared.reserve(reduced.dim());
  for (int i = 0; i < reduced.dim(); ++i) {
    out.norms_squared.push_back(g.norms_squared[to_parent[i]]);
  }
  return out;
}

void ricci_decomposition_check(const Quiver& q, const DiagonalMetric& g) {
  QuiverLieAlgebra alg = build_algebra(q);
  check_metric(alg, g);
  QuiverPartition part = partition(q);  // LengthOne below length 2
  QuiverLieAlgebra reduced_alg = build_algebra(part.reduced);
  DiagonalMetric g_prime = restrict_metric(alg, reduced_alg, g);

  std::vector<Rat> r = ricci_diagonal_nice(alg, g);
  std::vector<Rat> r_prime = ricci_diagonal_nice(reduced_alg, g_prime);

  auto to_parent = reduced_to_parent_index(alg, reduced_alg);
  const auto& w = g.norms_squared;

  // case (1): starting arrows
  for (int a : part.starting) {
    int xa = alg.index_of(PathSeq{{a}}).value();
    Rat rhs = rat(0);
    for (int y = 0; y < alg.dim(); ++y) {
      if (auto xy = alg.concat(xa, y)) {
        rhs -= w[*xy] / (2 * w[xa] * w[y]);
      }
    }
    if (r[xa] != rhs) {
      throw DecompositionFailure(1, alg.name(xa), rat_str(r[xa]),
                                 rat_str(rhs));
    }
  }

  std::vector<int> s_paths;  // S as parent basis indices
  for (int a : part.starting) s_paths.push_back(alg.index_of(PathSeq{{a}}).value());

  // cases (2) and (3) per block, (4) on the remainder
  for (size_t j = 0; j < part.s_blocks.size(); ++j) {
    for (const PathSeq& x : part.p1_blocks[j]) {
      int ri = reduced_alg.index_of(x).value();
      int pi = to_parent[ri];
      Rat rhs = rat(0);
      for (int sp : s_paths) {
        if (auto ax = alg.concat(sp, pi)) {
          rhs -= w[*ax] / (2 * w[sp] * w[pi]);
        }
      }
      if (r[pi] - r_prime[ri] != rhs) {
        throw DecompositionFailure(2, alg.name(pi),
                                   rat_str(r[pi] - r_prime[ri]),
                                   rat_str(rhs));
      }
    }
    for (const PathSeq& x : part.p2_blocks[j]) {
      int ri = reduced_alg.index_of(x).value();
      int pi = to_parent[ri];
      // unique factorization x = b.c with b in S
      int factorizations = 0;
      Rat rhs = rat(0);
      const PathSeq& px = alg.path(pi);
      for (int a : part.starting) {
        if (px.arrows.front() != a) continue;
        PathSeq rest{{px.arrows.begin() + 1, px.arrows.end()}};
        auto ci = alg.index_of(rest);
        if (!ci) {
          throw InternalError("tail of a P2 path is not a basis path");
        }
        ++factorizations;
        int b = alg.index_of(PathSeq{{a}}).value();
        rhs += w[pi] / (2 * w[b] * w[*ci]);
      }
      if (factorizations != 1) {
        throw InternalError("P2 path " + alg.name(pi) + " has " +
                            std::to_string(factorizations) +
                            " factorizations through S");
      }
      if (r[pi] - r_prime[ri] != rhs) {
        throw DecompositionFailure(3, alg.name(pi),
                                   rat_str(r[pi] - r_prime[ri]),
                                   rat_str(rhs));
      }
    }
  }
  for (const PathSeq& x : part.p0) {
    int ri = reduced_alg.index_of(x).value();
    int pi = to_parent[ri];
    if (r[pi] != r_prime[ri]) {
      throw DecompositionFailure(4, alg.name(pi), rat_str(r[pi]),
                                 rat_str(r_prime[ri]));
    }
  }
}

DiagonalMetric parse_metric_file(const QuiverLieAlgebra& alg,
                                 const std::string& text) {
  DiagonalMetric g = ones_metric(alg.dim());
  std::map<std::string, int> by_name;
  for (int i = 0; i < alg.dim(); ++i) by_name[alg.name(i)] = i;

  std::set<int> assigned;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  static const std::regex entry(
      R"(^\s*([A-Za-z_][A-Za-z0-9_.]*)\s*=\s*(\S+)\s*$)");
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, entry)) {
      throw SyntaxError(line_no, "expected '<path-name> = <p>/<q>'");
    }
    auto it = by_name.find(m[1].str());
    if (it == by_name.end()) {
      throw SyntaxError(line_no, "unknown path '" + m[1].str() + "'");
    }
    if (!assigned.insert(it->second).second) {
      throw SyntaxError(line_no, "duplicate entry for '" + m[1].str() + "'");
    }
    Rat value;
    try {
      value = rat_parse(m[2].str());
    } catch (const InputError& e) {
      throw SyntaxError(line_no, e.what());
    }
    if (value <= 0) {
      throw NonPositiveNorm("line " + std::to_string(line_no) + ": '" +
                            m[1].str() + "' must be positive");
    }
    g.norms_squared[it->second] = value;
  }
  return g;
}

}  // namespace qlie
