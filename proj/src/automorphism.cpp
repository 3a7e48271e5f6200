#include "qlie/automorphism.hpp"

#include <algorithm>
#include <functional>

namespace qlie {

bool ArrowPermutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (image[i] != i) return false;
  }
  return true;
}

ArrowPermutation ArrowPermutation::compose(
    const ArrowPermutation& inner) const {
  ArrowPermutation out;
  out.image.resize(degree());
  for (int i = 0; i < degree(); ++i) out.image[i] = image[inner.image[i]];
  return out;
}

ArrowPermutation ArrowPermutation::inverse() const {
  ArrowPermutation out;
  out.image.resize(degree());
  for (int i = 0; i < degree(); ++i) out.image[image[i]] = i;
  return out;
}

ArrowPermutation identity_permutation(int degree) {
  ArrowPermutation f;
  f.image.resize(degree);
  for (int i = 0; i < degree; ++i) f.image[i] = i;
  return f;
}

namespace {

// composable[i][j] = 1 iff t(i) = s(j), i.e. the sequence ij is a path
std::vector<std::vector<char>> composability(const Quiver& q) {
  int n = q.arrow_count();
  std::vector<std::vector<char>> c(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c[i][j] = (q.arrow(i).target == q.arrow(j).source) ? 1 : 0;
    }
  }
  return c;
}

struct AutSearch {
  int n;
  std::vector<std::vector<char>> c;
  std::vector<int> indeg, outdeg;

  explicit AutSearch(const Quiver& q)
      : n(q.arrow_count()), c(composability(q)), indeg(n, 0), outdeg(n, 0) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (c[i][j]) {
          ++outdeg[i];
          ++indeg[j];
        }
      }
    }
  }

  // can position `idx` map to `j`, given images 0..idx-1?
  bool consistent(const std::vector<int>& image, int idx, int j) const {
    if (indeg[idx] != indeg[j] || outdeg[idx] != outdeg[j] ||
        c[idx][idx] != c[j][j]) {
      return false;
    }
    for (int k = 0; k < idx; ++k) {
      if (c[k][idx] != c[image[k]][j] || c[idx][k] != c[j][image[k]]) {
        return false;
      }
    }
    return true;
  }

  // fills positions from..n-1 with the first completion found
  bool extend_first(std::vector<int>& image, std::vector<char>& used,
                    int from) const {
    if (from == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || !consistent(image, from, j)) continue;
      image[from] = j;
      used[j] = 1;
      if (extend_first(image, used, from + 1)) return true;
      used[j] = 0;
      image[from] = -1;
    }
    return false;
  }
};

}  // namespace

bool is_automorphism(const Quiver& q, const ArrowPermutation& f) {
  int n = q.arrow_count();
  if (f.degree() != n) return false;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (f.image[i] < 0 || f.image[i] >= n || seen[f.image[i]]) return false;
    seen[f.image[i]] = 1;
  }
  auto c = composability(q);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (c[i][j] != c[f.image[i]][f.image[j]]) return false;
    }
  }
  return true;
}

std::vector<ArrowPermutation> automorphisms(const Quiver& q) {
  AutSearch search(q);
  int n = search.n;

  std::vector<ArrowPermutation> found;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);

  std::function<void(int)> assign = [&](int i) {
    if (i == n) {
      found.push_back(ArrowPermutation{image});
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || !search.consistent(image, i, j)) continue;
      image[i] = j;
      used[j] = 1;
      assign(i + 1);
      used[j] = 0;
      image[i] = -1;
    }
  };
  assign(0);
  return found;
}

AutomorphismChain automorphism_chain(const Quiver& q) {
  AutSearch search(q);
  int n = search.n;

  AutomorphismChain chain;
  chain.order = 1;
  for (int i = 0; i < n; ++i) {
    // orbit of i under the stabilizer of 0..i-1; one transversal element
    // per point, the point i itself covered by the identity
    int orbit = 1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<int> image(n, -1);
      std::vector<char> used(n, 0);
      for (int k = 0; k < i; ++k) {
        image[k] = k;
        used[k] = 1;
      }
      if (used[j] || !search.consistent(image, i, j)) continue;
      image[i] = j;
      used[j] = 1;
      if (search.extend_first(image, used, i + 1)) {
        chain.generators.push_back(ArrowPermutation{std::move(image)});
        ++orbit;
      }
    }
    chain.order *= orbit;
  }
  return chain;
}

PathSeq apply_automorphism(const Quiver& q, const ArrowPermutation& f,
                           const PathSeq& x) {
  PathSeq out;
  out.arrows.reserve(x.arrows.size());
  for (int a : x.arrows) out.arrows.push_back(f.image.at(a));
  if (!is_path(q, out)) {
    throw InternalError("automorphism image of a path is not a path");
  }
  return out;
}

ArrowPermutation swap_automorphism(const Quiver& parent, int a,
                                   const Quiver& reduced, const PathSeq& x) {
  const Arrow& arrow_a = parent.arrow(a);
  int sx = path_source(reduced, x);
  if (reduced.vertex_name(sx) != parent.vertex_name(arrow_a.target)) {
    throw NotComposable("t(" + arrow_a.name + ") != s(" +
                        path_name(reduced, x) + ")");
  }
  int x1 = x.arrows.front();
  auto comp = reduced.arrow_index(arrow_a.name + "." +
                                  reduced.arrow(x1).name);
  if (!comp) {
    throw NotComposable("composite arrow '" + arrow_a.name + "." +
                        reduced.arrow(x1).name +
                        "' is not an arrow of the reduced quiver");
  }

  ArrowPermutation f = identity_permutation(reduced.arrow_count());
  std::swap(f.image[x1], f.image[*comp]);

  if (!is_automorphism(reduced, f)) {
    throw InternalError("swap permutation is not an automorphism");
  }
  PathSeq ax{{*comp}};
  ax.arrows.insert(ax.arrows.end(), x.arrows.begin() + 1, x.arrows.end());
  if (!(apply_automorphism(reduced, f, x) == ax)) {
    throw InternalError("swap automorphism does not map x to a.x");
  }
  return f;
}

std::string cycle_notation(const Quiver& q, const ArrowPermutation& f) {
  std::string out;
  std::vector<char> visited(f.degree(), 0);
  for (int i = 0; i < f.degree(); ++i) {
    if (visited[i] || f.image[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += q.arrow(j).name;
      visited[j] = 1;
      j = f.image[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace qlie
