#include "qlie/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qlie {

int Quiver::add_vertex(const std::string& name) {
  auto it = vertex_index_.find(name);
  if (it != vertex_index_.end()) return it->second;
  vertices_.push_back(name);
  vertex_index_[name] = vertex_count() - 1;
  return vertex_count() - 1;
}

int Quiver::add_arrow(const std::string& name, const std::string& source,
                      const std::string& target) {
  if (arrow_index_.count(name)) {
    throw DuplicateIdentifier("duplicate arrow identifier '" + name + "'");
  }
  int s = add_vertex(source);
  int t = add_vertex(target);
  arrows_.push_back(Arrow{name, s, t});
  arrow_index_[name] = arrow_count() - 1;
  return arrow_count() - 1;
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Quiver::isolated_vertices() const {
  std::vector<char> touched(vertices_.size(), 0);
  for (const Arrow& a : arrows_) {
    touched[a.source] = 1;
    touched[a.target] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return out;
}

bool Quiver::operator==(const Quiver& other) const {
  if (arrow_count() != other.arrow_count()) return false;
  for (int i = 0; i < arrow_count(); ++i) {
    const Arrow& a = arrows_[i];
    const Arrow& b = other.arrows_[i];
    if (a.name != b.name || vertices_[a.source] != other.vertices_[b.source] ||
        vertices_[a.target] != other.vertices_[b.target]) {
      return false;
    }
  }
  std::set<std::string> va(vertices_.begin(), vertices_.end());
  std::set<std::string> vb(other.vertices_.begin(), other.vertices_.end());
  return va == vb;
}

bool PathSeq::operator<(const PathSeq& other) const {
  if (arrows.size() != other.arrows.size()) {
    return arrows.size() < other.arrows.size();
  }
  return arrows < other.arrows;
}

int path_source(const Quiver& q, const PathSeq& x) {
  return q.arrow(x.arrows.front()).source;
}

int path_target(const Quiver& q, const PathSeq& x) {
  return q.arrow(x.arrows.back()).target;
}

bool is_path(const Quiver& q, const PathSeq& x) {
  if (x.arrows.empty()) return false;
  for (size_t i = 0; i + 1 < x.arrows.size(); ++i) {
    if (q.arrow(x.arrows[i]).target != q.arrow(x.arrows[i + 1]).source) {
      return false;
    }
  }
  return true;
}

std::string path_name(const Quiver& q, const PathSeq& x) {
  std::string out;
  for (size_t i = 0; i < x.arrows.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(x.arrows[i]).name;
  }
  return out;
}

std::vector<std::string> flatten_path(const Quiver& q, const PathSeq& x) {
  std::vector<std::string> out;
  for (int idx : x.arrows) {
    const std::string& name = q.arrow(idx).name;
    size_t start = 0;
    while (true) {
      size_t dot = name.find('.', start);
      if (dot == std::string::npos) {
        out.push_back(name.substr(start));
        break;
      }
      out.push_back(name.substr(start, dot - start));
      start = dot + 1;
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> arrows_by_source(const Quiver& q) {
  std::vector<std::vector<int>> out(q.vertex_count());
  for (int i = 0; i < q.arrow_count(); ++i) {
    out[q.arrow(i).source].push_back(i);
  }
  return out;
}

}  // namespace

void validate(const Quiver& q) {
  std::set<std::string> vnames(q.vertices().begin(), q.vertices().end());
  if (static_cast<int>(vnames.size()) != q.vertex_count()) {
    throw DuplicateIdentifier("duplicate vertex identifier");
  }
  std::set<std::string> anames;
  for (const Arrow& a : q.arrows()) {
    if (!anames.insert(a.name).second) {
      throw DuplicateIdentifier("duplicate arrow identifier '" + a.name + "'");
    }
    if (a.source < 0 || a.source >= q.vertex_count() || a.target < 0 ||
        a.target >= q.vertex_count()) {
      throw DanglingEndpoint("arrow '" + a.name +
                             "' references an unknown vertex");
    }
  }

  // Depth-first search over the vertex digraph; a gray target closes a
  // cycle, reported through the arrows on the current chain.
  auto out = arrows_by_source(q);
  std::vector<signed char> color(q.vertex_count(), 0);  // 0 white 1 gray 2 black
  std::vector<std::pair<int, int>> chain;               // (vertex, entering arrow)

  std::function<void(int)> dfs = [&](int u) {
    color[u] = 1;
    for (int e : out[u]) {
      int v = q.arrow(e).target;
      if (color[v] == 1) {
        std::vector<std::string> witness;
        size_t pos = 0;
        while (chain[pos].first != v) ++pos;
        for (size_t k = pos + 1; k < chain.size(); ++k) {
          witness.push_back(q.arrow(chain[k].second).name);
        }
        witness.push_back(q.arrow(e).name);
        throw CycleFound(std::move(witness));
      }
      if (color[v] == 0) {
        chain.push_back({v, e});
        dfs(v);
        chain.pop_back();
      }
    }
    color[u] = 2;
  };

  for (int u = 0; u < q.vertex_count(); ++u) {
    if (color[u] == 0) {
      chain.assign(1, {u, -1});
      dfs(u);
    }
  }
}

std::vector<PathSeq> enumerate_paths(const Quiver& q) {
  auto out = arrows_by_source(q);
  std::vector<PathSeq> all;
  std::vector<PathSeq> level;
  level.reserve(q.arrow_count());
  for (int i = 0; i < q.arrow_count(); ++i) {
    level.push_back(PathSeq{{i}});
  }
  while (!level.empty()) {
    if (level.front().length() > q.arrow_count()) {
      // acyclicity bounds path length by the arrow count
      throw InputError("path enumeration on an unvalidated cyclic quiver");
    }
    all.insert(all.end(), level.begin(), level.end());
    std::vector<PathSeq> next;
    for (const PathSeq& p : level) {
      for (int e : out[path_target(q, p)]) {
        PathSeq ext = p;
        ext.arrows.push_back(e);
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return all;
}

int quiver_length(const Quiver& q) {
  if (q.arrow_count() == 0) {
    throw EmptyQuiver("quiver length needs at least one arrow");
  }
  return enumerate_paths(q).back().length();
}

std::vector<int> starting_set(const Quiver& q) {
  auto paths = enumerate_paths(q);  // throws via quiver_length path below
  if (paths.empty()) {
    throw EmptyQuiver("starting set needs at least one arrow");
  }
  int m = paths.back().length();
  std::set<int> first;
  for (const PathSeq& p : paths) {
    if (p.length() == m) first.insert(p.arrows.front());
  }
  return std::vector<int>(first.begin(), first.end());
}

namespace {

// Paths as flattened name sequences, independent of which quiver in a
// reduction chain they live in.
std::set<std::vector<std::string>> flattened_path_set(const Quiver& q) {
  std::set<std::vector<std::string>> out;
  for (const PathSeq& p : enumerate_paths(q)) {
    out.insert(flatten_path(q, p));
  }
  return out;
}

}  // namespace

Quiver reduced_quiver(const Quiver& q) {
  int m = quiver_length(q);
  if (m < 2) {
    throw LengthOne("reduction is undefined for a quiver of length 1");
  }
  auto s_arrows = starting_set(q);
  std::vector<char> in_s(q.arrow_count(), 0);
  for (int a : s_arrows) in_s[a] = 1;

  Quiver out;
  for (const std::string& v : q.vertices()) out.add_vertex(v);
  for (int i = 0; i < q.arrow_count(); ++i) {
    if (in_s[i]) continue;
    const Arrow& a = q.arrow(i);
    out.add_arrow(a.name, q.vertex_name(a.source), q.vertex_name(a.target));
  }
  for (int ai : s_arrows) {
    const Arrow& a = q.arrow(ai);
    for (int bi = 0; bi < q.arrow_count(); ++bi) {
      const Arrow& b = q.arrow(bi);
      if (a.target != b.source) continue;
      out.add_arrow(a.name + "." + b.name, q.vertex_name(a.source),
                    q.vertex_name(b.target));
    }
  }

  // Path(Q) = S + Path(Q') and the length drops by exactly one.
  auto parent = flattened_path_set(q);
  for (int ai : s_arrows) {
    if (parent.erase(flatten_path(q, PathSeq{{ai}})) != 1) {
      throw InternalError("starting arrow missing from the parent paths");
    }
  }
  if (flattened_path_set(out) != parent) {
    throw InternalError("reduced quiver paths do not complement S");
  }
  if (quiver_length(out) != m - 1) {
    throw InternalError("reduced quiver length is not one less");
  }
  return out;
}

QuiverPartition partition(const Quiver& q) {
  QuiverPartition part;
  part.reduced = reduced_quiver(q);  // throws LengthOne below length 2
  part.starting = starting_set(q);

  std::set<int> targets;
  for (int a : part.starting) targets.insert(q.arrow(a).target);
  part.target_vertices.assign(targets.begin(), targets.end());

  auto rpaths = enumerate_paths(part.reduced);
  std::set<PathSeq> taken;  // paths of `reduced` placed in P1 or P2

  for (int vj : part.target_vertices) {
    std::vector<int> sj;
    for (int a : part.starting) {
      if (q.arrow(a).target == vj) sj.push_back(a);
    }

    std::vector<PathSeq> p1j;
    for (const PathSeq& x : rpaths) {
      if (path_source(part.reduced, x) == vj) p1j.push_back(x);
    }

    std::vector<PathSeq> p2j;
    for (int a : sj) {
      for (const PathSeq& y : p1j) {
        // a.y starts with the composite arrow of a and the first arrow of
        // y; that first arrow is never itself in S, so the composite is an
        // arrow of the reduced quiver.
        const std::string comp =
            q.arrow(a).name + "." + part.reduced.arrow(y.arrows.front()).name;
        auto ci = part.reduced.arrow_index(comp);
        if (!ci) {
          throw InternalError("composite arrow '" + comp +
                              "' missing from the reduced quiver");
        }
        PathSeq z{{*ci}};
        z.arrows.insert(z.arrows.end(), y.arrows.begin() + 1, y.arrows.end());
        p2j.push_back(std::move(z));
      }
    }
    std::sort(p2j.begin(), p2j.end());
    if (std::adjacent_find(p2j.begin(), p2j.end()) != p2j.end()) {
      throw InternalError("P2 factorization a.y is not unique");
    }

    for (const PathSeq& x : p1j) {
      if (!taken.insert(x).second) {
        throw InternalError("partition blocks overlap");
      }
    }
    for (const PathSeq& x : p2j) {
      if (!taken.insert(x).second) {
        throw InternalError("partition blocks overlap");
      }
    }

    part.s_blocks.push_back(std::move(sj));
    part.p1_blocks.push_back(std::move(p1j));
    part.p2_blocks.push_back(std::move(p2j));
  }

  for (const PathSeq& x : rpaths) {
    if (!taken.count(x)) part.p0.push_back(x);
  }
  return part;
}

}  // namespace qlie
