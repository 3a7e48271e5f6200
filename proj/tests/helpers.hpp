#pragma once

#include <random>
#include <string>
#include <vector>

#include "qlie/dsl.hpp"
#include "qlie/random.hpp"

// v1 -a-> v2 -b-> v3; the smallest quiver with a nonzero bracket
inline qlie::Quiver line2() {
  return qlie::parse("arrow a: v1 -> v2\narrow b: v2 -> v3\n");
}

// five arrows meeting at v4; 10 paths and one swap symmetry (c d)
inline qlie::Quiver merge5() {
  return qlie::parse(
      "arrow a: v1 -> v2\n"
      "arrow b: v2 -> v4\n"
      "arrow c: v3 -> v4\n"
      "arrow d: v3 -> v4\n"
      "arrow e: v4 -> v5\n");
}

// two sources feeding a two-step chain; 9 paths, grading (4, 3, 2)
inline qlie::Quiver twin3() {
  return qlie::parse(
      "arrow a: v1 -> v3\n"
      "arrow b: v2 -> v3\n"
      "arrow c: v3 -> v4\n"
      "arrow d: v4 -> v5\n");
}

inline qlie::Quiver disjoint2() {
  return qlie::parse("arrow a: v1 -> v2\narrow b: v3 -> v4\n");
}

inline qlie::Quiver single_arrow() {
  return qlie::parse("arrow a: v1 -> v2\n");
}

inline std::vector<std::string> path_names_of(const qlie::Quiver& q) {
  std::vector<std::string> out;
  for (const qlie::PathSeq& p : qlie::enumerate_paths(q)) {
    out.push_back(qlie::path_name(q, p));
  }
  return out;
}

inline qlie::Quiver sample_quiver(unsigned long long seed, int vertices,
                                  int arrows) {
  std::mt19937_64 rng(seed);
  return qlie::random_quiver({vertices, arrows}, rng);
}
