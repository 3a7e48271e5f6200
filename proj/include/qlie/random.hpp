#pragma once

#include <cstdint>
#include <random>

#include "qlie/quiver.hpp"

namespace qlie {

struct RandomQuiverParams {
  int vertices = 4;
  int arrows = 5;
};

/// Acyclic by construction: vertices v1..vN in a random topological order,
/// arrows sampled forward along it (parallel duplicates allowed).
/// Deterministic for a given generator state.
Quiver random_quiver(const RandomQuiverParams& params, std::mt19937_64& rng);

/// rng() reduced to [0, bound); deterministic across platforms.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace qlie
