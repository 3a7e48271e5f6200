#include "qlie/random.hpp"

#include <numeric>

namespace qlie {

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  // modulo bias is irrelevant at these bounds
  return rng() % bound;
}

Quiver random_quiver(const RandomQuiverParams& params, std::mt19937_64& rng) {
  if (params.vertices < 1 || params.arrows < 1) {
    throw InputError("random quivers need at least one vertex and one arrow");
  }
  if (params.vertices < 2) {
    throw InputError("arrows need two distinct vertices in the "
                     "topological order");
  }

  std::vector<int> order(params.vertices);
  std::iota(order.begin(), order.end(), 0);
  for (int i = params.vertices - 1; i > 0; --i) {
    std::swap(order[i],
              order[static_cast<int>(bounded_rand(rng, i + 1))]);
  }

  Quiver q;
  for (int v = 0; v < params.vertices; ++v) {
    q.add_vertex("v" + std::to_string(v + 1));
  }
  for (int a = 0; a < params.arrows; ++a) {
    int i = static_cast<int>(bounded_rand(rng, params.vertices - 1));
    int j = i + 1 +
            static_cast<int>(bounded_rand(rng, params.vertices - 1 - i));
    q.add_arrow("a" + std::to_string(a + 1), "v" + std::to_string(order[i] + 1),
                "v" + std::to_string(order[j] + 1));
  }
  return q;
}

}  // namespace qlie
