#include "forestbetti/random_forest.hpp"

#include <algorithm>
#include <string>

namespace forestbetti {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chained_meets(const std::vector<VertexSet>& facets,
                   const VertexSet& candidate) {
  std::vector<VertexSet> meets;
  meets.reserve(facets.size());
  for (const auto& f : facets) {
    meets.push_back(vertex_set::intersect(f, candidate));
  }
  std::sort(meets.begin(), meets.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (std::size_t k = 1; k < meets.size(); ++k) {
    if (!vertex_set::is_subset(meets[k - 1], meets[k])) return false;
  }
  return true;
}

}  // namespace

SimplicialComplex random_forest(std::mt19937_64& rng,
                                const RandomForestOptions& options) {
  if (options.max_vertices == 0 || options.max_facets == 0) return {};
  const std::size_t target = uniform(rng, 1, options.max_facets);

  std::vector<std::string> names;
  std::vector<VertexSet> facets;
  auto fresh = [&](std::size_t count, VertexSet& into) {
    for (std::size_t k = 0; k < count; ++k) {
      into.push_back(static_cast<VertexId>(names.size()));
      names.push_back("x" + std::to_string(names.size() + 1));
    }
  };

  while (facets.size() < target && names.size() < options.max_vertices) {
    const std::size_t budget = options.max_vertices - names.size();
    const std::size_t later = target - facets.size() - 1;
    const std::size_t most = std::clamp<std::size_t>(
        budget > later ? budget - later : 1, 1, 3);

    VertexSet shared;
    if (!facets.empty() && uniform(rng, 0, 4) != 0) {
      const auto& anchor = facets[uniform(rng, 0, facets.size() - 1)];
      if (anchor.size() > 1) {
        shared = anchor;
        std::shuffle(shared.begin(), shared.end(), rng);
        shared.resize(uniform(rng, 1, anchor.size() - 1));
        std::sort(shared.begin(), shared.end());
        if (!chained_meets(facets, shared)) shared.resize(1);
      }
    }
    VertexSet facet = shared;
    fresh(uniform(rng, 1, std::min(most, budget)), facet);
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_ids(std::move(names), std::move(facets));
}

SimplicialComplex random_forest(std::uint64_t seed,
                                const RandomForestOptions& options) {
  std::mt19937_64 rng(seed);
  return random_forest(rng, options);
}

}  // namespace forestbetti
