#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "forestbetti/simplicial_complex.hpp"

namespace forestbetti {

struct RandomForestOptions {
  std::size_t max_vertices = 10;
  std::size_t max_facets = 8;
};

// Grows a forest one facet at a time. Each new facet brings at least one
// fresh vertex and meets the existing complex inside a proper subset of one
// existing facet, chosen so that its intersections with the existing facets
// form a chain. Reversing the construction order therefore strips good
// leaves. Vertices are named x1, x2, ... in creation order.
SimplicialComplex random_forest(std::mt19937_64& rng,
                                const RandomForestOptions& options);

SimplicialComplex random_forest(std::uint64_t seed,
                                const RandomForestOptions& options);

}  // namespace forestbetti
