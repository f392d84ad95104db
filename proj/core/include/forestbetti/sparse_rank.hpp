#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "forestbetti/prime_field.hpp"

namespace forestbetti {

// Sparse column: (row, value) pairs with strictly increasing rows and
// nonzero values reduced mod p.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Rank over GF(p) of the matrix with the given columns, by column reduction
// on the lowest nonzero row.
std::size_t sparse_rank(std::vector<SparseColumn> columns,
                        const PrimeField& field);

}  // namespace forestbetti
