#include "forestbetti/sparse_rank.hpp"

#include <unordered_map>

namespace forestbetti {

namespace {

// column += factor * other
void axpy(SparseColumn& column, std::uint32_t factor, const SparseColumn& other,
          const PrimeField& field, SparseColumn& scratch) {
  scratch.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < column.size() || j < other.size()) {
    if (j == other.size() ||
        (i < column.size() && column[i].first < other[j].first)) {
      scratch.push_back(column[i++]);
    } else if (i == column.size() || other[j].first < column[i].first) {
      scratch.emplace_back(other[j].first, field.mul(factor, other[j].second));
      ++j;
    } else {
      const std::uint32_t v =
          field.add(column[i].second, field.mul(factor, other[j].second));
      if (v != 0) scratch.emplace_back(column[i].first, v);
      ++i;
      ++j;
    }
  }
  column.swap(scratch);
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseColumn> columns,
                        const PrimeField& field) {
  // Reduced columns keyed by their lowest row, normalised to pivot value 1.
  std::unordered_map<std::uint32_t, std::size_t> pivot_owner;
  SparseColumn scratch;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& column = columns[c];
    while (!column.empty()) {
      const auto [row, value] = column.back();
      auto it = pivot_owner.find(row);
      if (it == pivot_owner.end()) {
        const std::uint32_t scale = field.inv(value);
        for (auto& entry : column) entry.second = field.mul(entry.second, scale);
        pivot_owner.emplace(row, c);
        ++rank;
        break;
      }
      axpy(column, field.neg(value), columns[it->second], field, scratch);
    }
  }
  return rank;
}

}  // namespace forestbetti
