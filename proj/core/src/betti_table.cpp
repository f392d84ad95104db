#include "forestbetti/betti_table.hpp"

namespace forestbetti {

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value != 0) entries_[{i, j}] += value;
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

BettiColumn BettiTable::degree_slice(int j) const {
  BettiColumn out;
  for (const auto& [key, value] : entries_) {
    if (key.second == j) out[key.first] = value;
  }
  return out;
}

void MultigradedBettiMap::add(int i, const Multidegree& m,
                              std::uint64_t value) {
  if (value != 0) entries_[{i, m}] += value;
}

std::uint64_t MultigradedBettiMap::at(int i, const Multidegree& m) const {
  auto it = entries_.find({i, m});
  return it == entries_.end() ? 0 : it->second;
}

BettiTable graded_betti(const MultigradedBettiMap& multigraded) {
  BettiTable out;
  for (const auto& [key, value] : multigraded.entries()) {
    out.add(key.first, static_cast<int>(key.second.degree()), value);
  }
  return out;
}

BettiColumn total_betti(const BettiTable& table) {
  BettiColumn out;
  for (const auto& [key, value] : table.entries()) out[key.first] += value;
  return out;
}

BettiTable quotient_betti(const BettiTable& ideal_table) {
  BettiTable out;
  out.add(0, 0, 1);
  for (const auto& [key, value] : ideal_table.entries()) {
    out.add(key.first + 1, key.second, value);
  }
  return out;
}

MultigradedBettiMap quotient_betti(const MultigradedBettiMap& ideal_map) {
  MultigradedBettiMap out;
  out.add(0, Multidegree{}, 1);
  for (const auto& [key, value] : ideal_map.entries()) {
    out.add(key.first + 1, key.second, value);
  }
  return out;
}

BettiTable ideal_betti(const BettiTable& quotient_table) {
  BettiTable out;
  for (const auto& [key, value] : quotient_table.entries()) {
    if (key.first == 0) continue;
    out.add(key.first - 1, key.second, value);
  }
  return out;
}

MultigradedBettiMap ideal_betti(const MultigradedBettiMap& quotient_map) {
  MultigradedBettiMap out;
  for (const auto& [key, value] : quotient_map.entries()) {
    if (key.first == 0) continue;
    out.add(key.first - 1, key.second, value);
  }
  return out;
}

}  // namespace forestbetti
