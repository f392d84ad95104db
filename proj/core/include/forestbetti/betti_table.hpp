#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "forestbetti/monomial.hpp"

namespace forestbetti {

// Homological degree -> value, nonzero entries only.
using BettiColumn = std::map<int, std::uint64_t>;

// Graded Betti numbers b_{i,j}: (homological degree i, standard degree j)
// -> value. Zero entries are never stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  void add(int i, int j, std::uint64_t value);
  std::uint64_t at(int i, int j) const;

  const std::map<Key, std::uint64_t>& entries() const noexcept {
    return entries_;
  }
  bool empty() const noexcept { return entries_.empty(); }

  // Values of a fixed standard degree, keyed by homological degree.
  BettiColumn degree_slice(int j) const;

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

// Multigraded Betti numbers b_{i,m}. Zero entries are never stored.
class MultigradedBettiMap {
 public:
  using Key = std::pair<int, Multidegree>;

  void add(int i, const Multidegree& m, std::uint64_t value);
  std::uint64_t at(int i, const Multidegree& m) const;

  const std::map<Key, std::uint64_t>& entries() const noexcept {
    return entries_;
  }
  bool empty() const noexcept { return entries_.empty(); }

  bool operator==(const MultigradedBettiMap&) const = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

// b_{i,j} = sum over deg(m) = j of b_{i,m}.
BettiTable graded_betti(const MultigradedBettiMap& multigraded);

// b_i = sum over j of b_{i,j}.
BettiColumn total_betti(const BettiTable& table);

// Ideal -> quotient ring: shifts homological degree up by one and adds the
// (0, 0) entry of the free module S itself.
BettiTable quotient_betti(const BettiTable& ideal_table);
MultigradedBettiMap quotient_betti(const MultigradedBettiMap& ideal_map);

// Quotient ring -> ideal, the inverse of quotient_betti.
BettiTable ideal_betti(const BettiTable& quotient_table);
MultigradedBettiMap ideal_betti(const MultigradedBettiMap& quotient_map);

}  // namespace forestbetti
