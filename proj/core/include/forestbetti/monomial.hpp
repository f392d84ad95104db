#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forestbetti/simplicial_complex.hpp"

namespace forestbetti {

using VariableId = std::uint32_t;

// A monomial stored sparsely as (variable, exponent) pairs sorted by variable,
// with every exponent positive. The empty monomial is 1. A monomial doubles as
// its own multidegree.
class Monomial {
 public:
  using Term = std::pair<VariableId, std::uint32_t>;

  Monomial() = default;

  // Repeated variables multiply; zero exponents are dropped.
  static Monomial from_terms(std::vector<Term> terms);
  static Monomial from_dense(std::span<const std::uint32_t> exponents);
  static Monomial squarefree(std::span<const VariableId> support);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::uint32_t exponent(VariableId v) const noexcept;
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept { return terms_.empty(); }
  bool is_squarefree() const noexcept;
  std::vector<VariableId> support() const;

  // Total order used for map keys (not a monomial order).
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Term> terms_;
};

using Multidegree = Monomial;

bool divides(const Monomial& a, const Monomial& b);
bool strictly_divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial lcm(std::span<const Monomial> ms);

// Lexicographic comparison with x_0 > x_1 > ...: at the first variable where
// the exponents differ, the larger exponent sorts first.
bool lex_before(const Monomial& a, const Monomial& b);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // Drops duplicates and generators divisible by another generator, keeping
  // survivors in first-appearance order.
  static MonomialIdeal minimalize(std::vector<std::string> variables,
                                  std::vector<Monomial> generators);

  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  const std::vector<Monomial>& generators() const noexcept {
    return generators_;
  }
  std::size_t num_generators() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_squarefree() const noexcept;
  Monomial generator_lcm() const { return lcm(generators_); }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

MonomialIdeal facet_ideal(const SimplicialComplex& g);

// Inverse of facet_ideal. Throws kNotSquarefree.
SimplicialComplex facet_complex(const MonomialIdeal& ideal);

}  // namespace forestbetti
