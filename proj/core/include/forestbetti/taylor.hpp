#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "forestbetti/betti_table.hpp"
#include "forestbetti/monomial.hpp"
#include "forestbetti/prime_field.hpp"

namespace forestbetti {

// Sorted list of generator indices: a face of the Taylor simplex.
using GeneratorSet = std::vector<std::uint32_t>;

// A downward-closed family of faces of the Taylor simplex on s generators.
// The void complex has no faces at all; the empty complex has only the
// empty face. The two have different reduced homology.
class TaylorFaceSet {
 public:
  explicit TaylorFaceSet(std::size_t num_generators) : s_(num_generators) {}

  // Throws kInvalidFacet if the family is not closed under subsets or a face
  // mentions a generator index >= num_generators.
  static TaylorFaceSet from_faces(std::size_t num_generators,
                                  std::vector<GeneratorSet> faces);

  std::size_t num_generators() const noexcept { return s_; }
  bool is_void() const noexcept { return by_size_.empty(); }

  // -2 for the void complex, -1 for {empty face}.
  int dimension() const noexcept {
    return static_cast<int>(by_size_.size()) - 2;
  }

  // Faces of dimension d (d + 1 elements), lexicographically sorted.
  const std::vector<GeneratorSet>& faces(int d) const;
  std::size_t num_faces() const noexcept;
  bool contains(const GeneratorSet& face) const;

  bool operator==(const TaylorFaceSet&) const = default;

 private:
  friend TaylorFaceSet taylor_subcomplex_below(const MonomialIdeal&,
                                               const Monomial&);

  std::size_t s_;
  std::vector<std::vector<GeneratorSet>> by_size_;
};

// Faces tau of the Taylor simplex with lcm(tau) strictly dividing m.
// Throws kEmptyIdeal / kUnitIdeal.
TaylorFaceSet taylor_subcomplex_below(const MonomialIdeal& ideal,
                                      const Monomial& m);

// Reduced homology dimensions over the field, including degree -1. Only
// nonzero dimensions are listed; the void complex yields an empty map.
std::map<int, std::size_t> reduced_homology_dims(const TaylorFaceSet& faces,
                                                 const PrimeField& field);

// b_{i,m}(I) = dim H~_{i-1}(Theta_{<m}) when m is the lcm of some set of
// generators, and 0 otherwise. Off the lcm lattice Theta_{<m} is a full
// simplex, except that it degenerates to {empty face} when no generator
// divides m; those m are answered with 0 directly.
BettiColumn multigraded_betti_oracle(const MonomialIdeal& ideal,
                                     const Monomial& m,
                                     const PrimeField& field);

// lcms of all nonempty subsets of generators, without repeats, ordered by
// degree and then lexicographically.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

inline constexpr std::size_t kDefaultGeneratorCap = 20;

struct OracleOptions {
  std::size_t max_generators = kDefaultGeneratorCap;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Oracle evaluated on every element of the lcm lattice.
// Throws kEmptyIdeal, kUnitIdeal, and kTooLarge above max_generators.
MultigradedBettiMap all_multigraded_betti(const MonomialIdeal& ideal,
                                          const PrimeField& field,
                                          const OracleOptions& options = {});

}  // namespace forestbetti
