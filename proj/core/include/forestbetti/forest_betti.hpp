#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

#include "forestbetti/betti_table.hpp"
#include "forestbetti/monomial.hpp"
#include "forestbetti/prime_field.hpp"
#include "forestbetti/simplicial_complex.hpp"
#include "forestbetti/taylor.hpp"

namespace forestbetti {

// Witness that a complex is a forest: a leaf order and its components.
struct ForestCertificate {
  SimplicialComplex complex;
  FacetOrder order;
  ComponentPartition components;
};

std::optional<ForestCertificate> certify_forest(const SimplicialComplex& g);

// Graded Betti tables of forests keyed by SimplicialComplex::canonical_key.
// Safe for concurrent lookups and insertions.
class BettiMemo {
 public:
  std::optional<BettiTable> find(const std::vector<VertexSet>& key) const;
  void insert(std::vector<VertexSet> key, BettiTable table);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::vector<VertexSet>, BettiTable> tables_;
};

// Graded Betti numbers of the facet ideal of a simplicial tree, by the
// leaf-order recursion
//   b_{i,j}(T) = b_{i,j}(<F_0>) + sum_{u>=1} b_{i-1, j-|F_u|}(conn-bar_{T_u}(F_u))
// with b_{-1,j} = [j == 0]. Throws kNotATree.
BettiTable tree_graded_betti(const SimplicialComplex& tree,
                             BettiMemo* memo = nullptr);

// Graded convolution of quotient-ring tables of ideals in disjoint sets of
// variables. Every input is expected to carry its (0, 0) entry.
BettiTable product_betti(std::span<const BettiTable> quotient_tables);

// Splits into components, solves each tree and multiplies the quotient
// tables. Throws kNotAForest.
BettiTable forest_graded_betti(const SimplicialComplex& g,
                               BettiMemo* memo = nullptr);

// b_{i,m} for squarefree m over the vertices of g, read off the graded table
// of the induced subcollection on the support of m.
// Throws kNotAForest, kNotSquarefree, kInvalidIndex.
BettiColumn forest_multigraded_betti(const SimplicialComplex& g,
                                     const Monomial& m,
                                     BettiMemo* memo = nullptr);

enum class CandidateMode {
  kLcmLattice,
  kAllSubsets,  // every nonempty vertex subset; limited to 12 vertices
};

struct VerifyOptions {
  bool use_oracle = true;
  CandidateMode candidates = CandidateMode::kLcmLattice;
  std::size_t max_generators = kDefaultGeneratorCap;
  unsigned threads = 0;
};

inline constexpr std::size_t kMaxExhaustiveVertices = 12;

struct MultidegreeRecord {
  Multidegree m;
  std::optional<BettiColumn> fast;
  std::optional<BettiColumn> oracle;
  bool zero_one = true;        // every value is 0 or 1
  bool concentrated = true;    // at most one nonzero homological degree
  bool agrees = true;          // fast == oracle when both are present

  bool holds() const noexcept { return zero_one && concentrated; }
};

struct TheoremReport {
  std::vector<MultidegreeRecord> records;
  bool fast_path = true;
  bool oracle = false;

  // Every value in {0, 1} and every multidegree in at most one degree.
  bool holds() const noexcept;
  bool oracle_agrees() const noexcept;
};

// Checks that multigraded Betti numbers of the facet ideal of a forest are 0
// or 1 and sit in a single homological degree, optionally against the Taylor
// oracle. Throws kNotAForest.
TheoremReport verify_main_theorem(const SimplicialComplex& g,
                                  const PrimeField& field,
                                  const VerifyOptions& options = {});

// Same checks using only the Taylor oracle; accepts any monomial ideal.
TheoremReport oracle_theorem_report(const MonomialIdeal& ideal,
                                    const PrimeField& field,
                                    const OracleOptions& options = {});

}  // namespace forestbetti
