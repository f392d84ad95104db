#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace forestbetti {

using VertexId = std::uint32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

namespace vertex_set {

bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet difference(const VertexSet& a, const VertexSet& b);
VertexSet unite(const VertexSet& a, const VertexSet& b);

}  // namespace vertex_set

// Facets listed so that facet k is a leaf of the subcollection generated by
// facets 0..k.
struct FacetOrder {
  std::vector<std::size_t> order;

  bool operator==(const FacetOrder&) const = default;
};

// Facet indices grouped by connected component. Blocks are ordered by their
// smallest facet index and each block is sorted.
struct ComponentPartition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  bool operator==(const ComponentPartition&) const = default;
};

// A simplicial complex given by its facets.
//
// Invariants maintained by every constructor:
//   * each facet is a nonempty VertexSet over the vertex table,
//   * no facet is contained in another and there are no duplicates,
//   * every vertex of the table lies in some facet (the table is compact),
//     and vertex ids follow the order in which names first appeared.
// The complex with no facets is the empty complex; it is a valid value.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Builds a complex from facets over an existing vertex table. Non-maximal
  // and duplicate facets are dropped, and unused vertices are removed from
  // the table (surviving ids keep their relative order).
  static SimplicialComplex from_ids(std::vector<std::string> names,
                                    std::vector<VertexSet> facets);

  std::size_t num_vertices() const noexcept { return names_.size(); }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  bool empty() const noexcept { return facets_.empty(); }

  const std::vector<std::string>& vertex_names() const noexcept {
    return names_;
  }
  const std::string& vertex_name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  const VertexSet& facet(std::size_t i) const;

  // Facets spelled out with vertex names, in facet order.
  std::vector<std::vector<std::string>> facet_names() const;

  // Facets sorted lexicographically. Two complexes that differ only by an
  // order-preserving relabelling of vertices share this key.
  std::vector<VertexSet> canonical_key() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> facets_;
};

// Interns vertex names in first-appearance order and keeps the
// inclusion-maximal input sets. Throws kInvalidFacet on an empty set.
SimplicialComplex normalize_facets(
    const std::vector<std::vector<std::string>>& raw);

// <F in Facets(g) | F subset of a>.
SimplicialComplex induced_subcollection(const SimplicialComplex& g,
                                        const VertexSet& a);

// Subcomplex generated by the listed facets, in the listed order.
SimplicialComplex subcollection(const SimplicialComplex& g,
                                std::span<const std::size_t> facet_indices);

SimplicialComplex remove_facet(const SimplicialComplex& g, std::size_t i);

ComponentPartition connected_components(const SimplicialComplex& g);
bool is_connected(const SimplicialComplex& g);

// Complex generated by the inclusion-minimal sets G \ F_i, G ranging over the
// other facets of the connected component of F_i. Empty when F_i is alone in
// its component.
SimplicialComplex reduced_connected_component(const SimplicialComplex& g,
                                              std::size_t i);

bool is_leaf(const SimplicialComplex& g, std::size_t i);

// A good leaf is a facet whose intersections with the other facets are
// totally ordered by inclusion. It stays a leaf in every subcollection that
// contains it.
bool is_good_leaf(const SimplicialComplex& g, std::size_t i);

VertexSet free_vertices(const SimplicialComplex& g, std::size_t i);

// Reverse of the greedy good-leaf removal order (lowest index first among
// candidates). Absent iff g is not a forest.
std::optional<FacetOrder> leaf_order(const SimplicialComplex& g);

// True iff `order` is a permutation of the facets in which every facet is a
// leaf of the prefix ending at it.
bool is_valid_leaf_order(const SimplicialComplex& g, const FacetOrder& order);

bool is_forest(const SimplicialComplex& g);

inline constexpr std::size_t kDefaultBruteForceFacetCap = 16;

// Checks every nonempty subcollection for a leaf. Throws kTooLarge above cap.
bool brute_force_is_forest(const SimplicialComplex& g,
                           std::size_t cap = kDefaultBruteForceFacetCap);

// Smallest leafless subcollection (fewest facets, then lowest facet bitmask),
// or nullopt when every subcollection has a leaf. Throws kTooLarge above cap.
std::optional<std::vector<std::size_t>> find_leafless_subcollection(
    const SimplicialComplex& g, std::size_t cap = kDefaultBruteForceFacetCap);

}  // namespace forestbetti
