#include "forestbetti/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <unordered_map>

#include "forestbetti/error.hpp"
#include "union_find.hpp"

namespace forestbetti {

namespace vertex_set {

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace vertex_set

namespace {

void check_index(const SimplicialComplex& g, std::size_t i) {
  if (i >= g.num_facets()) {
    throw Error(ErrorCode::kInvalidIndex,
                "facet index " + std::to_string(i) + " out of range (" +
                    std::to_string(g.num_facets()) + " facets)");
  }
}

// Set primitives shared by the bitmask and the sorted-vector representation,
// so that the leaf tests below are written once.
struct MaskOps {
  using Set = std::uint64_t;
  static Set meet(Set a, Set b) { return a & b; }
  static Set join(Set a, Set b) { return a | b; }
  static bool subset(Set a, Set b) { return (a & ~b) == 0; }
  static std::size_t size(Set a) { return std::popcount(a); }
  static Set none() { return 0; }
};

struct VectorOps {
  using Set = VertexSet;
  static Set meet(const Set& a, const Set& b) {
    return vertex_set::intersect(a, b);
  }
  static Set join(const Set& a, const Set& b) {
    return vertex_set::unite(a, b);
  }
  static bool subset(const Set& a, const Set& b) {
    return vertex_set::is_subset(a, b);
  }
  static std::size_t size(const Set& a) { return a.size(); }
  static Set none() { return {}; }
};

std::vector<std::uint64_t> to_masks(const SimplicialComplex& g) {
  std::vector<std::uint64_t> masks;
  masks.reserve(g.num_facets());
  for (const auto& f : g.facets()) {
    std::uint64_t m = 0;
    for (VertexId v : f) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

// Leaf test of facet `f` inside the subcollection `members` (which contains f).
template <class Ops>
bool leaf_within(const std::vector<typename Ops::Set>& facets,
                 std::span<const std::size_t> members, std::size_t f) {
  if (members.size() == 1) return true;
  auto shared = Ops::none();
  for (std::size_t k : members) {
    if (k != f) shared = Ops::join(shared, Ops::meet(facets[f], facets[k]));
  }
  return std::any_of(members.begin(), members.end(), [&](std::size_t k) {
    return k != f && Ops::subset(shared, facets[k]);
  });
}

template <class Ops>
bool good_leaf_within(const std::vector<typename Ops::Set>& facets,
                      std::span<const std::size_t> members, std::size_t f) {
  std::vector<typename Ops::Set> meets;
  meets.reserve(members.size());
  for (std::size_t k : members) {
    if (k != f) meets.push_back(Ops::meet(facets[f], facets[k]));
  }
  std::sort(meets.begin(), meets.end(), [](const auto& a, const auto& b) {
    return Ops::size(a) < Ops::size(b);
  });
  for (std::size_t k = 1; k < meets.size(); ++k) {
    if (!Ops::subset(meets[k - 1], meets[k])) return false;
  }
  return true;
}

// Repeatedly strips the lowest-index good leaf. Returns the removal order, or
// nullopt when some nonempty remainder has no good leaf.
template <class Ops>
std::optional<std::vector<std::size_t>> greedy_removal(
    const std::vector<typename Ops::Set>& facets) {
  std::vector<std::size_t> remaining(facets.size());
  for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] = k;
  std::vector<std::size_t> removed;
  removed.reserve(facets.size());
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](std::size_t f) {
                             return good_leaf_within<Ops>(facets, remaining, f);
                           });
    if (it == remaining.end()) return std::nullopt;
    removed.push_back(*it);
    remaining.erase(it);
  }
  return removed;
}

std::optional<std::vector<std::size_t>> greedy_removal(
    const SimplicialComplex& g) {
  if (g.num_vertices() <= 64) return greedy_removal<MaskOps>(to_masks(g));
  return greedy_removal<VectorOps>(g.facets());
}

template <class Ops>
std::optional<std::vector<std::size_t>> leafless_search(
    const std::vector<typename Ops::Set>& facets) {
  const std::size_t q = facets.size();
  std::vector<std::size_t> members;
  members.reserve(q);
  for (std::size_t size = 1; size <= q; ++size) {
    // Gosper's hack walks the size-element subsets in increasing order.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << q;
    while (mask < limit) {
      members.clear();
      for (std::size_t k = 0; k < q; ++k) {
        if ((mask >> k) & 1U) members.push_back(k);
      }
      const bool has_leaf =
          std::any_of(members.begin(), members.end(), [&](std::size_t f) {
            return leaf_within<Ops>(facets, members, f);
          });
      if (!has_leaf) return members;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> all_indices(const SimplicialComplex& g) {
  std::vector<std::size_t> idx(g.num_facets());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  return idx;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_ids(std::vector<std::string> names,
                                              std::vector<VertexSet> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw Error(ErrorCode::kInvalidFacet, "empty facet");
    if (f.back() >= names.size()) {
      throw Error(ErrorCode::kInvalidIndex,
                  "vertex id " + std::to_string(f.back()) +
                      " outside the vertex table");
    }
  }

  std::vector<VertexSet> kept;
  kept.reserve(facets.size());
  for (std::size_t k = 0; k < facets.size(); ++k) {
    bool dominated = false;
    for (std::size_t l = 0; l < facets.size() && !dominated; ++l) {
      if (l == k) continue;
      if (facets[l] == facets[k]) {
        dominated = l < k;  // keep the first copy
      } else if (facets[k].size() < facets[l].size() &&
                 vertex_set::is_subset(facets[k], facets[l])) {
        dominated = true;
      }
    }
    if (!dominated) kept.push_back(facets[k]);
  }

  std::vector<VertexId> relabel(names.size(), 0);
  std::vector<bool> used(names.size(), false);
  for (const auto& f : kept) {
    for (VertexId v : f) used[v] = true;
  }
  SimplicialComplex out;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (!used[v]) continue;
    relabel[v] = static_cast<VertexId>(out.names_.size());
    out.names_.push_back(std::move(names[v]));
  }
  for (auto& f : kept) {
    for (VertexId& v : f) v = relabel[v];
  }
  out.facets_ = std::move(kept);
  return out;
}

const std::string& SimplicialComplex::vertex_name(VertexId v) const {
  if (v >= names_.size()) {
    throw Error(ErrorCode::kInvalidIndex,
                "vertex id " + std::to_string(v) + " out of range");
  }
  return names_[v];
}

std::optional<VertexId> SimplicialComplex::find_vertex(
    std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

const VertexSet& SimplicialComplex::facet(std::size_t i) const {
  check_index(*this, i);
  return facets_[i];
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_names() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) {
    auto& row = out.emplace_back();
    for (VertexId v : f) row.push_back(names_[v]);
  }
  return out;
}

std::vector<VertexSet> SimplicialComplex::canonical_key() const {
  auto key = facets_;
  std::sort(key.begin(), key.end());
  return key;
}

SimplicialComplex normalize_facets(
    const std::vector<std::vector<std::string>>& raw) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<VertexSet> facets;
  facets.reserve(raw.size());
  for (const auto& set : raw) {
    if (set.empty()) throw Error(ErrorCode::kInvalidFacet, "empty facet");
    auto& f = facets.emplace_back();
    for (const auto& name : set) {
      auto [it, inserted] =
          ids.try_emplace(name, static_cast<VertexId>(names.size()));
      if (inserted) names.push_back(name);
      f.push_back(it->second);
    }
  }
  return SimplicialComplex::from_ids(std::move(names), std::move(facets));
}

SimplicialComplex induced_subcollection(const SimplicialComplex& g,
                                        const VertexSet& a) {
  std::vector<VertexSet> kept;
  for (const auto& f : g.facets()) {
    if (vertex_set::is_subset(f, a)) kept.push_back(f);
  }
  return SimplicialComplex::from_ids(g.vertex_names(), std::move(kept));
}

SimplicialComplex subcollection(const SimplicialComplex& g,
                                std::span<const std::size_t> facet_indices) {
  std::vector<VertexSet> kept;
  kept.reserve(facet_indices.size());
  for (std::size_t k : facet_indices) kept.push_back(g.facet(k));
  return SimplicialComplex::from_ids(g.vertex_names(), std::move(kept));
}

SimplicialComplex remove_facet(const SimplicialComplex& g, std::size_t i) {
  check_index(g, i);
  std::vector<VertexSet> kept = g.facets();
  kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  return SimplicialComplex::from_ids(g.vertex_names(), std::move(kept));
}

ComponentPartition connected_components(const SimplicialComplex& g) {
  const std::size_t q = g.num_facets();
  detail::UnionFind uf(q);
  std::vector<std::size_t> first_facet(g.num_vertices(), q);
  for (std::size_t k = 0; k < q; ++k) {
    for (VertexId v : g.facets()[k]) {
      if (first_facet[v] == q) {
        first_facet[v] = k;
      } else {
        uf.unite(first_facet[v], k);
      }
    }
  }
  ComponentPartition out;
  std::vector<std::size_t> block_of_root(q, q);
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t root = uf.find(k);
    if (block_of_root[root] == q) {
      block_of_root[root] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.blocks[block_of_root[root]].push_back(k);
  }
  return out;
}

bool is_connected(const SimplicialComplex& g) {
  return connected_components(g).size() <= 1;
}

SimplicialComplex reduced_connected_component(const SimplicialComplex& g,
                                              std::size_t i) {
  check_index(g, i);
  const auto components = connected_components(g);
  const auto& block = *std::find_if(
      components.blocks.begin(), components.blocks.end(),
      [i](const auto& b) { return std::find(b.begin(), b.end(), i) != b.end(); });

  const VertexSet& pivot = g.facets()[i];
  std::vector<VertexSet> differences;
  for (std::size_t k : block) {
    if (k == i) continue;
    auto d = vertex_set::difference(g.facets()[k], pivot);
    if (!d.empty()) differences.push_back(std::move(d));
  }

  // Keep the inclusion-minimal differences (first copy of duplicates).
  std::vector<VertexSet> minimal;
  for (std::size_t k = 0; k < differences.size(); ++k) {
    bool dominated = false;
    for (std::size_t l = 0; l < differences.size() && !dominated; ++l) {
      if (l == k) continue;
      if (differences[l] == differences[k]) {
        dominated = l < k;
      } else if (differences[l].size() < differences[k].size() &&
                 vertex_set::is_subset(differences[l], differences[k])) {
        dominated = true;
      }
    }
    if (!dominated) minimal.push_back(differences[k]);
  }
  return SimplicialComplex::from_ids(g.vertex_names(), std::move(minimal));
}

bool is_leaf(const SimplicialComplex& g, std::size_t i) {
  check_index(g, i);
  const auto members = all_indices(g);
  return leaf_within<VectorOps>(g.facets(), members, i);
}

bool is_good_leaf(const SimplicialComplex& g, std::size_t i) {
  check_index(g, i);
  const auto members = all_indices(g);
  return good_leaf_within<VectorOps>(g.facets(), members, i);
}

VertexSet free_vertices(const SimplicialComplex& g, std::size_t i) {
  check_index(g, i);
  VertexSet out;
  for (VertexId v : g.facets()[i]) {
    bool shared = false;
    for (std::size_t k = 0; k < g.num_facets() && !shared; ++k) {
      if (k == i) continue;
      const auto& f = g.facets()[k];
      shared = std::binary_search(f.begin(), f.end(), v);
    }
    if (!shared) out.push_back(v);
  }
  return out;
}

std::optional<FacetOrder> leaf_order(const SimplicialComplex& g) {
  auto removal = greedy_removal(g);
  if (!removal) return std::nullopt;
  std::reverse(removal->begin(), removal->end());
  return FacetOrder{std::move(*removal)};
}

bool is_valid_leaf_order(const SimplicialComplex& g, const FacetOrder& order) {
  if (order.order.size() != g.num_facets()) return false;
  std::vector<bool> seen(g.num_facets(), false);
  for (std::size_t k : order.order) {
    if (k >= g.num_facets() || seen[k]) return false;
    seen[k] = true;
  }
  for (std::size_t k = 0; k < order.order.size(); ++k) {
    std::span<const std::size_t> prefix(order.order.data(), k + 1);
    if (!leaf_within<VectorOps>(g.facets(), prefix, order.order[k])) {
      return false;
    }
  }
  return true;
}

bool is_forest(const SimplicialComplex& g) {
  return greedy_removal(g).has_value();
}

std::optional<std::vector<std::size_t>> find_leafless_subcollection(
    const SimplicialComplex& g, std::size_t cap) {
  if (cap > 62) cap = 62;
  if (g.num_facets() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force forest check limited to " + std::to_string(cap) +
                    " facets, got " + std::to_string(g.num_facets()));
  }
  if (g.num_vertices() <= 64) return leafless_search<MaskOps>(to_masks(g));
  return leafless_search<VectorOps>(g.facets());
}

bool brute_force_is_forest(const SimplicialComplex& g, std::size_t cap) {
  return !find_leafless_subcollection(g, cap).has_value();
}

}  // namespace forestbetti
