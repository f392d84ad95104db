#include "forestbetti/taylor.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "forestbetti/error.hpp"
#include "forestbetti/sparse_rank.hpp"
#include "parallel.hpp"

namespace forestbetti {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw Error(ErrorCode::kEmptyIdeal, "the zero ideal has no Taylor simplex");
  }
  if (ideal.num_generators() == 1 && ideal.generators().front().is_one()) {
    throw Error(ErrorCode::kUnitIdeal, "the unit ideal is not proper");
  }
}

const std::vector<GeneratorSet> kNoFaces;

// Extends `face` (whose lcm is `face_lcm`) by generators with larger index,
// keeping only faces whose lcm strictly divides `target`. Preorder with
// increasing indices emits each size class in lexicographic order.
void collect_faces(const std::vector<Monomial>& gens,
                   const std::vector<std::uint32_t>& usable,
                   std::size_t start, const Monomial& target,
                   GeneratorSet& face, const Monomial& face_lcm,
                   std::vector<std::vector<GeneratorSet>>& by_size) {
  if (by_size.size() <= face.size()) by_size.resize(face.size() + 1);
  by_size[face.size()].push_back(face);
  for (std::size_t k = start; k < usable.size(); ++k) {
    Monomial next = lcm(face_lcm, gens[usable[k]]);
    if (next == target) continue;  // divides target, since gens[k] does
    face.push_back(usable[k]);
    collect_faces(gens, usable, k + 1, target, face, next, by_size);
    face.pop_back();
  }
}

}  // namespace

TaylorFaceSet TaylorFaceSet::from_faces(std::size_t num_generators,
                                        std::vector<GeneratorSet> faces) {
  TaylorFaceSet out(num_generators);
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!f.empty() && f.back() >= num_generators) {
      throw Error(ErrorCode::kInvalidFacet, "face uses an unknown generator");
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& f : faces) {
    if (out.by_size_.size() <= f.size()) out.by_size_.resize(f.size() + 1);
    out.by_size_[f.size()].push_back(std::move(f));
  }
  for (std::size_t size = 1; size < out.by_size_.size(); ++size) {
    for (const auto& f : out.by_size_[size]) {
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        GeneratorSet sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!out.contains(sub)) {
          throw Error(ErrorCode::kInvalidFacet,
                      "face family is not closed under taking subsets");
        }
      }
    }
  }
  return out;
}

const std::vector<GeneratorSet>& TaylorFaceSet::faces(int d) const {
  const int size = d + 1;
  if (size < 0 || size >= static_cast<int>(by_size_.size())) return kNoFaces;
  return by_size_[static_cast<std::size_t>(size)];
}

std::size_t TaylorFaceSet::num_faces() const noexcept {
  std::size_t n = 0;
  for (const auto& level : by_size_) n += level.size();
  return n;
}

bool TaylorFaceSet::contains(const GeneratorSet& face) const {
  if (face.size() >= by_size_.size()) return false;
  const auto& level = by_size_[face.size()];
  return std::binary_search(level.begin(), level.end(), face);
}

TaylorFaceSet taylor_subcomplex_below(const MonomialIdeal& ideal,
                                      const Monomial& m) {
  require_proper_nonzero(ideal);
  TaylorFaceSet out(ideal.num_generators());
  if (m.is_one()) return out;  // nothing strictly divides 1

  const auto& gens = ideal.generators();
  std::vector<std::uint32_t> usable;
  for (std::uint32_t k = 0; k < gens.size(); ++k) {
    if (strictly_divides(gens[k], m)) usable.push_back(k);
  }
  GeneratorSet face;
  collect_faces(gens, usable, 0, m, face, Monomial{}, out.by_size_);
  return out;
}

std::map<int, std::size_t> reduced_homology_dims(const TaylorFaceSet& faces,
                                                 const PrimeField& field) {
  std::map<int, std::size_t> dims;
  if (faces.is_void()) return dims;

  const int top = faces.dimension();
  // rank[d + 1] = rank of the boundary map out of dimension d, d >= -1.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 3, 0);
  for (int d = 0; d <= top; ++d) {
    const auto& rows = faces.faces(d - 1);
    std::vector<SparseColumn> columns;
    columns.reserve(faces.faces(d).size());
    for (const auto& face : faces.faces(d)) {
      SparseColumn column;
      column.reserve(face.size());
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        GeneratorSet sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        const auto row = static_cast<std::uint32_t>(it - rows.begin());
        const std::uint32_t sign = (drop % 2 == 0) ? 1 : field.neg(1);
        column.emplace_back(row, sign);
      }
      std::sort(column.begin(), column.end());
      columns.push_back(std::move(column));
    }
    rank[static_cast<std::size_t>(d) + 1] =
        sparse_rank(std::move(columns), field);
  }
  for (int d = -1; d <= top; ++d) {
    const std::size_t n = faces.faces(d).size();
    const std::size_t cycles = n - rank[static_cast<std::size_t>(d) + 1];
    const std::size_t boundaries =
        d + 1 <= top ? rank[static_cast<std::size_t>(d) + 2] : 0;
    if (cycles > boundaries) dims[d] = cycles - boundaries;
  }
  return dims;
}

BettiColumn multigraded_betti_oracle(const MonomialIdeal& ideal,
                                     const Monomial& m,
                                     const PrimeField& field) {
  require_proper_nonzero(ideal);
  BettiColumn out;
  Monomial below{};
  for (const auto& g : ideal.generators()) {
    if (divides(g, m)) below = lcm(below, g);
  }
  if (below != m) return out;
  for (const auto& [d, dim] :
       reduced_homology_dims(taylor_subcomplex_below(ideal, m), field)) {
    out[d + 1] = dim;
  }
  return out;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Monomial> seen;
  std::vector<Monomial> found;
  for (const auto& g : ideal.generators()) {
    const std::size_t existing = found.size();
    if (seen.insert(g).second) found.push_back(g);
    for (std::size_t k = 0; k < existing; ++k) {
      Monomial joined = lcm(found[k], g);
      if (seen.insert(joined).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return lex_before(a, b);
            });
  return found;
}

MultigradedBettiMap all_multigraded_betti(const MonomialIdeal& ideal,
                                          const PrimeField& field,
                                          const OracleOptions& options) {
  require_proper_nonzero(ideal);
  if (ideal.num_generators() > options.max_generators) {
    throw Error(ErrorCode::kTooLarge,
                "Taylor oracle limited to " +
                    std::to_string(options.max_generators) +
                    " generators, got " +
                    std::to_string(ideal.num_generators()));
  }
  const auto candidates = lcm_lattice(ideal);
  std::vector<BettiColumn> columns(candidates.size());
  detail::parallel_for(candidates.size(), options.threads, [&](std::size_t k) {
    columns[k] = multigraded_betti_oracle(ideal, candidates[k], field);
  });
  MultigradedBettiMap out;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    for (const auto& [i, value] : columns[k]) out.add(i, candidates[k], value);
  }
  return out;
}

}  // namespace forestbetti
