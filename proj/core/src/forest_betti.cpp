#include "forestbetti/forest_betti.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "forestbetti/error.hpp"
#include "parallel.hpp"

namespace forestbetti {

namespace {

BettiTable forest_table(const SimplicialComplex& g, BettiMemo& memo);

// g is connected and a forest.
BettiTable tree_table(const SimplicialComplex& g, BettiMemo& memo) {
  const auto order = leaf_order(g);
  if (!order) throw Error(ErrorCode::kNotAForest, "complex is not a forest");
  const auto& seq = order->order;

  BettiTable table;
  table.add(0, static_cast<int>(g.facet(seq[0]).size()), 1);
  for (std::size_t u = 1; u < seq.size(); ++u) {
    const int leaf_size = static_cast<int>(g.facet(seq[u]).size());
    const auto prefix =
        subcollection(g, std::span<const std::size_t>(seq.data(), u + 1));
    const auto reduced = reduced_connected_component(prefix, u);
    // b_{-1,0} = 1 contributes the generator F_u itself.
    table.add(0, leaf_size, 1);
    const auto sub = forest_table(reduced, memo);
    for (const auto& [key, value] : sub.entries()) {
      table.add(key.first + 1, key.second + leaf_size, value);
    }
  }
  return table;
}

BettiTable forest_table(const SimplicialComplex& g, BettiMemo& memo) {
  if (g.empty()) return {};
  auto key = g.canonical_key();
  if (auto hit = memo.find(key)) return *hit;

  const auto components = connected_components(g);
  BettiTable table;
  if (components.size() == 1) {
    table = tree_table(g, memo);
  } else {
    std::vector<BettiTable> quotients;
    quotients.reserve(components.size());
    for (const auto& block : components.blocks) {
      quotients.push_back(quotient_betti(tree_table(subcollection(g, block), memo)));
    }
    table = ideal_betti(product_betti(quotients));
  }
  memo.insert(std::move(key), table);
  return table;
}

void check_multidegree(const SimplicialComplex& g, const Monomial& m) {
  if (!m.is_squarefree()) {
    throw Error(ErrorCode::kNotSquarefree,
                "forest multidegrees must be squarefree");
  }
  if (!m.is_one() && m.terms().back().first >= g.num_vertices()) {
    throw Error(ErrorCode::kInvalidIndex,
                "multidegree uses a variable outside the vertex table");
  }
}

// Caller guarantees g is a forest and m is a valid squarefree multidegree.
BettiColumn multigraded_unchecked(const SimplicialComplex& g,
                                  const Monomial& m, BettiMemo& memo) {
  const auto support = m.support();
  const auto induced = induced_subcollection(g, support);
  if (induced.num_vertices() != support.size()) return {};
  return forest_table(induced, memo)
      .degree_slice(static_cast<int>(support.size()));
}

void score(MultidegreeRecord& record) {
  for (const auto* column : {record.fast ? &*record.fast : nullptr,
                             record.oracle ? &*record.oracle : nullptr}) {
    if (column == nullptr) continue;
    for (const auto& [i, value] : *column) {
      if (value > 1) record.zero_one = false;
    }
    if (column->size() > 1) record.concentrated = false;
  }
  if (record.fast && record.oracle) record.agrees = *record.fast == *record.oracle;
}

std::vector<Monomial> all_vertex_subsets(std::size_t n) {
  if (n > kMaxExhaustiveVertices) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive multidegree scan limited to " +
                    std::to_string(kMaxExhaustiveVertices) + " vertices");
  }
  std::vector<Monomial> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VariableId> support;
    for (VariableId v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) support.push_back(v);
    }
    out.push_back(Monomial::squarefree(support));
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_before(a, b);
  });
  return out;
}

}  // namespace

std::optional<ForestCertificate> certify_forest(const SimplicialComplex& g) {
  auto order = leaf_order(g);
  if (!order) return std::nullopt;
  return ForestCertificate{g, std::move(*order), connected_components(g)};
}

std::optional<BettiTable> BettiMemo::find(
    const std::vector<VertexSet>& key) const {
  std::shared_lock lock(mutex_);
  auto it = tables_.find(key);
  if (it == tables_.end()) return std::nullopt;
  return it->second;
}

void BettiMemo::insert(std::vector<VertexSet> key, BettiTable table) {
  std::unique_lock lock(mutex_);
  tables_.try_emplace(std::move(key), std::move(table));
}

std::size_t BettiMemo::size() const {
  std::shared_lock lock(mutex_);
  return tables_.size();
}

BettiTable tree_graded_betti(const SimplicialComplex& tree, BettiMemo* memo) {
  if (tree.empty() || !is_connected(tree) || !is_forest(tree)) {
    throw Error(ErrorCode::kNotATree, "complex is not a simplicial tree");
  }
  BettiMemo local;
  return tree_table(tree, memo ? *memo : local);
}

BettiTable product_betti(std::span<const BettiTable> quotient_tables) {
  BettiTable acc;
  acc.add(0, 0, 1);
  for (const auto& table : quotient_tables) {
    BettiTable next;
    for (const auto& [a, x] : acc.entries()) {
      for (const auto& [b, y] : table.entries()) {
        next.add(a.first + b.first, a.second + b.second, x * y);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

BettiTable forest_graded_betti(const SimplicialComplex& g, BettiMemo* memo) {
  if (!is_forest(g)) {
    throw Error(ErrorCode::kNotAForest, "complex is not a simplicial forest");
  }
  BettiMemo local;
  return forest_table(g, memo ? *memo : local);
}

BettiColumn forest_multigraded_betti(const SimplicialComplex& g,
                                     const Monomial& m, BettiMemo* memo) {
  check_multidegree(g, m);
  if (!is_forest(g)) {
    throw Error(ErrorCode::kNotAForest, "complex is not a simplicial forest");
  }
  BettiMemo local;
  return multigraded_unchecked(g, m, memo ? *memo : local);
}

bool TheoremReport::holds() const noexcept {
  return std::all_of(records.begin(), records.end(),
                     [](const MultidegreeRecord& r) { return r.holds(); });
}

bool TheoremReport::oracle_agrees() const noexcept {
  return std::all_of(records.begin(), records.end(),
                     [](const MultidegreeRecord& r) { return r.agrees; });
}

TheoremReport verify_main_theorem(const SimplicialComplex& g,
                                  const PrimeField& field,
                                  const VerifyOptions& options) {
  if (!is_forest(g)) {
    throw Error(ErrorCode::kNotAForest, "complex is not a simplicial forest");
  }
  TheoremReport report;
  report.oracle = options.use_oracle;
  if (g.empty()) return report;

  const auto ideal = facet_ideal(g);
  if (options.use_oracle && ideal.num_generators() > options.max_generators) {
    throw Error(ErrorCode::kTooLarge,
                "Taylor oracle limited to " +
                    std::to_string(options.max_generators) + " generators");
  }
  const auto candidates = options.candidates == CandidateMode::kLcmLattice
                              ? lcm_lattice(ideal)
                              : all_vertex_subsets(g.num_vertices());

  BettiMemo memo;
  report.records.resize(candidates.size());
  detail::parallel_for(candidates.size(), options.threads, [&](std::size_t k) {
    auto& record = report.records[k];
    record.m = candidates[k];
    record.fast = multigraded_unchecked(g, record.m, memo);
    if (options.use_oracle) {
      record.oracle = multigraded_betti_oracle(ideal, record.m, field);
    }
    score(record);
  });
  return report;
}

TheoremReport oracle_theorem_report(const MonomialIdeal& ideal,
                                    const PrimeField& field,
                                    const OracleOptions& options) {
  const auto betti = all_multigraded_betti(ideal, field, options);
  TheoremReport report;
  report.fast_path = false;
  report.oracle = true;
  for (const auto& m : lcm_lattice(ideal)) {
    MultidegreeRecord record;
    record.m = m;
    BettiColumn column;
    for (const auto& [key, value] : betti.entries()) {
      if (key.second == m) column[key.first] = value;
    }
    record.oracle = std::move(column);
    score(record);
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace forestbetti
