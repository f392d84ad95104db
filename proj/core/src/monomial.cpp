#include "forestbetti/monomial.hpp"

#include <algorithm>

#include "forestbetti/error.hpp"

namespace forestbetti {

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  Monomial out;
  for (const auto& [v, e] : terms) {
    if (e == 0) continue;
    if (!out.terms_.empty() && out.terms_.back().first == v) {
      out.terms_.back().second += e;
    } else {
      out.terms_.emplace_back(v, e);
    }
  }
  return out;
}

Monomial Monomial::from_dense(std::span<const std::uint32_t> exponents) {
  Monomial out;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > 0) {
      out.terms_.emplace_back(static_cast<VariableId>(v), exponents[v]);
    }
  }
  return out;
}

Monomial Monomial::squarefree(std::span<const VariableId> support) {
  std::vector<Term> terms;
  terms.reserve(support.size());
  for (VariableId v : support) terms.emplace_back(v, 1);
  auto out = from_terms(std::move(terms));
  if (!out.is_squarefree()) {
    throw Error(ErrorCode::kNotSquarefree, "repeated variable in support");
  }
  return out;
}

std::uint32_t Monomial::exponent(VariableId v) const noexcept {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), v,
      [](const Term& t, VariableId key) { return t.first < key; });
  return (it != terms_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second == 1; });
}

std::vector<VariableId> Monomial::support() const {
  std::vector<VariableId> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t j = 0;
  for (const auto& [v, e] : ta) {
    while (j < tb.size() && tb[j].first < v) ++j;
    if (j == tb.size() || tb[j].first != v || tb[j].second < e) return false;
  }
  return true;
}

bool strictly_divides(const Monomial& a, const Monomial& b) {
  return a != b && divides(a, b);
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> terms;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      terms.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      terms.push_back(tb[j++]);
    } else {
      terms.emplace_back(ta[i].first, std::max(ta[i].second, tb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial::from_terms(std::move(terms));
}

Monomial lcm(std::span<const Monomial> ms) {
  Monomial out;
  for (const auto& m : ms) out = lcm(out, m);
  return out;
}

bool lex_before(const Monomial& a, const Monomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t k = 0;
  for (; k < ta.size() && k < tb.size(); ++k) {
    if (ta[k] == tb[k]) continue;
    if (ta[k].first != tb[k].first) return ta[k].first < tb[k].first;
    return ta[k].second > tb[k].second;
  }
  return k < ta.size() && k == tb.size();
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<std::string> variables,
                                        std::vector<Monomial> generators) {
  for (const auto& g : generators) {
    if (!g.terms().empty() && g.terms().back().first >= variables.size()) {
      throw Error(ErrorCode::kInvalidIndex,
                  "generator uses a variable outside the variable table");
    }
  }
  MonomialIdeal out;
  out.variables_ = std::move(variables);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < generators.size() && !redundant; ++l) {
      if (l == k) continue;
      if (generators[l] == generators[k]) {
        redundant = l < k;
      } else {
        redundant = divides(generators[l], generators[k]);
      }
    }
    if (!redundant) out.generators_.push_back(generators[k]);
  }
  return out;
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

MonomialIdeal facet_ideal(const SimplicialComplex& g) {
  std::vector<Monomial> gens;
  gens.reserve(g.num_facets());
  for (const auto& f : g.facets()) gens.push_back(Monomial::squarefree(f));
  return MonomialIdeal::minimalize(g.vertex_names(), std::move(gens));
}

SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
  std::vector<VertexSet> facets;
  facets.reserve(ideal.num_generators());
  for (const auto& m : ideal.generators()) {
    if (!m.is_squarefree()) {
      throw Error(ErrorCode::kNotSquarefree,
                  "facet complex needs squarefree generators");
    }
    if (m.is_one()) {
      throw Error(ErrorCode::kInvalidFacet,
                  "the unit ideal has no facet complex");
    }
    facets.push_back(m.support());
  }
  return SimplicialComplex::from_ids(ideal.variables(), std::move(facets));
}

}  // namespace forestbetti
