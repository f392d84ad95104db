// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares against an independent computation or a
// literal value; nothing is skipped silently.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "forestbetti/forest_betti.hpp"
#include "forestbetti/random_forest.hpp"
#include "forestbetti/taylor.hpp"
#include "forestbetti/text_format.hpp"
#include "support/oracles.hpp"

namespace fb = forestbetti;
namespace fbt = forestbetti::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure only; later checks still run so the detail
// string names the earliest problem.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void note(const std::string& detail) {
    if (outcome_.pass) outcome_.detail = detail;
  }
  Outcome result() const { return outcome_; }

 private:
  Outcome outcome_;
};

fb::Monomial named(const fb::MonomialIdeal& ideal,
                   std::initializer_list<std::string> names) {
  std::vector<fb::VariableId> support;
  const auto& vars = ideal.variables();
  for (const auto& n : names) {
    support.push_back(static_cast<fb::VariableId>(
        std::find(vars.begin(), vars.end(), n) - vars.begin()));
  }
  std::sort(support.begin(), support.end());
  return fb::Monomial::squarefree(support);
}

// Ideals touched by criteria 1-5, re-checked by criterion 6.
std::vector<fb::MonomialIdeal> g_tested_ideals;

// The seeded forest suite shared by criteria 3, 4 and 8.
constexpr std::size_t kSuiteSize = 250;
std::vector<fb::SimplicialComplex> forest_suite() {
  std::vector<fb::SimplicialComplex> out;
  for (std::uint64_t seed = 1; seed <= kSuiteSize; ++seed) {
    out.push_back(fb::random_forest(seed, {10, 8}));
  }
  return out;
}

Outcome ac1_example_1_1() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  const auto ideal = fb::parse_ideal("ab\nae\nbe\ncd\nce\nde");
  const fb::PrimeField f(2);
  const auto abe = fb::multigraded_betti_oracle(ideal, named(ideal, {"a", "b", "e"}), f);
  const auto cde = fb::multigraded_betti_oracle(ideal, named(ideal, {"c", "d", "e"}), f);
  const auto top =
      fb::multigraded_betti_oracle(ideal, named(ideal, {"a", "b", "c", "d", "e"}), f);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  c.expect(abe == fb::BettiColumn{{1, 2}}, "b_{1,abe} != 2");
  c.expect(cde == fb::BettiColumn{{1, 2}}, "b_{1,cde} != 2");
  c.expect(top == fb::BettiColumn{{2, 1}, {3, 1}}, "b_{2,abcde}, b_{3,abcde} != 1, 1");
  c.expect(elapsed < std::chrono::seconds(1), "slower than 1 s");
  g_tested_ideals.push_back(ideal);
  c.note("b_1,abe=2 b_1,cde=2 b_2,abcde=1 b_3,abcde=1");
  return c.result();
}

Outcome ac2_figure_2() {
  Checker c;
  const auto ideal = fb::parse_ideal("x1x2\nx1x3\nx1x4\nx3x4");
  const auto t = fb::taylor_subcomplex_below(ideal, ideal.generator_lcm());
  // Generators 0..3: x1x2, x1x3, x1x4, x3x4. Filled triangle on
  // {x1x3, x1x4, x3x4} and edges from x1x2 to x1x3 and x1x4.
  const auto expected = fb::TaylorFaceSet::from_faces(
      4, {{}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
  c.expect(t == expected, "face set differs from the picture");
  c.expect(!t.contains({0, 1, 2, 3}), "tetrahedron present");

  std::vector<std::vector<std::uint32_t>> faces;
  for (int d = -1; d <= t.dimension(); ++d) {
    for (const auto& f : t.faces(d)) faces.push_back(f);
  }
  const auto dense = fbt::dense_reduced_homology(faces, 2);
  const auto sparse = fb::reduced_homology_dims(t, fb::PrimeField(2));
  c.expect(dense == std::map<int, std::size_t>{{1, 1}}, "dense H~ is not {1: 1}");
  c.expect(sparse == dense, "sparse H~ differs from dense");
  g_tested_ideals.push_back(ideal);
  c.note("11 faces, dim H~_1 = 1 (sparse and dense)");
  return c.result();
}

Outcome ac3_main_theorem(const std::vector<fb::SimplicialComplex>& suite) {
  Checker c;
  std::size_t records = 0;
  for (const auto& g : suite) {
    c.expect(g.num_vertices() <= 10 && g.num_facets() <= 8, "suite exceeds caps");
    c.expect(fb::brute_force_is_forest(g), "generator produced a non-forest");
    const auto report = fb::verify_main_theorem(g, fb::PrimeField(2));
    records += report.records.size();
    c.expect(report.holds(), "theorem violated on\n" + fb::format_complex(g));
    c.expect(report.oracle_agrees(), "fast path != oracle on\n" + fb::format_complex(g));
    for (const auto& r : report.records) {
      c.expect(r.fast.has_value() && r.oracle.has_value(), "record missing a side");
    }
    g_tested_ideals.push_back(fb::facet_ideal(g));
  }
  c.note(std::to_string(suite.size()) + " forests, " + std::to_string(records) +
         " multidegrees");
  return c.result();
}

Outcome ac4_recursion_equals_oracle(const std::vector<fb::SimplicialComplex>& suite) {
  Checker c;
  for (const auto& g : suite) {
    const auto fast = fb::forest_graded_betti(g);
    const auto oracle =
        fb::graded_betti(fb::all_multigraded_betti(fb::facet_ideal(g), fb::PrimeField(2)));
    c.expect(fast == oracle, "graded tables differ on\n" + fb::format_complex(g));
  }
  c.note(std::to_string(suite.size()) + " forests");
  return c.result();
}

Outcome ac5_product_formula() {
  Checker c;
  std::mt19937_64 rng(505);
  constexpr int kPairs = 80;
  for (int trial = 0; trial < kPairs; ++trial) {
    const auto a = fbt::random_squarefree_ideal(rng, 1 + trial % 5, 5, "x");
    const auto b = fbt::random_squarefree_ideal(rng, 1 + (trial / 5) % 5, 5, "y");
    const auto sum = fbt::disjoint_sum(a, b);
    const fb::PrimeField f(2);
    const auto ta = fb::graded_betti(fb::all_multigraded_betti(a, f));
    const auto tb = fb::graded_betti(fb::all_multigraded_betti(b, f));
    const auto oracle = fb::graded_betti(fb::all_multigraded_betti(sum, f));
    const std::vector<fb::BettiTable> quotients{fb::quotient_betti(ta),
                                                fb::quotient_betti(tb)};
    const auto product = fb::product_betti(quotients);
    c.expect(fb::ideal_betti(product) == oracle,
             "product != oracle for\n" + fb::format_ideal(sum));

    // Top grade of the product from the factors' top grades alone.
    const int qa = static_cast<int>(a.generator_lcm().degree());
    const int qb = static_cast<int>(b.generator_lcm().degree());
    fb::BettiColumn top;
    for (const auto& [u, x] : quotients[0].degree_slice(qa)) {
      for (const auto& [v, y] : quotients[1].degree_slice(qb)) top[u + v] += x * y;
    }
    c.expect(product.degree_slice(qa + qb) == top, "top-grade identity fails");
    c.expect(fb::quotient_betti(oracle).degree_slice(qa + qb) == top,
             "oracle top grade differs");
    g_tested_ideals.push_back(a);
    g_tested_ideals.push_back(b);
    g_tested_ideals.push_back(sum);
  }
  c.note(std::to_string(kPairs) + " disjoint pairs");
  return c.result();
}

Outcome ac6_vanishing() {
  Checker c;
  std::size_t checked = 0;
  for (const auto& ideal : g_tested_ideals) {
    const fb::PrimeField f(2);
    const auto top = ideal.generator_lcm();
    const auto map = fb::all_multigraded_betti(ideal, f);
    for (const auto& [key, value] : map.entries()) {
      c.expect(fb::divides(key.second, top), "entry outside the lcm");
    }
    const auto graded = fb::graded_betti(map);
    for (const auto& [key, value] : graded.entries()) {
      c.expect(key.second <= static_cast<int>(top.degree()),
               "b_{i,j} nonzero above deg lcm for\n" + fb::format_ideal(ideal));
    }
    for (const auto& g : ideal.generators()) {
      c.expect(fb::multigraded_betti_oracle(ideal, g, f) == fb::BettiColumn{{0, 1}},
               "generator column is not exactly b_0 = 1");
      c.expect(map.at(0, g) == 1, "generator missing from the map");
    }
    std::size_t degree_zero = 0;
    for (const auto& [key, value] : map.entries()) {
      if (key.first == 0) degree_zero += value;
    }
    c.expect(degree_zero == ideal.num_generators(), "b_0 != number of generators");
    ++checked;
  }
  c.note(std::to_string(checked) + " ideals");
  return c.result();
}

// All antichains of nonempty subsets of {0..n-1} with at most max_size members.
void for_each_small_complex(std::size_t n, std::size_t max_size,
                            const std::function<void(const std::vector<fb::VertexSet>&)>& visit) {
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> chosen;
  std::vector<fb::VertexSet> facets;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t next) {
    if (!chosen.empty()) visit(facets);
    if (chosen.size() == max_size) return;
    for (std::uint32_t s = next; s <= full; ++s) {
      bool comparable = false;
      for (auto t : chosen) comparable = comparable || (t & s) == t || (t & s) == s;
      if (comparable) continue;
      fb::VertexSet f;
      for (fb::VertexId v = 0; v < n; ++v) {
        if ((s >> v) & 1U) f.push_back(v);
      }
      chosen.push_back(s);
      facets.push_back(std::move(f));
      walk(s + 1);
      chosen.pop_back();
      facets.pop_back();
    }
  };
  walk(1);
}

Outcome ac7_forest_detection() {
  Checker c;
  const auto names = fbt::numbered_names(6);
  std::size_t exhaustive = 0;
  std::size_t forests = 0;
  for_each_small_complex(6, 5, [&](const std::vector<fb::VertexSet>& facets) {
    const auto g = fb::SimplicialComplex::from_ids(names, facets);
    const bool greedy = fb::is_forest(g);
    c.expect(greedy == fb::brute_force_is_forest(g),
             "disagreement on\n" + fb::format_complex(g));
    ++exhaustive;
    forests += greedy ? 1 : 0;
  });
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = fbt::random_complex(rng, 3 + trial % 7, 8);
    c.expect(fb::is_forest(g) == fb::brute_force_is_forest(g),
             "disagreement on\n" + fb::format_complex(g));
  }
  c.note(std::to_string(exhaustive) + " exhaustive (" + std::to_string(forests) +
         " forests) + 500 random");
  return c.result();
}

Outcome ac8_field_independence(const std::vector<fb::SimplicialComplex>& suite) {
  Checker c;
  for (const auto& g : suite) {
    const auto ideal = fb::facet_ideal(g);
    const auto fast = fb::forest_graded_betti(g);
    const auto base = fb::all_multigraded_betti(ideal, fb::PrimeField(2));
    for (std::uint32_t p : {3u, 5u}) {
      const fb::PrimeField f(p);
      const auto map = fb::all_multigraded_betti(ideal, f);
      c.expect(map == base, "multigraded values change over GF(" + std::to_string(p) + ")");
      c.expect(fb::graded_betti(map) == fast, "graded table differs from the recursion");
      const auto report = fb::verify_main_theorem(g, f);
      c.expect(report.holds() && report.oracle_agrees(),
               "theorem check fails over GF(" + std::to_string(p) + ")");
    }
  }
  c.note(std::to_string(suite.size()) + " forests over GF(2), GF(3), GF(5)");
  return c.result();
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const auto suite = forest_suite();
  const std::vector<Criterion> criteria{
      {"AC1", "counterexample ideal reproduces the four stated Betti numbers",
       ac1_example_1_1},
      {"AC2", "Taylor subcomplex below x1x2x3x4 matches the figure", ac2_figure_2},
      {"AC3", "main theorem on seeded random forests, fast path == oracle",
       [&] { return ac3_main_theorem(suite); }},
      {"AC4", "forest recursion == graded oracle",
       [&] { return ac4_recursion_equals_oracle(suite); }},
      {"AC5", "product formula and top-grade identity on disjoint sums",
       ac5_product_formula},
      {"AC6", "vanishing above the lcm and generator entries", ac6_vanishing},
      {"AC7", "greedy forest test == brute force", ac7_forest_detection},
      {"AC8", "field independence on forests",
       [&] { return ac8_field_independence(suite); }},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (!outcome.pass) ++failures;
    std::printf("[%s] %s %s (%lld ms): %s\n", outcome.pass ? "PASS" : "FAIL",
                criterion.id, criterion.title, static_cast<long long>(ms),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
