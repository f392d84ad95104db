#include <gtest/gtest.h>

#include <random>

#include "forestbetti/error.hpp"
#include "forestbetti/random_forest.hpp"
#include "forestbetti/simplicial_complex.hpp"
#include "forestbetti/text_format.hpp"
#include "support/oracles.hpp"

namespace forestbetti {
namespace {

using testing::complex_of;

SimplicialComplex example_1_1() {
  return complex_of(
      {{"a", "b"}, {"a", "e"}, {"b", "e"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
}

SimplicialComplex path4() { return complex_of({{"1", "2"}, {"2", "3"}, {"3", "4"}}); }

VertexSet ids(const SimplicialComplex& g, std::initializer_list<const char*> names) {
  VertexSet out;
  for (const char* n : names) out.push_back(*g.find_vertex(n));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_antichain(const SimplicialComplex& g) {
  for (std::size_t a = 0; a < g.num_facets(); ++a) {
    for (std::size_t b = 0; b < g.num_facets(); ++b) {
      if (a != b && vertex_set::is_subset(g.facet(a), g.facet(b))) return false;
    }
  }
  return true;
}

TEST(NormalizeFacets, DropsSubsetsAndDuplicates) {
  auto g = complex_of({{"a", "b"}, {"b"}});
  ASSERT_EQ(g.num_facets(), 1u);
  EXPECT_EQ(g.facet_names()[0], (std::vector<std::string>{"a", "b"}));

  auto x = complex_of({{"x"}, {"x"}});
  ASSERT_EQ(x.num_facets(), 1u);
  EXPECT_EQ(x.facet_names()[0], std::vector<std::string>{"x"});
}

TEST(NormalizeFacets, KeepsTheSixEdgesOfTheCounterexample) {
  const auto g = example_1_1();
  EXPECT_EQ(g.num_facets(), 6u);
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"a", "b", "e", "c", "d"}));
}

TEST(NormalizeFacets, VertexTableFollowsFirstAppearance) {
  auto g = complex_of({{"b"}, {"a", "b"}});
  EXPECT_EQ(g.vertex_names(), (std::vector<std::string>{"b", "a"}));
}

TEST(NormalizeFacets, RejectsEmptyFacet) {
  try {
    complex_of({{"a"}, {}});
    FAIL() << "expected InvalidFacet";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidFacet);
  }
}

TEST(InducedSubcollection, FiltersFacetsInsideTheVertexSet) {
  const auto g = example_1_1();
  const auto sub = induced_subcollection(g, ids(g, {"a", "b", "e"}));
  EXPECT_TRUE(equivalent(sub, complex_of({{"a", "b"}, {"a", "e"}, {"b", "e"}})));
  EXPECT_EQ(sub.num_vertices(), 3u);

  VertexSet all(g.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  EXPECT_EQ(induced_subcollection(g, all), g);
  EXPECT_TRUE(induced_subcollection(g, {}).empty());
  EXPECT_EQ(induced_subcollection(g, {}).num_vertices(), 0u);
}

TEST(RemoveFacet, DropsExactlyOneFacet) {
  auto g = complex_of({{"1", "2"}, {"2", "3"}});
  EXPECT_TRUE(equivalent(remove_facet(g, 1), complex_of({{"1", "2"}})));
  EXPECT_TRUE(remove_facet(complex_of({{"1", "2"}}), 0).empty());

  const auto e = example_1_1();
  const auto five = remove_facet(e, 3);  // {c, d}
  EXPECT_EQ(five.num_facets(), 5u);
  EXPECT_EQ(five.num_vertices(), 5u);
  EXPECT_THROW(remove_facet(e, 6), Error);
}

TEST(ConnectedComponents, GroupsIntersectingFacets) {
  EXPECT_EQ(connected_components(complex_of({{"1", "2"}, {"2", "3"}})).size(), 1u);
  const auto two = connected_components(complex_of({{"1", "2"}, {"3", "4"}}));
  EXPECT_EQ(two, (ComponentPartition{{{0}, {1}}}));
  EXPECT_EQ(connected_components(example_1_1()).size(), 1u);
  EXPECT_EQ(connected_components(SimplicialComplex{}).size(), 0u);
}

TEST(ConnectedComponents, ChainsThroughSharedVertices) {
  const auto g = complex_of({{"a", "b"}, {"x", "y"}, {"c", "d"}, {"b", "c"}});
  EXPECT_EQ(connected_components(g), (ComponentPartition{{{0, 2, 3}, {1}}}));
}

TEST(ReducedConnectedComponent, MinimalDifferences) {
  const auto p = path4();
  const auto r = reduced_connected_component(p, 1);  // {2,3}
  EXPECT_TRUE(equivalent(r, complex_of({{"1"}, {"4"}})));

  EXPECT_TRUE(reduced_connected_component(complex_of({{"1", "2"}}), 0).empty());

  const auto g = complex_of({{"1", "2"}, {"2", "3"}, {"1", "3", "4"}});
  EXPECT_TRUE(equivalent(reduced_connected_component(g, 0), complex_of({{"3"}})));
}

TEST(ReducedConnectedComponent, IgnoresOtherComponents) {
  const auto g = complex_of({{"1", "2"}, {"2", "3"}, {"7", "8"}});
  EXPECT_TRUE(equivalent(reduced_connected_component(g, 0), complex_of({{"3"}})));
  EXPECT_TRUE(reduced_connected_component(g, 2).empty());
  EXPECT_THROW(reduced_connected_component(g, 3), Error);
}

TEST(IsLeaf, PathEndsAreLeavesMiddleIsNot) {
  const auto p = path4();
  EXPECT_TRUE(is_leaf(p, 0));
  EXPECT_FALSE(is_leaf(p, 1));
  EXPECT_TRUE(is_leaf(p, 2));
  EXPECT_TRUE(is_leaf(complex_of({{"1", "2", "3"}}), 0));
  EXPECT_THROW(is_leaf(p, 3), Error);
}

TEST(IsLeaf, TriangleHasNoLeaf) {
  const auto t = complex_of({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_FALSE(is_leaf(t, i));
}

TEST(IsGoodLeaf, ChainedIntersections) {
  // {1,2,3} meets {1,4} in {1} and {2,5} in {2}: a leaf but not a good one.
  const auto g = complex_of({{"1", "2", "3"}, {"1", "4"}, {"2", "5"}, {"1", "2", "6"}});
  EXPECT_TRUE(is_leaf(g, 3));
  EXPECT_FALSE(is_good_leaf(g, 3));
  EXPECT_TRUE(is_good_leaf(g, 1));
}

TEST(FreeVertices, VerticesInNoOtherFacet) {
  const auto g = complex_of({{"1", "2"}, {"2", "3"}});
  EXPECT_EQ(free_vertices(g, 0), ids(g, {"1"}));
  const auto s = complex_of({{"1", "2", "3"}});
  EXPECT_EQ(free_vertices(s, 0), ids(s, {"1", "2", "3"}));
  EXPECT_TRUE(free_vertices(path4(), 1).empty());
  EXPECT_THROW(free_vertices(path4(), 9), Error);
}

TEST(LeafOrder, ReversedGreedyRemoval) {
  const auto p = path4();
  const auto order = leaf_order(p);
  ASSERT_TRUE(order.has_value());
  EXPECT_TRUE(is_valid_leaf_order(p, *order));
  // Greedy strips facet 0, then 1, then 2.
  EXPECT_EQ(order->order, (std::vector<std::size_t>{2, 1, 0}));

  const auto single = leaf_order(complex_of({{"a", "b"}}));
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->order, std::vector<std::size_t>{0});

  EXPECT_FALSE(leaf_order(example_1_1()).has_value());
  EXPECT_EQ(leaf_order(SimplicialComplex{}), FacetOrder{});
}

TEST(LeafOrder, ValidatorRejectsBadOrders) {
  const auto p = path4();
  // {2,3} meets {1,2} and {3,4} in incomparable sets, so it can't come last.
  EXPECT_FALSE(is_valid_leaf_order(p, FacetOrder{{0, 2, 1}}));
  EXPECT_FALSE(is_valid_leaf_order(p, FacetOrder{{0, 1}}));
  EXPECT_FALSE(is_valid_leaf_order(p, FacetOrder{{0, 0, 1}}));
  EXPECT_TRUE(is_valid_leaf_order(p, FacetOrder{{1, 0, 2}}));
}

TEST(IsForest, Examples) {
  EXPECT_TRUE(is_forest(path4()));
  EXPECT_FALSE(is_forest(example_1_1()));
  EXPECT_TRUE(is_forest(SimplicialComplex{}));
  EXPECT_TRUE(is_forest(complex_of({{"1", "2"}, {"3", "4"}})));
}

TEST(BruteForceIsForest, Examples) {
  EXPECT_TRUE(brute_force_is_forest(complex_of({{"1", "2"}, {"3", "4"}})));
  EXPECT_FALSE(brute_force_is_forest(complex_of({{"1", "2"}, {"2", "3"}, {"1", "3"}})));
  EXPECT_TRUE(brute_force_is_forest(complex_of({{"1", "2", "3"}, {"3", "4"}, {"4", "5"}})));
  EXPECT_TRUE(brute_force_is_forest(path4()));
  EXPECT_TRUE(brute_force_is_forest(SimplicialComplex{}));
}

TEST(BruteForceIsForest, CapIsEnforced) {
  std::vector<std::vector<std::string>> facets;
  for (int k = 0; k < 17; ++k) facets.push_back({"v" + std::to_string(k)});
  const auto g = complex_of(facets);
  try {
    brute_force_is_forest(g);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_TRUE(brute_force_is_forest(g, 17));
}

TEST(FindLeaflessSubcollection, SmallestWitness) {
  const auto witness = find_leafless_subcollection(example_1_1());
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(*witness, (std::vector<std::size_t>{0, 1, 2}));  // ab, ae, be
  EXPECT_FALSE(find_leafless_subcollection(path4()).has_value());
}

TEST(SimplicialComplex, WideVertexTablesUseTheGenericPath) {
  // 70 vertices: a path of 69 edges would exceed the bitmask width.
  std::vector<std::vector<std::string>> facets;
  for (int k = 0; k + 1 < 70; ++k) {
    facets.push_back({"v" + std::to_string(k), "v" + std::to_string(k + 1)});
  }
  const auto path = complex_of(facets);
  EXPECT_TRUE(is_forest(path));
  facets.push_back({"v0", "v69"});
  EXPECT_FALSE(is_forest(complex_of(facets)));

  const auto small = complex_of({{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"},
                                 {"w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7",
                                  "w8", "w9", "w10", "w11", "w12", "w13", "w14",
                                  "w15", "w16", "w17", "w18", "w19", "w20", "w21",
                                  "w22", "w23", "w24", "w25", "w26", "w27", "w28",
                                  "w29", "w30", "w31", "w32", "w33", "w34", "w35",
                                  "w36", "w37", "w38", "w39", "w40", "w41", "w42",
                                  "w43", "w44", "w45", "w46", "w47", "w48", "w49",
                                  "w50", "w51", "w52", "w53", "w54", "w55", "w56",
                                  "w57", "w58", "w59", "w60", "w61", "w62", "w63"}});
  EXPECT_GT(small.num_vertices(), 64u);
  EXPECT_FALSE(brute_force_is_forest(small));
  EXPECT_FALSE(is_forest(small));
}

// Properties over random complexes.

TEST(ComplexProperties, GreedyMatchesBruteForceOnRandomComplexes) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = testing::random_complex(rng, 2 + trial % 6, 8);
    ASSERT_EQ(is_forest(g), brute_force_is_forest(g)) << format_complex(g);
  }
}

TEST(ComplexProperties, LeafOrderPresentIffForest) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = testing::random_complex(rng, 6, 7);
    const auto order = leaf_order(g);
    ASSERT_EQ(order.has_value(), brute_force_is_forest(g));
    if (order) {
      ASSERT_TRUE(is_valid_leaf_order(g, *order)) << format_complex(g);
    }
  }
}

TEST(ComplexProperties, LeavesHaveFreeVertices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = testing::random_complex(rng, 7, 6);
    for (std::size_t i = 0; i < g.num_facets(); ++i) {
      if (is_leaf(g, i)) {
        ASSERT_FALSE(free_vertices(g, i).empty()) << format_complex(g);
      }
    }
  }
}

TEST(ComplexProperties, DerivedComplexesOfForestsAreForests) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_forest(rng, {10, 8});
    ASSERT_TRUE(brute_force_is_forest(g));
    for (std::size_t i = 0; i < g.num_facets(); ++i) {
      const auto r = reduced_connected_component(g, i);
      ASSERT_TRUE(is_antichain(r));
      ASSERT_TRUE(brute_force_is_forest(r)) << format_complex(g);
    }
    std::uniform_int_distribution<std::uint32_t> coin(0, 1);
    VertexSet a;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (coin(rng)) a.push_back(v);
    }
    const auto induced = induced_subcollection(g, a);
    ASSERT_TRUE(is_antichain(induced));
    ASSERT_TRUE(brute_force_is_forest(induced));
  }
}

TEST(ComplexProperties, OperationsPreserveMaximality) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = testing::random_complex(rng, 6, 8);
    ASSERT_TRUE(is_antichain(g));
    for (std::size_t i = 0; i < g.num_facets(); ++i) {
      ASSERT_TRUE(is_antichain(remove_facet(g, i)));
      ASSERT_TRUE(is_antichain(reduced_connected_component(g, i)));
    }
  }
}

}  // namespace
}  // namespace forestbetti
