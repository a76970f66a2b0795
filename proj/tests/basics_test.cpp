#include <gtest/gtest.h>

#include <vector>

#include "steiner/steiner.hpp"

using namespace steiner;

TEST(VertexSet, SortsAndRejectsDuplicates) {
  const VertexSet s{5, 0, 3};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(s.to_string(), "0,3,5");
  try {
    VertexSet{1, 2, 1};
    FAIL() << "duplicate accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_vertex);
  }
}

TEST(VertexSet, MembershipAndEditing) {
  const VertexSet s{1, 4};
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.with(2), (VertexSet{1, 2, 4}));
  EXPECT_EQ(s.with(4), s);
  EXPECT_EQ(s.without(1), (VertexSet{4}));
  EXPECT_TRUE((VertexSet{1}).is_subset_of(s));
  EXPECT_FALSE((VertexSet{2}).is_subset_of(s));
}

TEST(VertexSet, BoundsCheck) {
  const VertexSet s{0, 7};
  EXPECT_NO_THROW(s.check_bounds(8));
  EXPECT_THROW(s.check_bounds(7), Error);
}

TEST(Combinations, BinomialValues) {
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(16, 8), 12870u);
}

TEST(Combinations, VisitsEachSubsetOnceInLexOrder) {
  std::vector<std::vector<Vertex>> seen;
  for_each_combination(5, 3, [&](std::span<const Vertex> c) { seen.emplace_back(c.begin(), c.end()); });
  ASSERT_EQ(seen.size(), 10u);
  EXPECT_EQ(seen.front(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(seen.back(), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(Combinations, PoolOverload) {
  const std::vector<Vertex> pool{2, 5, 9};
  int count = 0;
  for_each_combination(std::span<const Vertex>(pool), 2, [&](std::span<const Vertex> c) {
    EXPECT_LT(c[0], c[1]);
    ++count;
  });
  EXPECT_EQ(count, 3);
  count = 0;
  for_each_combination(std::span<const Vertex>(pool), 0, [&](std::span<const Vertex> c) {
    EXPECT_TRUE(c.empty());
    ++count;
  });
  EXPECT_EQ(count, 1);
}

TEST(Graph, RejectsLoopsRepeatsAndDisconnection) {
  auto code_of = [](EdgeList list) {
    try {
      Graph::from_edges(list);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  EXPECT_EQ(code_of({3, {{0, 0}, {0, 1}, {1, 2}}}), Errc::bad_graph);
  EXPECT_EQ(code_of({3, {{0, 1}, {1, 0}, {1, 2}}}), Errc::bad_graph);
  EXPECT_EQ(code_of({4, {{0, 1}, {2, 3}}}), Errc::bad_graph);
  EXPECT_EQ(code_of({2, {{0, 2}}}), Errc::bad_graph);
}

TEST(Graph, DistancesOnCycle) {
  const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto d = c5.all_pairs_distances();
  EXPECT_EQ(d[0][2], 2);
  EXPECT_EQ(d[0][4], 1);
  EXPECT_EQ(c5.edge_count(), 5u);
  EXPECT_TRUE(c5.has_edge(4, 0));
}

TEST(Rational, FormatsAsFraction) {
  EXPECT_EQ(to_string(Rational(13)), "13/1");
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(ErrorNames, AreStable) {
  EXPECT_STREQ(to_string(Errc::not_a_tree), "NotATree");
  EXPECT_STREQ(to_string(Errc::too_large), "TooLarge");
  EXPECT_STREQ(to_string(Errc::malformed_graph6), "MalformedGraph6");
}
