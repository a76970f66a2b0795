#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace steiner;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;
}

// Every ascending part vector with at least two parts and total <= max_total.
void part_vectors(int max_total, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  const int used = std::accumulate(current.begin(), current.end(), 0);
  if (current.size() >= 2) out.push_back(current);
  for (int p = current.empty() ? 1 : current.back(); used + p <= max_total; ++p) {
    current.push_back(p);
    part_vectors(max_total, current, out);
    current.pop_back();
  }
}

}  // namespace

TEST(FamilySpec, ParseAndPrint) {
  for (const char* text : {"complete:n=5", "path:n=7", "multipartite:parts=2+3+3", "star:m=5", "starlike:m=3,l=2",
                           "p2ab:l=2,a=2,b=2,x=3", "p3ab:l=3,a=2,b=2,x=2", "plab:l=5,a=1,b=2,x=2"})
    EXPECT_EQ(FamilySpec::parse(text).to_string(), text);
  EXPECT_EQ(FamilySpec::parse("p2ab:a=2,b=2,x=3").to_string(), "p2ab:l=2,a=2,b=2,x=3");
  EXPECT_EQ(FamilySpec::parse("multipartite:parts=3+2").to_string(), "multipartite:parts=2+3");
}

TEST(FamilySpec, RejectsMalformed) {
  for (const char* text : {"", "path", "path:n=0", "path:n=x", "cycle:n=5", "multipartite:parts=4", "star:m=-1",
                           "p2ab:l=3,a=1,b=1,x=1", "starlike:m=2", "path:n=3,n=4"})
    EXPECT_EQ(error_of([&] { FamilySpec::parse(text); }), Errc::bad_spec) << text;
}

TEST(FamilySpec, OrderMatchesGenerator) {
  const auto spec = FamilySpec::p_l_abx_tree(4, 2, 3, 2);
  EXPECT_EQ(spec.order(), 4 + 5 * 2);
  EXPECT_EQ(generate_tree(spec).order(), 14u);
}

TEST(Generate, Examples) {
  const Tree broom = generate_tree(FamilySpec::parse("p2ab:l=2,a=2,b=2,x=3"));
  EXPECT_EQ(broom.order(), 14u);
  EXPECT_EQ(center_profile(broom).diameter, 7);

  const Tree spider = generate_tree(FamilySpec::starlike_tree(3, 2));
  EXPECT_EQ(spider.leaves().size(), 3u);
  int branching = 0;
  for (Vertex v = 0; v < spider.order(); ++v) branching += spider.degree(v) >= 3;
  EXPECT_EQ(branching, 1);

  const Tree star = generate_tree(FamilySpec::star_graph(5));
  EXPECT_EQ(star.order(), 6u);
  EXPECT_EQ(star.degree(0), 5u);
}

TEST(Generate, Labelings) {
  const Tree broom = generate_tree(FamilySpec::p_l_abx_tree(3, 1, 2, 2));
  EXPECT_EQ(distance(broom, 0, 1), 1);
  EXPECT_EQ(distance(broom, 1, 2), 1);
  EXPECT_EQ(distance(broom, 0, 4), 2);
  EXPECT_EQ(distance(broom, 2, 6), 2);
  EXPECT_EQ(distance(broom, 2, 8), 2);
  const Graph k23 = generate_graph(FamilySpec::multipartite_graph({2, 3}));
  EXPECT_FALSE(k23.has_edge(0, 1));
  EXPECT_FALSE(k23.has_edge(2, 4));
  EXPECT_TRUE(k23.has_edge(1, 2));
  EXPECT_EQ(generate_graph(FamilySpec::complete_graph(5)).edge_count(), 10u);
  EXPECT_THROW(generate_tree(FamilySpec::complete_graph(4)), Error);
}

TEST(Formulas, Examples) {
  EXPECT_EQ(sd_k_formula(FamilySpec::complete_graph(8), 5), 4);
  EXPECT_EQ(sd_k_formula(FamilySpec::path_graph(10), 4), 9);
  EXPECT_EQ(sd_k_formula(FamilySpec::multipartite_graph({2, 3}), 3), 3);
  EXPECT_EQ(sr_kk_formula(FamilySpec::path_graph(7), 4, 3), 4);
  EXPECT_EQ(sr_kk_formula(FamilySpec::path_graph(9), 6, 2), 8);
  EXPECT_EQ(sr_kk_formula(FamilySpec::multipartite_graph({3, 3, 3}), 4, 1), 3);
}

TEST(Formulas, RejectOutOfRange) {
  EXPECT_EQ(error_of([] { sd_k_formula(FamilySpec::path_graph(5), 1); }), Errc::bad_k);
  EXPECT_EQ(error_of([] { sd_k_formula(FamilySpec::path_graph(5), 6); }), Errc::bad_k);
  EXPECT_EQ(error_of([] { sr_kk_formula(FamilySpec::path_graph(5), 3, 4); }), Errc::bad_k);
  EXPECT_EQ(error_of([] { sd_k_formula(FamilySpec::star_graph(5), 3); }), Errc::unsupported_kind);
}

TEST(Formulas, PathParitySplitAgrees) {
  for (int n = 2; n <= 30; ++n)
    for (int kp = 1; kp + 1 <= n; ++kp) {
      const int split = n % 2 == 1 ? kp / 2 + (n - 1) / 2 : (kp - 1) / 2 + n / 2;  // ceil((k'-1)/2), ceil((k'-2)/2)
      EXPECT_EQ(sr_kk_formula(FamilySpec::path_graph(n), kp + 1, kp), split) << n << " " << kp;
    }
}

TEST(Formulas, AgreeWithOracle) {
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 7; ++n) specs.push_back(FamilySpec::complete_graph(n));
  for (int n = 2; n <= 10; ++n) specs.push_back(FamilySpec::path_graph(n));
  std::vector<std::vector<int>> vectors;
  std::vector<int> current;
  part_vectors(8, current, vectors);
  for (auto& v : vectors) specs.push_back(FamilySpec::multipartite_graph(v));
  for (const auto& spec : specs) {
    const Graph g = generate_graph(spec);
    for (int k = 2; k <= spec.order(); ++k) {
      ASSERT_EQ(sd_k_formula(spec, k), brute_sd_k(g, k).value) << spec.to_string() << " k=" << k;
      for (int kp = 1; kp <= k; ++kp)
        ASSERT_EQ(sr_kk_formula(spec, k, kp), brute_sr_kk(g, k, kp).value) << spec.to_string() << " k=" << k << " k'=" << kp;
    }
  }
}

TEST(Bounds, Examples) {
  EXPECT_EQ(bound_value(BoundKind::thm_k2, 4, 2, 7), Rational(13));
  EXPECT_EQ(bound_value(BoundKind::thm_k3, 4, 3, 4), Rational(10));
  for (int s = 1; s <= 9; ++s) {
    EXPECT_EQ(bound_value(BoundKind::conjecture, 5, 1, s), Rational(5, 4) * s);
    EXPECT_EQ(bound_value(BoundKind::conjecture, 5, 1, s), bound_value(BoundKind::thm34, 5, 1, s));
  }
  EXPECT_EQ(bound_value(BoundKind::tree_k1, 3, 1, 2), Rational(3));
  EXPECT_EQ(bound_value(BoundKind::general_hos, 3, 1, 5), Rational(8, 5) * 5);
  EXPECT_EQ(bound_value(BoundKind::general_reiswig, 5, 1, 6), Rational(8));
  EXPECT_EQ(to_string(bound_value(BoundKind::thm34, 5, 2, 4)), "20/3");
}

TEST(Bounds, ConjectureReducesToKnownCases) {
  for (int k = 3; k <= 12; ++k)
    for (int s = 0; s <= 20; ++s) {
      EXPECT_EQ(bound_value(BoundKind::conjecture, k, 2, s), bound_value(BoundKind::thm_k2, k, 2, s));
      if (k >= 4) {
        EXPECT_EQ(bound_value(BoundKind::conjecture, k, 3, s), bound_value(BoundKind::thm_k3, k, 3, s));
      }
    }
}

TEST(Bounds, HypothesesEnforced) {
  EXPECT_EQ(error_of([] { bound_value(BoundKind::thm_k2, 2, 2, 1); }), Errc::bad_k);
  EXPECT_EQ(error_of([] { bound_value(BoundKind::thm_k3, 3, 3, 1); }), Errc::bad_k);
  EXPECT_EQ(error_of([] { bound_value(BoundKind::thm34, 4, 4, 1); }), Errc::bad_k);
  EXPECT_EQ(error_of([] { bound_value(BoundKind::general_reiswig, 4, 1, 1); }), Errc::bad_k);
  EXPECT_EQ(parse_bound_kind("thm_k3"), BoundKind::thm_k3);
  EXPECT_EQ(error_of([] { parse_bound_kind("nope"); }), Errc::bad_spec);
}

TEST(EqualityFamilies, Star) {
  for (int m = 3; m <= 8; ++m)
    for (int k = 2; k <= m; ++k) {
      const Tree t = generate_tree(FamilySpec::star_graph(m));
      EXPECT_EQ(Rational(sd_k(t, k).value), bound_value(BoundKind::tree_k1, k, 1, sr_k(t, k).value)) << m << " " << k;
    }
}

TEST(EqualityFamilies, Starlike) {
  for (int m = 3; m <= 5; ++m)
    for (int l = 1; l <= 3; ++l) {
      const Tree t = generate_tree(FamilySpec::starlike_tree(m, l));
      for (int k = 3; k <= m; ++k)
        for (int kp = 1; k - kp >= 2; ++kp)
          EXPECT_EQ(Rational(sd_k(t, k).value), Rational(k, k - kp) * sd_k(t, k - kp).value) << m << " " << l << " " << k;
    }
}

TEST(EqualityFamilies, DoubleBrooms) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int x = 1; x <= 3; ++x)
        for (int k = 4; k <= a + b; ++k) {
          const Tree t2 = generate_tree(FamilySpec::p_l_abx_tree(2, a, b, x));
          EXPECT_EQ(sd_k(t2, k).value, k * x + 1);
          EXPECT_EQ(Rational(sd_k(t2, k).value), bound_value(BoundKind::thm_k2, k, 2, sr_k2_fast(t2, k)));
          const Tree t3 = generate_tree(FamilySpec::p_l_abx_tree(3, a, b, x));
          EXPECT_EQ(Rational(sd_k(t3, k).value), bound_value(BoundKind::thm_k3, k, 3, sr_k3_fast(t3, k)))
              << a << " " << b << " " << x << " k=" << k;
        }
}
