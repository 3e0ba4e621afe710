#include "severi/graph.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace severi {
namespace {

const LongEdgeGraph kGex{{3, 5, 1}, {4, 5, 2}, {4, 6, 1}};

LongEdgeGraph cyc(int k) { return LongEdgeGraph{{k, k + 2, 1}}; }
LongEdgeGraph stub(int k) { return LongEdgeGraph{{k, k + 1, 2}}; }
LongEdgeGraph gq(int k) { return LongEdgeGraph{{k, k + 1, 2}, {k, k + 2, 1}, {k, k + 2, 1}}; }

TEST(Edge, RejectsInvalidEdges) {
  auto kind_of = [](Edge e) {
    try {
      LongEdgeGraph{e};
    } catch (const GraphError& error) {
      return error.kind();
    }
    ADD_FAILURE() << "accepted";
    return GraphError::Kind::kLoop;
  };
  EXPECT_EQ(kind_of({2, 3, 1}), GraphError::Kind::kShortEdge);
  EXPECT_EQ(kind_of({2, 2, 1}), GraphError::Kind::kLoop);
  EXPECT_EQ(kind_of({3, 1, 1}), GraphError::Kind::kReversed);
  EXPECT_EQ(kind_of({-1, 1, 1}), GraphError::Kind::kNegativeVertex);
  EXPECT_EQ(kind_of({1, 3, 0}), GraphError::Kind::kNonPositiveWeight);
  EXPECT_NO_THROW((LongEdgeGraph{{2, 3, 2}}));
}

TEST(Graph, CanonicalOrder) {
  EXPECT_EQ((LongEdgeGraph{{4, 6, 1}, {3, 5, 1}, {4, 5, 2}}), kGex);
  EXPECT_TRUE(LongEdgeGraph{}.empty());
  EXPECT_EQ(make_graph(std::vector<Edge>{}).size(), 0u);
}

TEST(Graph, CogenusAndMultiplicity) {
  EXPECT_EQ(cogenus(kGex), 3);
  EXPECT_EQ(cogenus(LongEdgeGraph{}), 0);
  EXPECT_EQ(cogenus(cyc(4)), 1);
  EXPECT_EQ(multiplicity(kGex), 4);
  EXPECT_EQ(multiplicity(LongEdgeGraph{}), 1);
  EXPECT_EQ(multiplicity(stub(3)), 4);
}

TEST(Graph, WeightProfile) {
  const WeightProfile p = weight_profile(kGex);
  for (int i = -1; i < 9; ++i) {
    const int expected = i == 3 ? 1 : i == 4 ? 4 : i == 5 ? 1 : 0;
    EXPECT_EQ(p[i], expected) << "gap " << i;
  }
  const WeightProfile empty = weight_profile(LongEdgeGraph{});
  for (int i = 0; i < 5; ++i) EXPECT_EQ(empty[i], 0);
  const WeightProfile c = weight_profile(LongEdgeGraph{{0, 2, 1}});
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 1);
  EXPECT_EQ(c[2], 0);
}

TEST(Graph, Allowability) {
  EXPECT_TRUE(is_allowable(kGex, 5));
  EXPECT_FALSE(is_allowable(kGex, 4));
  for (int d = 1; d <= 8; ++d) {
    for (int k = 0; k <= 10; ++k) {
      EXPECT_EQ(is_allowable(stub(k), d), 2 <= k && k <= d - 1) << "stub " << k << " d " << d;
      EXPECT_EQ(is_allowable(cyc(k), d), 1 <= k && k <= d - 1) << "cyc " << k << " d " << d;
    }
  }
  EXPECT_TRUE(is_allowable(LongEdgeGraph{}, 1));
}

TEST(Graph, Offset) {
  EXPECT_EQ(offset(LongEdgeGraph{{0, 2, 1}}, 5), cyc(5));
  EXPECT_EQ(offset(kGex, 0), kGex);
  EXPECT_EQ(offset(offset(kGex, 2), 3), offset(kGex, 5));
}

TEST(Graph, Automorphisms) {
  const LongEdgeGraph fig{{0, 2, 1}, {0, 2, 1}, {0, 2, 1}, {1, 2, 2}, {1, 2, 2}};
  EXPECT_EQ(automorphism_count(fig), 12);
  EXPECT_EQ(multiplicity(fig), 16);
  EXPECT_EQ(automorphism_count(gq(4)), 2);
  EXPECT_EQ(automorphism_count(kGex), 1);
  // Labels 1 and 2 are the parallel pair.
  EXPECT_EQ(automorphism_count_with(gq(4), Distribution{{4, 4, 5}}), 1);
  EXPECT_EQ(automorphism_count_with(gq(4), Distribution{{4, 5, 5}}), 2);
}

TEST(Graph, Templates) {
  EXPECT_TRUE(is_template(LongEdgeGraph{{0, 2, 1}}));
  EXPECT_FALSE(is_template(LongEdgeGraph{{0, 2, 1}, {3, 5, 1}}));
  EXPECT_FALSE(is_template(LongEdgeGraph{}));
  EXPECT_FALSE(is_template(cyc(1)));
  EXPECT_TRUE(is_offset_template(cyc(1)));
  EXPECT_TRUE(is_offset_template(kGex));
}

TEST(Graph, Decompose) {
  const std::vector<OffsetTemplate> parts = decompose(LongEdgeGraph{{2, 4, 1}, {5, 6, 2}});
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (OffsetTemplate{LongEdgeGraph{{0, 2, 1}}, 2}));
  EXPECT_EQ(parts[1], (OffsetTemplate{LongEdgeGraph{{0, 1, 2}}, 5}));

  const std::vector<OffsetTemplate> single = decompose(cyc(7));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], (OffsetTemplate{LongEdgeGraph{{0, 2, 1}}, 7}));

  const std::vector<OffsetTemplate> ex = decompose(kGex);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0], (OffsetTemplate{LongEdgeGraph{{0, 2, 1}, {1, 2, 2}, {1, 3, 1}}, 3}));
  EXPECT_TRUE(decompose(LongEdgeGraph{}).empty());
}

TEST(Graph, DisjointUnion) {
  EXPECT_EQ(disjoint_union(LongEdgeGraph{}, kGex), kGex);
  const LongEdgeGraph doubled = disjoint_union(cyc(1), cyc(1));
  EXPECT_EQ(doubled, (LongEdgeGraph{{1, 3, 1}, {1, 3, 1}}));
  EXPECT_EQ(cogenus(doubled), 2);
  const LongEdgeGraph mixed = disjoint_union(cyc(1), stub(4));
  EXPECT_EQ(cogenus(mixed), 2);
  EXPECT_EQ(multiplicity(mixed), 4);
}

TEST(GraphProperty, OffsetInvariance) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LongEdgeGraph g = testing::random_graph(rng, 5, 8);
    const int k = std::uniform_int_distribution<int>(0, 6)(rng);
    const LongEdgeGraph h = offset(g, k);
    EXPECT_EQ(cogenus(h), cogenus(g));
    EXPECT_EQ(multiplicity(h), multiplicity(g));
    EXPECT_EQ(automorphism_count(h), automorphism_count(g));
    const WeightProfile pg = weight_profile(g);
    const WeightProfile ph = weight_profile(h);
    for (int i = -2; i < 16; ++i) EXPECT_EQ(ph[i + k], pg[i]);
  }
}

TEST(GraphProperty, AllowabilityIsMonotoneInD) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const LongEdgeGraph g = testing::random_graph(rng, 4, 12);
    for (int d = 1; d < 20; ++d) {
      if (is_allowable(g, d)) EXPECT_TRUE(is_allowable(g, d + 1)) << to_string(g) << " d " << d;
    }
  }
}

TEST(GraphProperty, DecomposeReassemble) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const LongEdgeGraph g = testing::random_graph(rng, 5, 10);
    const std::vector<OffsetTemplate> parts = decompose(g);
    for (const OffsetTemplate& part : parts) EXPECT_TRUE(is_template(part.shape)) << to_string(part.shape);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      EXPECT_LE(parts[i - 1].offset + parts[i - 1].shape.right_end(), parts[i].offset);
    }
    EXPECT_EQ(reassemble(parts), g);
  }
}

TEST(GraphProperty, UnionAdditivity) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const LongEdgeGraph a = testing::random_graph(rng, 3, 6);
    const LongEdgeGraph b = offset(testing::random_graph(rng, 3, 6), 7);
    const LongEdgeGraph u = disjoint_union(a, b);
    EXPECT_EQ(cogenus(u), cogenus(a) + cogenus(b));
    EXPECT_EQ(multiplicity(u), multiplicity(a) * multiplicity(b));
    EXPECT_EQ(automorphism_count(u), automorphism_count(a) * automorphism_count(b));
    EXPECT_LE(static_cast<int>(u.size()), cogenus(u));
  }
}

TEST(Distribution, RestrictAndMultiplicities) {
  const Distribution delta{{3, 4, 4}};
  EXPECT_EQ(delta.multiplicities(), (std::vector<std::pair<int, int>>{{3, 1}, {4, 2}}));
  EXPECT_EQ(restrict(delta, 0b101).gaps, (std::vector<int>{3, 4}));
  EXPECT_EQ(offset(delta, 2).gaps, (std::vector<int>{5, 6, 6}));
}

}  // namespace
}  // namespace severi
