#include <gtest/gtest.h>

#include "common.hpp"
#include "vnum/constructions.hpp"
#include "vnum/graph.hpp"

using namespace vnum;
using namespace vnum::testing;

TEST(Build, HkmFourSevenHasNineteenVertices) {
  const BuiltGraph b = build(FamilySpec::hkm(4, 7));
  EXPECT_EQ(b.graph.order(), 19);
  EXPECT_EQ(b.graph.edge_count(), 18);  // a tree
  EXPECT_TRUE(is_connected(b.graph));
  EXPECT_TRUE(b.graph.adjacent(vertex_handle(b, "x"), vertex_handle(b, "x1")));
  for (int i = 2; i <= 4; ++i) {
    const std::string s = std::to_string(i);
    EXPECT_TRUE(b.graph.adjacent(vertex_handle(b, "x"), vertex_handle(b, "x" + s)));
    EXPECT_TRUE(b.graph.adjacent(vertex_handle(b, "x" + s), vertex_handle(b, "y" + s)));
    EXPECT_TRUE(b.graph.adjacent(vertex_handle(b, "y" + s), vertex_handle(b, "z" + s)));
  }
  for (int s = 1; s <= 4; ++s) {
    const std::string t = std::to_string(s);
    EXPECT_TRUE(b.graph.adjacent(vertex_handle(b, "x1"), vertex_handle(b, "y1_" + t)));
    EXPECT_TRUE(b.graph.adjacent(vertex_handle(b, "y1_" + t), vertex_handle(b, "z1_" + t)));
  }
}

TEST(Build, GkrThreeTwoHasFourteenVertices) {
  const BuiltGraph b = build(FamilySpec::gkr(3, 2));
  EXPECT_EQ(b.graph.order(), 14);
  const Vertex v = vertex_handle(b, "v");
  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    const Vertex mid = vertex_handle(b, "v" + s + "_2");
    EXPECT_TRUE(b.graph.adjacent(v, mid));
    EXPECT_EQ(b.graph.degree(mid), 3);  // a K_{1,3} centred at v_{i_2}
    EXPECT_TRUE(b.graph.adjacent(mid, vertex_handle(b, "v" + s + "_1")));
    EXPECT_TRUE(b.graph.adjacent(mid, vertex_handle(b, "v" + s + "_3")));
  }
  for (int j = 1; j <= 2; ++j) {
    const std::string s = std::to_string(j);
    EXPECT_TRUE(b.graph.adjacent(v, vertex_handle(b, "u" + s + "_1")));
    EXPECT_TRUE(b.graph.adjacent(vertex_handle(b, "u" + s + "_1"), vertex_handle(b, "u" + s + "_2")));
  }
}

TEST(Build, BinaryTreeLevelTwo) {
  const Graph g = build(FamilySpec::binary_tree(2)).graph;
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.edge_count(), 6);
  int pendants = 0;
  for (Vertex v = 1; v <= 7; ++v) pendants += g.degree(v) == 1 ? 1 : 0;
  EXPECT_EQ(pendants, 4);
}

TEST(Build, InvalidParametersNameTheBound) {
  EXPECT_THROW(build(FamilySpec::cycle(2)), InvalidArgument);
  EXPECT_THROW(build(FamilySpec::gkr(1, 0)), InvalidArgument);
  EXPECT_THROW(build(FamilySpec::gkr(0, 3)), InvalidArgument);
  EXPECT_THROW(build(FamilySpec::hkm(3, 2)), InvalidArgument);
  EXPECT_THROW(build(FamilySpec::clique_path({3, 1})), InvalidArgument);
  EXPECT_THROW(build(FamilySpec::whiskered_complete(1, {})), InvalidArgument);
  EXPECT_THROW(build(FamilySpec::whiskered_complete(2, {1, 1, 1})), InvalidArgument);
  EXPECT_THROW(build(FamilySpec::binary_tree(6)), InvalidArgument);
  try {
    build(FamilySpec::gkr(1, 0));
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("k >= 2"), std::string::npos);
  }
}

TEST(VertexHandle, Examples) {
  EXPECT_EQ(vertex_handle(build(FamilySpec::gkr(3, 2)), "v"), 1);
  const BuiltGraph cp = build(FamilySpec::clique_path({4, 3, 2}));
  const Vertex v1 = vertex_handle(cp, "v_1");
  const auto cps = cm_closed_structure(cp.graph);
  ASSERT_TRUE(cps);
  EXPECT_EQ(cps->cliques[0] & cps->cliques[1], bit(v1));
  const BuiltGraph bt = build(FamilySpec::binary_tree(3));
  const Vertex p = vertex_handle(bt, "3:5");
  EXPECT_EQ(p, 12);
  EXPECT_EQ(bt.graph.degree(p), 1);
  EXPECT_EQ(p / 2, binary_tree_node(2, 3));
}

TEST(VertexHandle, UnknownNames) {
  EXPECT_THROW(vertex_handle(build(FamilySpec::gkr(2, 0)), "u1_1"), UnknownName);
  EXPECT_THROW(vertex_handle(build(FamilySpec::binary_tree(2)), "3:1"), UnknownName);
  EXPECT_THROW(vertex_handle(build(FamilySpec::path(3)), "9"), UnknownName);
}

TEST(Families, CliquePathIsCmClosedWithGivenSizes) {
  for (const auto& sizes : std::vector<std::vector<int>>{{2}, {3, 2}, {4, 3, 2}, {2, 2, 2, 2, 2}, {4, 3, 2, 4, 2}}) {
    const BuiltGraph b = build(FamilySpec::clique_path(sizes));
    EXPECT_TRUE(is_closed_labelling(b.graph));
    const auto cps = cm_closed_structure(b.graph);
    ASSERT_TRUE(cps);
    ASSERT_EQ(cps->t(), static_cast<int>(sizes.size()));
    for (std::size_t i = 0; i < sizes.size(); ++i) EXPECT_EQ(size_of(cps->cliques[i]), sizes[i]);
  }
}

TEST(Families, GkrCutSetsLieInTheCandidates) {
  for (auto [k, r] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {3, 2}}) {
    const BuiltGraph b = build(FamilySpec::gkr(k, r));
    VertexSet candidates = bit(vertex_handle(b, "v"));
    for (int i = 1; i <= k; ++i) candidates |= bit(vertex_handle(b, "v" + std::to_string(i) + "_2"));
    for (int j = 1; j <= r; ++j) candidates |= bit(vertex_handle(b, "u" + std::to_string(j) + "_1"));
    EXPECT_EQ(size_of(candidates), k + r + 1);
    VertexSet used = 0;
    for (const auto& c : enumerate_cut_sets(b.graph)) used |= c.vertices;
    EXPECT_EQ(used, candidates);
  }
}

TEST(Families, HkmIsChordalWithInducedMatchingM) {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 7}}) {
    const Graph g = build(FamilySpec::hkm(k, m)).graph;
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_chordal(g));
    EXPECT_EQ(induced_matching_number(g), m);
  }
}

TEST(Families, WhiskeredCompleteCutVertices) {
  for (auto counts : std::vector<std::vector<int>>{{1}, {1, 1}, {2, 0, 1}, {1, 1, 1, 0}, {3, 1}}) {
    const BuiltGraph b = build(FamilySpec::whiskered_complete(4, counts));
    int l = 0;
    for (int c : counts) l += c > 0 ? 1 : 0;
    EXPECT_EQ(size_of(cut_vertices(b.graph)), l);
  }
}

TEST(Families, DescribeAndParseRoundTrip) {
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::star, Family::binary_tree,
                   Family::clique_path, Family::gkr, Family::hkm, Family::whiskered_complete}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_EQ(parse_family("binary_tree"), Family::binary_tree);
  EXPECT_THROW(parse_family("petersen"), InvalidArgument);
}
