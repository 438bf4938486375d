#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "common.hpp"
#include "vnum/graph.hpp"

using namespace vnum;
using namespace vnum::testing;

TEST(Graph, RejectsLoopsDuplicatesAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{1, 4}}), InvalidArgument);
  EXPECT_THROW(Graph(65), InvalidArgument);
}

TEST(Graph, NeighbourhoodsMatchEdges) {
  const Graph g = star(4);
  EXPECT_EQ(g.degree(1), 4);
  EXPECT_EQ(g.neighbours(1), make_set({2, 3, 4, 5}));
  for (Vertex v = 2; v <= 5; ++v) EXPECT_EQ(g.neighbours(v), bit(1));
  EXPECT_EQ(g.edge_count(), 4);
}

TEST(Components, ConnectedPathIsOneBlock) {
  const auto c = components(path(4));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], make_set({1, 2, 3, 4}));
}

TEST(Components, EdgelessGraphGivesSingletons) {
  const auto c = components(Graph(3));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_FALSE(is_connected(Graph(3)));
}

TEST(Components, FiveCycleMinusTwoVertices) {
  const Graph g = cycle(5);
  auto c = components(g, g.vertices() & ~make_set({1, 3}));
  std::sort(c.begin(), c.end());
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], make_set({2}));
  EXPECT_EQ(c[1], make_set({4, 5}));
}

std::vector<VertexSet> cut_set_vertices(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : enumerate_cut_sets(g)) out.push_back(c.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(CutSets, CompleteGraphHasOnlyEmptySet) {
  EXPECT_EQ(cut_set_vertices(complete(4)), std::vector<VertexSet>{0});
}

TEST(CutSets, PathOfFour) {
  EXPECT_EQ(cut_set_vertices(path(4)), (std::vector<VertexSet>{0, make_set({2}), make_set({3})}));
}

TEST(CutSets, FourCycleAntipodalPairs) {
  EXPECT_EQ(cut_set_vertices(cycle(4)), (std::vector<VertexSet>{0, make_set({1, 3}), make_set({2, 4})}));
}

TEST(CutSets, MatchDefinitionOnCorpus) {
  for (const Graph& g : corpus()) {
    auto brute = brute_cut_sets(g);
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(cut_set_vertices(g), brute) << to_graph6(g);
  }
}

TEST(CutSets, EverySetSatisfiesTheProperty) {
  for (const Graph& g : corpus()) {
    for (const auto& c : enumerate_cut_sets(g)) {
      EXPECT_EQ(static_cast<int>(c.components.size()), component_count(g, g.vertices() & ~c.vertices));
      for (Vertex s : members(c.vertices)) {
        EXPECT_GT(component_count(g, g.vertices() & ~c.vertices),
                  component_count(g, g.vertices() & ~(c.vertices & ~bit(s))));
      }
    }
  }
}

TEST(CutSets, CapIsAnExplicitError) {
  Limits lim;
  lim.max_cutset_vertices = 5;
  EXPECT_THROW(enumerate_cut_sets(path(6), lim), ResourceCapError);
}

TEST(CutVertices, Examples) {
  EXPECT_EQ(cut_vertices(path(5)), make_set({2, 3, 4}));
  EXPECT_EQ(cut_vertices(cycle(6)), VertexSet{0});
  EXPECT_EQ(cut_vertices(star(4)), make_set({1}));
}

TEST(MaximalCliques, Examples) {
  EXPECT_EQ(maximal_cliques(complete(5)), std::vector<VertexSet>{make_set({1, 2, 3, 4, 5})});
  auto p = maximal_cliques(path(4));
  std::sort(p.begin(), p.end());
  EXPECT_EQ(p, (std::vector<VertexSet>{make_set({1, 2}), make_set({2, 3}), make_set({3, 4})}));
}

TEST(MaximalCliques, FigureGraphHasFiveCliquesWithSingletonMeets) {
  const BuiltGraph h = figure_h();
  const auto cps = cm_closed_structure(h.graph);
  ASSERT_TRUE(cps);
  ASSERT_EQ(cps->t(), 5);
  EXPECT_EQ(maximal_cliques(h.graph).size(), 5u);
  for (int i = 0; i + 1 < cps->t(); ++i) {
    const VertexSet meet = cps->cliques[static_cast<std::size_t>(i)] & cps->cliques[static_cast<std::size_t>(i) + 1];
    EXPECT_EQ(meet, bit(h.names.at("v_" + std::to_string(i + 1))));
  }
  for (int i = 0; i < cps->t(); ++i)
    for (int j = i + 2; j < cps->t(); ++j)
      EXPECT_EQ(cps->cliques[static_cast<std::size_t>(i)] & cps->cliques[static_cast<std::size_t>(j)], VertexSet{0});
}

TEST(Closed, PathsAndCompleteGraphs) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_TRUE(is_closed_labelling(path(n)));
    EXPECT_TRUE(is_closed_labelling(complete(n)));
  }
}

TEST(Closed, FourCycleHasNoClosedLabelling) {
  const Graph c = cycle(4);
  std::vector<Vertex> perm{1, 2, 3, 4};
  do EXPECT_FALSE(is_closed_labelling(relabel(c, perm)));
  while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_FALSE(closed_search(c));
}

TEST(Closed, SearchFindsLabellingForScrambledPath) {
  const Graph g = relabel(path(5), {3, 1, 5, 2, 4});
  EXPECT_FALSE(is_closed_labelling(g));
  const auto r = closed_search(g);
  ASSERT_TRUE(r);
  EXPECT_TRUE(is_closed_labelling(r->graph));
  EXPECT_EQ(relabel(g, r->perm).edges(), r->graph.edges());
}

TEST(Closed, SearchCap) {
  Limits lim;
  lim.max_closed_search = 4;
  EXPECT_THROW(closed_search(path(5), lim), ResourceCapError);
}

TEST(CmClosedStructure, Examples) {
  const auto h = cm_closed_structure(figure_h().graph);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->t(), 5);
  EXPECT_EQ(h->cut_vertices.size(), 4u);
  for (int n = 3; n <= 8; ++n) {
    const auto p = cm_closed_structure(path(n));
    ASSERT_TRUE(p);
    EXPECT_EQ(p->t(), n - 1);
    EXPECT_EQ(p->tilde_c, full_set(n) & ~bit(1) & ~bit(n));
  }
  EXPECT_FALSE(cm_closed_structure(cycle(5)));
  EXPECT_FALSE(cm_closed_structure(star(3)));
}

TEST(CmClosedStructure, ScrambledLabelsStillRecognized) {
  const Graph g = relabel(figure_h().graph, {11, 3, 9, 1, 7, 5, 2, 10, 4, 8, 6});
  const auto cps = cm_closed_structure(g);
  ASSERT_TRUE(cps);
  EXPECT_FALSE(cps->given_labelling_closed);
  EXPECT_TRUE(is_closed_labelling(relabel(g, cps->closed_labelling)));
}

TEST(CmClosedStructure, CutSetsLieInsideTildeC) {
  for (int t = 1; t <= 5; ++t) {
    std::vector<int> sizes;
    for (int i = 0; i < t; ++i) sizes.push_back(2 + (i * 7 % 3));
    const BuiltGraph b = build(FamilySpec::clique_path(sizes));
    if (b.graph.order() > 10) continue;
    const auto cps = cm_closed_structure(b.graph);
    ASSERT_TRUE(cps);
    for (const auto& c : enumerate_cut_sets(b.graph)) EXPECT_EQ(c.vertices & ~cps->tilde_c, VertexSet{0});
  }
}

TEST(ConnectedDomination, Examples) {
  EXPECT_EQ(min_connected_dominating_set_size(star(5)), 1);
  EXPECT_EQ(min_connected_dominating_set_size(path(6)), 4);
  EXPECT_EQ(min_connected_dominating_set_size(cycle(5)), 3);
  EXPECT_EQ(min_connected_dominating_set_size(complete(4)), 0);
}

TEST(ConnectedDomination, ReturnedSetIsConnectedAndDominating) {
  for (const Graph& g : corpus()) {
    const DominatingSet d = min_connected_dominating_set(g);
    EXPECT_EQ(size_of(d.vertices), d.size);
    if (is_complete(g)) continue;
    EXPECT_TRUE(is_connected_set(g, d.vertices));
    EXPECT_EQ(closed_neighbourhood(g, d.vertices), g.vertices());
  }
}

TEST(InducedMatching, Examples) {
  EXPECT_EQ(induced_matching_number(path(2)), 1);
  EXPECT_EQ(induced_matching_number(path(5)), 2);
  EXPECT_EQ(induced_matching_number(build(FamilySpec::hkm(4, 7)).graph), 7);
  EXPECT_EQ(induced_matching_number(cycle(6)), 2);
}

TEST(Chordal, Examples) {
  EXPECT_TRUE(is_chordal(path(5)));
  EXPECT_TRUE(is_chordal(complete(5)));
  EXPECT_FALSE(is_chordal(cycle(4)));
  EXPECT_FALSE(is_chordal(cycle(6)));
}

TEST(CliqueSum, PathSplitsAtAnInteriorVertex) {
  const auto s = clique_sum_split(path(6));
  ASSERT_TRUE(s);
  EXPECT_TRUE(contains(make_set({2, 3, 4, 5}), s->shared));
  EXPECT_EQ(s->first.graph.order() + s->second.graph.order(), 7);
  EXPECT_TRUE(is_free_vertex(s->first.graph, 1 + static_cast<int>(std::find(s->first.original.begin(), s->first.original.end(), s->shared) - s->first.original.begin())));
}

TEST(CliqueSum, CycleHasNone) { EXPECT_FALSE(clique_sum_split(cycle(5))); }

TEST(CliqueSum, TwoTrianglesShareAVertex) {
  const Graph g(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  const auto s = clique_sum_split(g);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->shared, 3);
  EXPECT_EQ(s->first_vertices | s->second_vertices, g.vertices());
  EXPECT_EQ(s->first_vertices & s->second_vertices, bit(3));
}
