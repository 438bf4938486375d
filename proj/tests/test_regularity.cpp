#include <gtest/gtest.h>

#include "common.hpp"
#include "vnum/formulas.hpp"
#include "vnum/regularity.hpp"

using namespace vnum;
using namespace vnum::testing;

namespace {

// Hochster's formula straight over every subset of the variables.
int brute_reg(const SquarefreeIdeal& ideal) {
  int best = 0;
  for (VarSet sigma = 1; sigma < (VarSet{1} << ideal.nvars); ++sigma) {
    if (auto q = top_homology(reduced_homology<Rational>(ideal, sigma))) best = std::max(best, *q + 1);
  }
  return best;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  std::vector<Edge> edges;
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back({shift(e.u), shift(e.v)});
  return Graph(g.order() - 1, edges);
}

}  // namespace

TEST(RegMonomial, SingleQuadric) {
  const auto s = VariableSpace::monomial(2);
  const SquarefreeIdeal i = squarefree_ideal({square_free_monomial(s, make_set({1, 2}))}, 2);
  EXPECT_EQ(reg_monomial(i).value, 1);
}

TEST(RegMonomial, ZeroIdealAndVariables) {
  EXPECT_EQ(reg_monomial(SquarefreeIdeal{3, {}}).value, 0);
  const auto s = VariableSpace::monomial(3);
  // a linear ideal has regularity 0 for R/I
  EXPECT_EQ(reg_monomial(squarefree_ideal({square_free_monomial(s, bit(1)), square_free_monomial(s, bit(2))}, 3)).value, 0);
}

TEST(RegMonomial, PathEdgeIdeal) {
  EXPECT_EQ(reg_monomial(edge_ideal(path(5))).value, 2);
  EXPECT_EQ(reg_chordal_edge(path(5)), 2);
}

TEST(RegMonomial, RejectsNonSquarefree) {
  EXPECT_THROW(squarefree_ideal({Monomial::variable(0, 2)}, 2), InvalidArgument);
}

TEST(RegMonomial, VariableCap) {
  Limits lim;
  lim.max_reg_variables = 8;
  EXPECT_THROW(reg_monomial(edge_ideal(path(9)), {}, lim), ResourceCapError);
}

TEST(RegMonomial, MatchesBruteForceHochster) {
  for (const Graph& g : corpus()) {
    const SquarefreeIdeal i = edge_ideal(g);
    EXPECT_EQ(reg_monomial(i).value, brute_reg(i)) << to_graph6(g);
  }
  for (const Graph& g : corpus()) {
    if (g.order() > 5) continue;
    const SquarefreeIdeal i = initial_ideal_of(g);
    EXPECT_EQ(reg_binomial(g).value, brute_reg(i)) << to_graph6(g);
  }
}

TEST(RegMonomial, CollapseDoesNotChangeTheAnswer) {
  RegOptions plain;
  plain.collapse = false;
  for (const Graph& g : corpus()) {
    EXPECT_EQ(reg_monomial(edge_ideal(g)).value, reg_monomial(edge_ideal(g), plain).value) << to_graph6(g);
  }
  for (const Graph& g : {cycle(5), build(FamilySpec::gkr(2, 0)).graph}) {
    EXPECT_EQ(reg_binomial(g).value, reg_binomial(g, plain).value);
  }
}

TEST(RegMonomial, ChordalEqualsInducedMatching) {
  std::vector<Graph> graphs = corpus();
  graphs.push_back(build(FamilySpec::hkm(2, 3)).graph);
  graphs.push_back(build(FamilySpec::hkm(1, 3)).graph);
  graphs.push_back(build(FamilySpec::clique_path({3, 2, 3, 2})).graph);
  graphs.push_back(build(FamilySpec::binary_tree(2)).graph);
  int checked = 0;
  for (const Graph& g : graphs) {
    if (!is_chordal(g) || g.order() > 10) continue;
    EXPECT_EQ(reg_monomial(edge_ideal(g)).value, reg_chordal_edge(g)) << to_graph6(g);
    ++checked;
  }
  EXPECT_GT(checked, 50);
  EXPECT_EQ(reg_chordal_edge(build(FamilySpec::hkm(2, 3)).graph), 3);
  EXPECT_EQ(reg_chordal_edge(complete(5)), 1);
  EXPECT_THROW(reg_chordal_edge(cycle(4)), InvalidArgument);
}

TEST(RegBinomial, CompleteGraphs) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(reg_monomial(initial_ideal_of(complete(n))).value, 1) << n;
    EXPECT_EQ(reg_binomial(complete(n)).value, 1) << n;
  }
}

TEST(RegBinomial, PathsAreCompleteIntersections) {
  // n - 1 quadrics in a regular sequence
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(reg_binomial(path(n)).value, n - 1) << n;
}

TEST(RegBinomial, WhiskeredCompleteGraphs) {
  for (auto [m, counts] : std::vector<std::pair<int, std::vector<int>>>{
           {3, {1}}, {3, {1, 1}}, {3, {1, 1, 1}}, {4, {1, 1, 1}}, {4, {2, 1}}, {3, {2, 0, 1}}}) {
    const FamilySpec spec = FamilySpec::whiskered_complete(m, counts);
    EXPECT_EQ(reg_binomial(build(spec).graph).value, reg_formula(spec).value) << m;
  }
}

TEST(RegBinomial, GkrTwoOne) { EXPECT_EQ(reg_binomial(build(FamilySpec::gkr(2, 1)).graph).value, 5); }

TEST(RegBinomial, InducedSubgraphsNeverIncrease) {
  for (const Graph& g : corpus()) {
    if (g.order() > 5) continue;
    const int whole = reg_binomial(g).value;
    for (Vertex v = 1; v <= g.order(); ++v) {
      const Graph h = delete_vertex(g, v);
      if (!is_connected(h)) continue;
      EXPECT_LE(reg_binomial(h).value, whole) << to_graph6(g) << " minus " << v;
    }
  }
}

TEST(RegBinomial, RationalRecheckRuns) {
  const RegResult r = reg_binomial(cycle(5));
  EXPECT_TRUE(r.rational_rechecked);
  EXPECT_EQ(r.value, 3);  // n - 2 for cycles
  EXPECT_GT(r.lattice_size, 0u);
}
