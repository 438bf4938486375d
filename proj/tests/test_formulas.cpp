#include <gtest/gtest.h>

#include "common.hpp"
#include "vnum/formulas.hpp"
#include "vnum/vnum.hpp"

using namespace vnum;
using namespace vnum::testing;

namespace {

CliquePathStructure structure(const std::vector<int>& sizes) {
  return *cm_closed_structure(build(FamilySpec::clique_path(sizes)).graph);
}

// every tuple of clique sizes in {2,3} of length t
std::vector<std::vector<int>> size_tuples(int t) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << t); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < t; ++i) s.push_back(mask >> i & 1 ? 3 : 2);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(CmClosedLocal, Examples) {
  const BuiltGraph h = figure_h();
  const auto cps = *cm_closed_structure(h.graph);
  EXPECT_EQ(v_cm_closed_local(h.graph, cps, 0).value, 4);
  const Vertex v2 = vertex_handle(h, "v_2"), v4 = vertex_handle(h, "v_4");
  EXPECT_EQ(v_cm_closed_local(h.graph, cps, bit(v2)).value, 3);
  EXPECT_EQ(v_cm_closed_local(h.graph, cps, bit(v2) | bit(v4)).value, 4);
  // {v_1, v_2} is a cut set with D = {v_4}
  EXPECT_EQ(v_cm_closed_local(h.graph, cps, bit(vertex_handle(h, "v_1")) | bit(v2)).value, 5);
  const Vertex simplicial = members(cps.cliques[0] & ~cps.tilde_c)[0];
  EXPECT_THROW(v_cm_closed_local(h.graph, cps, bit(simplicial)), InvalidArgument);
}

TEST(CmClosedGlobal, Examples) {
  EXPECT_EQ(v_cm_closed(structure({4})).value.value, 0);
  EXPECT_EQ(v_cm_closed(structure({3, 2})).value.value, 1);
  EXPECT_EQ(v_cm_closed(structure({2, 3, 2})).value.value, 2);
  const BuiltGraph h = figure_h();
  const auto g = v_cm_closed(*cm_closed_structure(h.graph));
  EXPECT_EQ(g.value.value, 3);
  EXPECT_EQ(g.optimal, bit(vertex_handle(h, "v_2")));
  EXPECT_EQ(v_cm_closed(structure({2, 2, 3})).optimal, VertexSet{0});
}

TEST(CmClosedGlobal, OptimalSetAttainsTheValue) {
  for (int t = 1; t <= 8; ++t) {
    for (const auto& sizes : size_tuples(t)) {
      const Graph g = build(FamilySpec::clique_path(sizes)).graph;
      const auto cps = *cm_closed_structure(g);
      const auto glob = v_cm_closed(cps);
      EXPECT_EQ(v_cm_closed_local(g, cps, glob.optimal).value, glob.value.value);
      if (t >= 4) {
        const CmClosedSplit split = cm_closed_split(g, cps, glob.optimal);
        EXPECT_EQ(size_of(split.n_s), 2 * size_of(glob.optimal));
      }
    }
  }
}

TEST(CmClosedGlobal, MinimumOverAllCutSets) {
  // the closed form equals the minimum of the local formula over every cut set
  for (int t = 1; t <= 6; ++t) {
    const Graph g = build(FamilySpec::path(t + 1)).graph;
    const auto cps = *cm_closed_structure(g);
    int best = 1000;
    for (const auto& c : enumerate_cut_sets(g)) best = std::min(best, v_cm_closed_local(g, cps, c.vertices).value);
    EXPECT_EQ(best, v_cm_closed(cps).value.value) << t;
  }
}

TEST(Path, Examples) {
  EXPECT_EQ(v_path(2).value, 0);
  EXPECT_EQ(v_path(4).value, 2);
  EXPECT_EQ(v_path(6).value, 3);
  EXPECT_EQ(v_path(7).value, 4);
  EXPECT_THROW(v_path(1), InvalidArgument);
}

TEST(IsV2, Examples) {
  const V2Result c4 = is_v2(cycle(4));
  EXPECT_TRUE(c4.value);
  EXPECT_EQ(c4.case_tag, 1);
  const V2Result b2 = is_v2(build(FamilySpec::binary_tree(2)).graph);
  EXPECT_TRUE(b2.value);
  EXPECT_EQ(b2.case_tag, 2);
  EXPECT_FALSE(is_v2(cycle(5)).value);
  EXPECT_FALSE(is_v2(star(4)).value);  // a cone
  EXPECT_TRUE(is_v2(path(4)).value);
  EXPECT_TRUE(is_v2(path(5)).value);
  EXPECT_FALSE(is_v2(path(6)).value);
}

TEST(IsV2, MatchesTheOracleOnCorpus) {
  OracleOptions opts;
  opts.d_max = 2;
  for (const Graph& g : corpus()) {
    const VReport r = v_oracle(g, opts);
    EXPECT_EQ(is_v2(g).value, r.global == 2) << to_graph6(g);
  }
}

TEST(Cycle, Bounds) {
  EXPECT_EQ(cycle_bounds(3).value.value, 0);
  EXPECT_EQ(cycle_bounds(4).value.value, 2);
  EXPECT_EQ(cycle_bounds(5).value.value, 3);
  const CycleGlobal c6 = cycle_bounds(6);
  EXPECT_EQ(c6.value.value, 4);
  EXPECT_FALSE(c6.value.exact);
  EXPECT_EQ(c6.optimal, make_set({3, 6}));
  EXPECT_EQ(cycle_bound(6, make_set({3, 6})).value, 4);
  EXPECT_THROW(cycle_bound(6, make_set({1, 2})), InvalidArgument);
}

TEST(Cycle, OptimalSetAttainsTheGlobalBound) {
  for (int n = 6; n <= 12; ++n) {
    const CycleGlobal c = cycle_bounds(n);
    EXPECT_EQ(cycle_bound(n, c.optimal).value, c.value.value) << n;
  }
}

TEST(Cycle, BoundIsSoundAtTheOptimalSet) {
  for (int n = 6; n <= 8; ++n) {
    Oracle o(cycle(n));
    const VertexSet s0 = cycle_optimal_set(n);
    const LocalEntry e = o.local(*o.index_of(s0));
    ASSERT_TRUE(e.value) << n;
    EXPECT_LE(*e.value, cycle_bound(n, s0).value) << n;
  }
}

TEST(BinaryTree, Bounds) {
  EXPECT_EQ(binary_tree_bound(0).value, 0);
  EXPECT_EQ(binary_tree_bound(1).value, 1);
  EXPECT_EQ(binary_tree_bound(2).value, 2);
  EXPECT_TRUE(binary_tree_bound(2).exact);
  EXPECT_EQ(binary_tree_bound(3).value, 4);
  EXPECT_FALSE(binary_tree_bound(3).exact);
  EXPECT_EQ(binary_tree_bound(4).value, 9);
  EXPECT_EQ(binary_tree_bound(5).value, 18);
}

TEST(BinaryTree, ClosedFormMatchesRecursion) {
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(binary_tree_closed_form(n), binary_tree_recursion(n)) << n;
}

TEST(Regularity, Formulas) {
  EXPECT_EQ(reg_formula(FamilySpec::whiskered_complete(4, {1, 1, 1, 0})).value, 4);
  EXPECT_EQ(reg_formula(FamilySpec::gkr(3, 2)).value, 8);
  EXPECT_EQ(reg_formula(FamilySpec::complete(5)).value, 1);
  EXPECT_EQ(reg_complete_power(3).value, 5);
  EXPECT_EQ(reg_hkm_monomial(7).value, 7);
  EXPECT_THROW(reg_formula(FamilySpec::cycle(5)), InvalidArgument);
}

TEST(Conjecture, ValuesAreTagged) {
  EXPECT_EQ(conjecture_value(Family::cycle, 6).value, 4);
  EXPECT_EQ(conjecture_value(Family::cycle, 9).value, 6);
  EXPECT_EQ(conjecture_value(Family::binary_tree, 3).value, 4);
  EXPECT_TRUE(conjecture_value(Family::cycle, 7).conjecture);
  EXPECT_NE(conjecture_value(Family::cycle, 7).anchor.find("CONJECTURE"), std::string::npos);
  EXPECT_THROW(conjecture_value(Family::cycle, 5), InvalidArgument);
  EXPECT_THROW(conjecture_value(Family::path, 5), InvalidArgument);
}
