#include <gtest/gtest.h>

#include "common.hpp"
#include "vnum/formulas.hpp"
#include "vnum/vnum.hpp"

using namespace vnum;
using namespace vnum::testing;
using Q = Rational;

namespace {

ColonCheck check_witness(const Graph& g, const Witness& w) {
  const BinomialEdgeIdeal<Q> j(g);
  const PrimeComponent<Q> p(g, make_cut_set(g, w.cut_set));
  return colon_certificate_check(j, p, w.f);
}

VertexSet handles(const BuiltGraph& b, std::initializer_list<const char*> names) {
  VertexSet s = 0;
  for (const char* n : names) s |= bit(vertex_handle(b, n));
  return s;
}

std::vector<Graph> small_corpus(int max_order) {
  std::vector<Graph> out;
  for (const Graph& g : corpus())
    if (g.order() <= max_order) out.push_back(g);
  return out;
}

}  // namespace

TEST(LocalOracle, CompleteGraphHasAUnitWitness) {
  Oracle o(complete(4));
  ASSERT_EQ(o.primes().size(), 1u);
  const LocalEntry e = o.local(0);
  EXPECT_EQ(e.value, 0);
  EXPECT_TRUE(e.certified);
}

TEST(LocalOracle, FourCycleEveryCutSetIsTwo) {
  Oracle o(cycle(4));
  for (std::size_t i = 0; i < o.primes().size(); ++i) {
    const LocalEntry e = o.local(i);
    EXPECT_EQ(e.value, 2) << format_set(e.cut_set);
    ASSERT_TRUE(e.witness);
    EXPECT_TRUE(o.check(i, *e.witness).accepted);
  }
}

TEST(LocalOracle, FiveCycleEveryCutSetIsThree) {
  Oracle o(cycle(5));
  ASSERT_EQ(o.primes().size(), 6u);
  for (std::size_t i = 0; i < o.primes().size(); ++i) EXPECT_EQ(o.local(i).value, 3) << format_set(o.primes()[i].vertices());
}

TEST(LocalOracle, CapBelowTheValueLeavesALowerBound) {
  Oracle o(cycle(5));
  const LocalEntry e = o.local(*o.index_of(0), 2);
  EXPECT_FALSE(e.value);
  EXPECT_EQ(e.lower_bound, 3);
}

TEST(LocalOracle, ExactSearchAgreesWithPrimeField) {
  OracleOptions exact;
  exact.exact_search = true;
  BasicOracle<SearchField> fp(path(5));
  BasicOracle<SearchField> qq(path(5), exact);
  EXPECT_EQ(qq.field(), "qq");
  for (std::size_t i = 0; i < fp.primes().size(); ++i) EXPECT_EQ(fp.local(i).value, qq.local(i).value);
}

TEST(GlobalOracle, Paths) {
  EXPECT_EQ(v_oracle(path(2)).global, 0);
  EXPECT_EQ(v_oracle(path(3)).global, 1);
  EXPECT_EQ(v_oracle(path(4)).global, 2);
  EXPECT_EQ(v_oracle(path(6)).global, 3);
}

TEST(GlobalOracle, StarIsOne) {
  const VReport r = v_oracle(star(4));
  EXPECT_EQ(r.global, 1);
  EXPECT_EQ(r.global_cut_set, VertexSet{0});
  EXPECT_EQ(r.v_empty, 1);
  EXPECT_TRUE(r.complete);
}

TEST(GlobalOracle, AllLocalsFillsEveryEntry) {
  OracleOptions opts;
  opts.all_locals = true;
  const VReport r = v_oracle(path(5), opts);
  ASSERT_EQ(r.locals.size(), 5u);  // {}, {2}, {3}, {4}, {2,4}
  int best = 100;
  for (const auto& e : r.locals) {
    ASSERT_TRUE(e.value);
    best = std::min(best, *e.value);
  }
  EXPECT_EQ(r.global, best);
  EXPECT_EQ(r.global, 2);
}

TEST(GlobalOracle, DisconnectedInputRejected) {
  EXPECT_THROW(v_oracle(Graph(4, {{1, 2}, {3, 4}})), InvalidArgument);
}

TEST(VEmpty, Examples) {
  EXPECT_EQ(v_empty(complete(5)).value, 0);
  EXPECT_EQ(v_empty(cycle(5)).value, 3);
  const VEmptyResult h = v_empty(figure_h().graph);
  EXPECT_EQ(h.value, 4);
  EXPECT_EQ(h.intersection, 4);
}

TEST(VEmpty, BothRoutesOnCorpus) {
  for (const Graph& g : corpus()) {
    const VEmptyResult r = v_empty(g);
    if (!is_complete(g)) {
      ASSERT_TRUE(r.intersection) << to_graph6(g);
      EXPECT_EQ(*r.intersection, r.value);
    }
  }
}

TEST(VEmpty, CliqueSumAdditivity) {
  int checked = 0;
  std::vector<Graph> graphs = corpus();
  for (int n = 7; n <= 10; ++n) graphs.push_back(path(n));
  graphs.push_back(build(FamilySpec::clique_path({3, 4, 2, 3})).graph);
  graphs.push_back(build(FamilySpec::hkm(2, 3)).graph);
  for (const Graph& g : graphs) {
    const auto split = clique_sum_split(g);
    if (!split) continue;
    EXPECT_EQ(v_empty(g).value, v_empty(split->first.graph).value + v_empty(split->second.graph).value + 1)
        << to_graph6(g);
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(WitnessCmClosed, FigureSplits) {
  const BuiltGraph h = figure_h();
  const auto cps = cm_closed_structure(h.graph);
  ASSERT_TRUE(cps);
  const CmClosedSplit a = cm_closed_split(h.graph, *cps, handles(h, {"v_2", "v_4"}));
  EXPECT_EQ(a.s2, handles(h, {"v_2"}));
  EXPECT_EQ(a.s1, handles(h, {"v_4"}));
  EXPECT_EQ(a.s0, VertexSet{0});
  EXPECT_EQ(a.d, VertexSet{0});
  const CmClosedSplit b = cm_closed_split(h.graph, *cps, handles(h, {"v_2"}));
  EXPECT_EQ(b.d, handles(h, {"v_4"}));
  const Witness w = witness_cm_closed(h.graph, *cps, handles(h, {"v_2"}));
  EXPECT_EQ(w.f.degree(), 3);
  EXPECT_TRUE(check_witness(h.graph, w).accepted);
}

TEST(WitnessCmClosed, EmptySetIsTheCutVertexProduct) {
  const BuiltGraph h = figure_h();
  const auto cps = cm_closed_structure(h.graph);
  const Witness w = witness_cm_closed(h.graph, *cps, 0);
  EXPECT_EQ(w.f, x_product(VariableSpace::binomial(11), cps->tilde_c));
  EXPECT_EQ(w.f.degree(), 4);
}

TEST(WitnessCmClosed, EveryCutSetOfTheFigureIsAccepted) {
  const BuiltGraph h = figure_h();
  const auto cps = cm_closed_structure(h.graph);
  for (const auto& c : enumerate_cut_sets(h.graph)) {
    const Witness w = witness_cm_closed(h.graph, *cps, c.vertices);
    EXPECT_EQ(w.f.degree(), v_cm_closed_local(h.graph, *cps, c.vertices).value);
    EXPECT_TRUE(check_witness(h.graph, w).accepted) << format_set(c.vertices);
  }
}

TEST(WitnessCycle, SixCycleOppositePair) {
  const Witness w = witness_cycle(6, make_set({3, 6}));
  const auto s = VariableSpace::binomial(6);
  EXPECT_EQ(w.f.degree(), 4);
  EXPECT_EQ(w.f, edge_binomial<Q>(s, 2, 4) * edge_binomial<Q>(s, 1, 5));
  EXPECT_TRUE(check_witness(cycle(6), w).accepted);
  EXPECT_THROW(witness_cycle(6, 0), InvalidArgument);
  EXPECT_THROW(witness_cycle(6, make_set({3, 4})), InvalidArgument);
}

TEST(WitnessCycle, SmallCyclesAccepted) {
  for (const auto& c : enumerate_cut_sets(cycle(4))) {
    if (c.vertices == 0) continue;
    EXPECT_EQ(witness_c4(c.vertices).f.degree(), 2);
    EXPECT_TRUE(check_witness(cycle(4), witness_c4(c.vertices)).accepted);
  }
  for (const auto& c : enumerate_cut_sets(cycle(5))) {
    if (c.vertices == 0) continue;
    EXPECT_EQ(witness_c5(c.vertices).f.degree(), 3);
    EXPECT_TRUE(check_witness(cycle(5), witness_c5(c.vertices)).accepted) << format_set(c.vertices);
  }
}

TEST(WitnessCycle, GeneralRecipeBoundedByTheFormula) {
  for (int n = 6; n <= 8; ++n) {
    for (const auto& c : enumerate_cut_sets(cycle(n))) {
      if (c.vertices == 0) continue;
      const Witness w = witness_cycle(n, c.vertices);
      EXPECT_LE(w.f.degree(), cycle_bound(n, c.vertices).value);
    }
  }
}

TEST(WitnessBinaryTree, LevelThreeAndFour) {
  const Witness b3 = witness_binary_tree(3);
  EXPECT_EQ(b3.f.degree(), 4);
  EXPECT_EQ(b3.cut_set, make_set({2, 3}));
  EXPECT_TRUE(check_witness(build(FamilySpec::binary_tree(3)).graph, b3).accepted);
  const Witness b4 = witness_binary_tree(4);
  EXPECT_EQ(b4.f.degree(), 9);
  EXPECT_TRUE(is_cut_set(build(FamilySpec::binary_tree(4)).graph, b4.cut_set));
  EXPECT_EQ(witness_binary_tree(2).f.degree(), 2);
}

TEST(WitnessGkr, DegreeIsK) {
  for (auto [k, r] : std::vector<std::pair<int, int>>{{2, 0}, {3, 2}, {4, 0}}) {
    const Witness w = witness_gkr(k, r);
    EXPECT_EQ(w.f.degree(), k);
    const BuiltGraph b = build(FamilySpec::gkr(k, r));
    EXPECT_EQ(w.cut_set, bit(vertex_handle(b, "v")));
    if (b.graph.order() <= 14) {
      EXPECT_TRUE(check_witness(b.graph, w).accepted);
    }
  }
}

TEST(WitnessEmpty, ProductOverADominatingSet) {
  const Witness w = witness_empty(cycle(5));
  EXPECT_EQ(w.f.degree(), 3);
  EXPECT_TRUE(check_witness(cycle(5), w).accepted);
  EXPECT_EQ(witness_empty(complete(3)).f, Polynomial<Q>::constant(Q(1)));
}

TEST(VMonomial, Examples) {
  const MonomialVResult p4 = v_monomial(path(4));
  EXPECT_EQ(p4.value, 1);
  EXPECT_EQ(size_of(p4.witness), 1);
  EXPECT_EQ(v_monomial(complete(4)).value, 1);
  for (auto [k, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
    const BuiltGraph b = build(FamilySpec::hkm(k, m));
    const MonomialVResult r = v_monomial(b.graph);
    EXPECT_EQ(r.value, k) << k << "," << m;
    EXPECT_EQ(r.colon_route, k);
  }
  EXPECT_THROW(v_monomial(Graph(2)), InvalidArgument);
}

TEST(Powers, CompleteGraphs) {
  EXPECT_EQ(v_power_complete(3, 1).value, 0);
  EXPECT_TRUE(v_power_complete(3, 1).upper_certified);
  const PowerResult p22 = v_power_complete(2, 2);
  EXPECT_EQ(p22.value, 2);
  EXPECT_TRUE(p22.upper_certified);
  EXPECT_EQ(p22.lower_confirmed, true);
  const PowerResult p33 = v_power_complete(3, 3);
  EXPECT_EQ(p33.value, 4);
  EXPECT_TRUE(p33.upper_certified);
  EXPECT_FALSE(p33.lower_confirmed);
  EXPECT_EQ(p33.lower_method, "cited");
}

TEST(Invariants, OracleWitnessesAcceptedAndBoundedByVEmpty) {
  for (const Graph& g : small_corpus(5)) {
    const VReport r = v_oracle(g);
    ASSERT_TRUE(r.global) << to_graph6(g);
    EXPECT_LE(*r.global, r.v_empty);
    for (const auto& e : r.locals) {
      if (!e.witness) continue;
      EXPECT_TRUE(e.certified);
      const PrimeComponent<Q> p(g, make_cut_set(g, e.cut_set));
      EXPECT_TRUE(colon_certificate_check(BinomialEdgeIdeal<Q>(g), p, *e.witness).accepted);
    }
  }
}

TEST(Invariants, ScalingKeepsAcceptance) {
  const Graph g = cycle(5);
  const Witness w = witness_c5(make_set({1, 3}));
  for (const Q& c : {Q(3), Q(-1, 2), Q(7, 5)}) {
    Witness scaled = w;
    scaled.f = w.f.scaled(c);
    EXPECT_TRUE(check_witness(g, scaled).accepted);
  }
}

TEST(Invariants, ExplicitWitnessesNeverBeatTheOracle) {
  Oracle o(cycle(6));
  const Witness w = witness_cycle(6, make_set({3, 6}));
  const LocalEntry e = o.local(*o.index_of(w.cut_set));
  ASSERT_TRUE(e.value);
  EXPECT_LE(*e.value, w.f.degree());
}
