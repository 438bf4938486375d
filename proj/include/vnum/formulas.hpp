#ifndef VNUM_FORMULAS_HPP
#define VNUM_FORMULAS_HPP

// Closed-form values, bounds and predicates. Each evaluator returns the value
// together with an anchor naming the claim it encodes, so a disagreement with
// the oracle points at the exact statement under test.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnum/constructions.hpp"
#include "vnum/error.hpp"
#include "vnum/graph.hpp"

namespace vnum {

struct FormulaValue {
  int value = 0;
  std::string anchor;
  bool conjecture = false;  // never asserted, only reported
  bool exact = true;        // false for upper bounds
};

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// ---------------------------------------------------------------------------
// Cohen-Macaulay closed graphs

/// The split S = S_2 ∪ S_1 ∪ S_0 by how many cut vertices outside S each s
/// sees, with the partner vertices used by the witness f_S f_{D_S}.
struct CmClosedSplit {
  VertexSet s2 = 0, s1 = 0, s0 = 0;
  VertexSet d = 0;       // D_S: cut vertices outside S not adjacent to S
  VertexSet n_s = 0;     // N_S: cut vertices outside S adjacent to S
  // One factor f_{a,b} (a < b) per s in S, in increasing order of s.
  std::vector<std::pair<Vertex, Vertex>> factors;

  int degree() const { return 2 * size_of(s2 | s1 | s0) + size_of(d); }
};

/// Partners are the smallest labels satisfying the non-adjacency constraints.
inline CmClosedSplit cm_closed_split(const Graph& g, const CliquePathStructure& cps, VertexSet s) {
  if ((s & ~cps.tilde_c) != 0) throw InvalidArgument("cut set " + format_set(s) + " is not inside the cut vertices");
  CmClosedSplit out;
  const VertexSet tc = cps.tilde_c;
  auto ordered = [](Vertex a, Vertex b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  auto fail = [&](Vertex v) {
    throw Error("no admissible partner vertices for " + std::to_string(v) + " in " + format_set(s));
  };
  VertexSet touched = 0;
  for_each_member(s, [&](Vertex v) {
    const VertexSet outside = g.neighbours(v) & ~s;
    touched |= outside;
    const VertexSet cut_nb = outside & tc;
    const auto others = members(outside & ~tc);
    switch (size_of(cut_nb)) {
      case 2: {
        const auto c = members(cut_nb);
        if (g.adjacent(c[0], c[1])) fail(v);
        out.s2 |= bit(v);
        out.factors.push_back(ordered(c[0], c[1]));
        break;
      }
      case 1: {
        const Vertex c = min_vertex(cut_nb);
        std::optional<Vertex> partner;
        for (Vertex w : others) {
          if (!g.adjacent(c, w)) {
            partner = w;
            break;
          }
        }
        if (!partner) fail(v);
        out.s1 |= bit(v);
        out.factors.push_back(ordered(c, *partner));
        break;
      }
      case 0: {
        std::optional<std::pair<Vertex, Vertex>> pair;
        for (std::size_t i = 0; i < others.size() && !pair; ++i)
          for (std::size_t j = i + 1; j < others.size() && !pair; ++j)
            if (!g.adjacent(others[i], others[j])) pair = std::make_pair(others[i], others[j]);
        if (!pair) fail(v);
        out.s0 |= bit(v);
        out.factors.push_back(*pair);
        break;
      }
      default:
        throw Error("vertex " + std::to_string(v) + " sees more than two cut vertices");
    }
  });
  out.n_s = touched & tc & ~s;
  out.d = tc & ~s & ~touched;
  return out;
}

/// v_S = 2|S| + |D_S|, cross-checked against (t-1) + |S| - |N_S|.
inline FormulaValue v_cm_closed_local(const Graph& g, const CliquePathStructure& cps, VertexSet s) {
  if (s != 0 && !is_cut_set(g, s)) throw InvalidArgument(format_set(s) + " is not a cut set");
  const CmClosedSplit split = cm_closed_split(g, cps, s);
  const int value = 2 * size_of(s) + size_of(split.d);
  const int other = (cps.t() - 1) + size_of(s) - size_of(split.n_s);
  if (value != other) throw DisagreementError("2|S| + |D_S| differs from (t-1) + |S| - |N_S|");
  return {value, "cm-closed local: v_S = 2|S| + |D_S|", false, true};
}

struct CmClosedGlobal {
  FormulaValue value;
  VertexSet optimal = 0;  // S_0 = {v_k : k = 3i + 2 < t - 1}; empty for t <= 3
};

inline CmClosedGlobal v_cm_closed(const CliquePathStructure& cps) {
  const int t = cps.t();
  CmClosedGlobal out;
  out.value = {ceil_div(2 * (t - 1), 3), "cm-closed global: v = ceil(2(t-1)/3)", false, true};
  if (t >= 4) {
    for (int k = 2; k < t - 1; k += 3) out.optimal |= bit(cps.cut_vertices[static_cast<std::size_t>(k - 1)]);
  }
  return out;
}

inline FormulaValue v_path(int n) {
  if (n < 2) throw InvalidArgument("v_path needs n >= 2");
  return {ceil_div(2 * (n - 2), 3), "path: v = ceil(2(n-2)/3)", false, true};
}

// ---------------------------------------------------------------------------
// v = 2

struct V2Result {
  bool value = false;
  int case_tag = 0;  // 1: adjacent pair dominating; 2: separated cone pair; 0: neither
  Vertex u = 0, v = 0;
};

inline bool is_cone_component(const Graph& g, VertexSet comp, Vertex apex) {
  return contains(comp, apex) && (comp & ~g.closed_neighbours(apex)) == 0;
}

inline V2Result is_v2(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("is_v2 expects a connected graph");
  V2Result out;
  if (is_cone(g)) return out;
  const VertexSet all = g.vertices();
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (g.adjacent(u, v) && (g.closed_neighbours(u) | g.closed_neighbours(v)) == all) {
        return {true, 1, u, v};
      }
    }
  }
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const VertexSet s = g.neighbours(u) & g.neighbours(v);
      if (s == 0 || !is_cut_set(g, s)) continue;
      const auto comps = components(g, all & ~s);
      bool ok = true;
      bool separated = true;
      for (VertexSet c : comps) {
        if (contains(c, u) && contains(c, v)) separated = false;
        if (contains(c, u)) {
          ok = ok && is_cone_component(g, c, u);
        } else if (contains(c, v)) {
          ok = ok && is_cone_component(g, c, v);
        } else {
          ok = ok && is_clique(g, c);
        }
      }
      if (ok && separated) return {true, 2, u, v};
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycles

inline VertexSet cycle_optimal_set(int n) {
  VertexSet s = 0;
  for (int k = 3; k <= n; k += 3) s |= bit(k);
  return s;
}

/// Per-cut-set bound n - |C_2(S)| (components of C_n \ S with at least two vertices).
inline FormulaValue cycle_bound(int n, VertexSet s) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  const Graph c = build(FamilySpec::cycle(n)).graph;
  if (s == 0 || !is_cut_set(c, s)) throw InvalidArgument(format_set(s) + " is not a nonempty cut set of C_n");
  int c2 = 0;
  for (VertexSet comp : components(c, c.vertices() & ~s)) c2 += size_of(comp) >= 2 ? 1 : 0;
  return {n - c2, "cycle local bound: v_S <= n - |C_2(S)|", false, false};
}

struct CycleGlobal {
  FormulaValue value;
  VertexSet optimal = 0;
};

/// n = 3: complete, exact 0. n = 4, 5: exact values 2 and 3. n >= 6: the
/// bound ceil(2n/3) realized at S_0 = {3, 6, ..., 3 floor(n/3)}.
inline CycleGlobal cycle_bounds(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  if (n == 3) return {{0, "cycle: C_3 is complete", false, true}, 0};
  if (n == 4) return {{2, "cycle: v(C_4) = 2", false, true}, 0};
  if (n == 5) return {{3, "cycle: v(C_5) = 3", false, true}, 0};
  return {{ceil_div(2 * n, 3), "cycle global bound: v <= ceil(2n/3)", false, false}, cycle_optimal_set(n)};
}

// ---------------------------------------------------------------------------
// Binary trees

inline int binary_tree_recursion(int n) {
  if (n < 0) throw InvalidArgument("binary tree level must be >= 0");
  if (n <= 2) return n;
  return (1 << (n - 1)) + binary_tree_recursion(n - 3);
}

/// 2^{n-1} + 2^{n-4} + ... down to 2^2 (n = 0 mod 3), 2^3 + 1 (n = 1), 2^4 + 2 (n = 2).
inline int binary_tree_closed_form(int n) {
  if (n < 0) throw InvalidArgument("binary tree level must be >= 0");
  if (n <= 2) return n;
  int sum = 0;
  const int low = n % 3 == 0 ? 2 : n % 3 == 1 ? 3 : 4;
  for (int e = n - 1; e >= low; e -= 3) sum += 1 << e;
  return sum + (n % 3 == 1 ? 1 : n % 3 == 2 ? 2 : 0);
}

inline FormulaValue binary_tree_bound(int n) {
  const int rec = binary_tree_recursion(n);
  if (rec != binary_tree_closed_form(n)) throw DisagreementError("binary-tree closed form differs from the recursion");
  if (n <= 2) return {rec, "binary tree: v(B_0), v(B_1), v(B_2) = 0, 1, 2", false, true};
  return {rec, "binary tree bound: v(B_n) <= 2^{n-1} + v(B_{n-3})", false, false};
}

// ---------------------------------------------------------------------------
// Regularity

inline FormulaValue reg_whiskered_complete(int l) {
  return {l + 1, "whiskered complete graph: reg(R/J_G) = l + 1", false, true};
}

inline FormulaValue reg_gkr(int k, int r) { return {2 * k + r, "G(k,r): reg(R/J_G) = 2k + r", false, true}; }

inline FormulaValue reg_complete_power(int k) {
  return {2 * k - 1, "complete graph powers: reg(R/J^k) = 2k - 1", false, true};
}

inline FormulaValue reg_hkm_monomial(int m) { return {m, "H(k,m): reg(R/I(G)) = m", false, true}; }

inline FormulaValue reg_formula(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return {1, "complete graph: reg(R/J_G) = 1", false, true};
    case Family::whiskered_complete: {
      int l = 0;
      for (int c : spec.sizes) l += c > 0 ? 1 : 0;
      return reg_whiskered_complete(l);
    }
    case Family::gkr: return reg_gkr(spec.k, spec.r);
    default: throw InvalidArgument("no regularity formula for " + family_name(spec.family));
  }
}

// ---------------------------------------------------------------------------
// Conjectures

inline FormulaValue conjecture_value(Family family, int n) {
  switch (family) {
    case Family::cycle:
      if (n < 6) throw InvalidArgument("the cycle conjecture concerns n >= 6");
      return {ceil_div(2 * n, 3), "CONJECTURE: v(C_n) = ceil(2n/3)", true, true};
    case Family::binary_tree:
      if (n < 3) throw InvalidArgument("the binary-tree conjecture concerns n >= 3");
      return {binary_tree_recursion(n), "CONJECTURE: v(B_n) = 2^{n-1} + v(B_{n-3})", true, true};
    default: throw InvalidArgument("no conjecture for " + family_name(family));
  }
}

}  // namespace vnum

#endif  // VNUM_FORMULAS_HPP
