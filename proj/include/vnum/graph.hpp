#ifndef VNUM_GRAPH_HPP
#define VNUM_GRAPH_HPP

// Labelled simple graphs on [n] and the combinatorial predicates used by the
// ideal-theoretic modules: components, cut sets, cliques, closedness, clique
// paths, connected domination and induced matchings.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/limits.hpp"

namespace vnum {

using Vertex = int;             // 1-based everywhere
using VertexSet = std::uint64_t;  // bit v-1 set iff v is a member

inline constexpr int kMaxGraphOrder = 64;

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << (v - 1); }

constexpr bool contains(VertexSet s, Vertex v) { return (s & bit(v)) != 0; }

inline int size_of(VertexSet s) { return std::popcount(s); }

constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline VertexSet make_set(std::initializer_list<Vertex> vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

inline VertexSet make_set(const std::vector<Vertex>& vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

inline Vertex min_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

inline std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size_of(s)));
  while (s != 0) {
    out.push_back(min_vertex(s));
    s &= s - 1;
  }
  return out;
}

template <class F>
void for_each_member(VertexSet s, F&& f) {
  while (s != 0) {
    f(min_vertex(s));
    s &= s - 1;
  }
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxGraphOrder) {
      throw InvalidArgument("graph order must lie in [0, 64], got " + std::to_string(n));
    }
  }

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return full_set(n_); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (VertexSet a : adj_) twice += static_cast<std::size_t>(size_of(a));
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return contains(adj_[static_cast<std::size_t>(u - 1)], v);
  }

  VertexSet neighbours(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v - 1)];
  }

  VertexSet closed_neighbours(Vertex v) const { return neighbours(v) | bit(v); }

  int degree(Vertex v) const { return size_of(neighbours(v)); }

  /// Edges as pairs u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 1; u <= n_; ++u) {
      for_each_member(adj_[static_cast<std::size_t>(u - 1)] & ~full_set(u),
                      [&](Vertex v) { out.push_back({u, v}); });
    }
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) {
      throw InvalidArgument("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    adj_[static_cast<std::size_t>(u - 1)] |= bit(v);
    adj_[static_cast<std::size_t>(v - 1)] |= bit(u);
  }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
    }
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// Connectivity

/// Connected components of the subgraph induced on `alive`, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> out;
  VertexSet left = alive & g.vertices();
  while (left != 0) {
    VertexSet comp = bit(min_vertex(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_member(frontier, [&](Vertex v) { next |= g.neighbours(v); });
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

inline int component_count(const Graph& g, VertexSet alive) {
  return static_cast<int>(components(g, alive).size());
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g, g.vertices()) == 1; }

inline bool is_connected_set(const Graph& g, VertexSet s) { return s != 0 && component_count(g, s) == 1; }

inline bool is_clique(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_member(s, [&](Vertex v) {
    if ((s & ~bit(v) & ~g.neighbours(v)) != 0) ok = false;
  });
  return ok;
}

inline bool is_complete(const Graph& g) { return is_clique(g, g.vertices()); }

inline bool is_free_vertex(const Graph& g, Vertex v) { return is_clique(g, g.closed_neighbours(v)); }

/// Vertices adjacent to every other vertex.
inline VertexSet universal_vertices(const Graph& g) {
  VertexSet out = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.closed_neighbours(v) == g.vertices()) out |= bit(v);
  }
  return out;
}

inline bool is_cone(const Graph& g) { return g.order() > 0 && universal_vertices(g) != 0; }

// ---------------------------------------------------------------------------
// Cut sets

struct CutSet {
  VertexSet vertices = 0;
  std::vector<VertexSet> components;  // of G minus the cut set

  int size() const { return size_of(vertices); }
  bool operator==(const CutSet&) const = default;
};

inline bool is_cut_set(const Graph& g, VertexSet s) {
  const VertexSet all = g.vertices();
  const int c = component_count(g, all & ~s);
  bool ok = true;
  for_each_member(s, [&](Vertex v) {
    if (component_count(g, all & ~(s & ~bit(v))) >= c) ok = false;
  });
  return ok;
}

inline CutSet make_cut_set(const Graph& g, VertexSet s) {
  return CutSet{s, components(g, g.vertices() & ~s)};
}

inline bool cut_set_order(const CutSet& a, const CutSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return members(a.vertices) < members(b.vertices);
}

/// Every S with c(G\S) > c(G\(S\{s})) for all s in S, including the empty set.
/// Ordered by size, then lexicographically by sorted vertex list.
inline std::vector<CutSet> enumerate_cut_sets(const Graph& g, const Limits& lim = default_limits()) {
  const int n = g.order();
  if (n > lim.max_cutset_vertices) {
    throw ResourceCapError("cut-set enumeration capped at " + std::to_string(lim.max_cutset_vertices) +
                           " vertices, graph has " + std::to_string(n));
  }
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> count(total);
  for (std::size_t s = 0; s < total; ++s) {
    count[s] = static_cast<std::uint8_t>(component_count(g, g.vertices() & ~static_cast<VertexSet>(s)));
  }
  std::vector<CutSet> out;
  for (std::size_t s = 0; s < total; ++s) {
    bool ok = true;
    for (VertexSet rest = s; rest != 0 && ok; rest &= rest - 1) {
      VertexSet low = rest & (~rest + 1);
      if (count[s & ~low] >= count[s]) ok = false;
    }
    if (ok) out.push_back(make_cut_set(g, static_cast<VertexSet>(s)));
  }
  std::sort(out.begin(), out.end(), cut_set_order);
  return out;
}

inline VertexSet cut_vertices(const Graph& g) {
  const int base = component_count(g, g.vertices());
  VertexSet out = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (component_count(g, g.vertices() & ~bit(v)) > base) out |= bit(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cliques and closedness

/// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted by vertex list.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    Vertex pivot = min_vertex(p | x);
    int best = -1;
    for_each_member(p | x, [&](Vertex u) {
      int k = size_of(p & g.neighbours(u));
      if (k > best) {
        best = k;
        pivot = u;
      }
    });
    for_each_member(p & ~g.neighbours(pivot), [&](Vertex v) {
      expand(r | bit(v), p & g.neighbours(v), x & g.neighbours(v));
      p &= ~bit(v);
      x |= bit(v);
    });
  };
  if (g.order() > 0) expand(0, g.vertices(), 0);
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return members(a) < members(b); });
  return out;
}

/// The closedness condition for the given labelling: for i < j < k, {i,k} in E
/// implies {i,j} and {j,k} in E.
inline bool is_closed_labelling(const Graph& g) {
  const int n = g.order();
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex k = i + 2; k <= n; ++k) {
      if (!g.adjacent(i, k)) continue;
      for (Vertex j = i + 1; j < k; ++j) {
        if (!g.adjacent(i, j) || !g.adjacent(j, k)) return false;
      }
    }
  }
  return true;
}

/// perm[v-1] is the new label of old vertex v.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("relabelling has wrong length");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = perm[static_cast<std::size_t>(e.u - 1)];
    Vertex b = perm[static_cast<std::size_t>(e.v - 1)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.order(), edges);
}

struct Relabelling {
  std::vector<Vertex> perm;  // old -> new
  Graph graph;
};

/// Brute force over all labellings; returns the first (in lexicographic
/// permutation order) under which g is closed.
inline std::optional<Relabelling> closed_search(const Graph& g, const Limits& lim = default_limits()) {
  const int n = g.order();
  if (n > lim.max_closed_search) {
    throw ResourceCapError("closed_search capped at " + std::to_string(lim.max_closed_search) + " vertices");
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Graph h = relabel(g, perm);
    if (is_closed_labelling(h)) return Relabelling{perm, std::move(h)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[new - 1] = old label; increasing
};

/// Induced subgraph relabelled 1..|s| preserving the relative order of labels.
inline Subgraph induced_subgraph(const Graph& g, VertexSet s) {
  Subgraph out;
  out.original = members(s & g.vertices());
  std::vector<int> index(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (contains(s, e.u) && contains(s, e.v)) {
      edges.push_back({index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]});
    }
  }
  out.graph = Graph(static_cast<int>(out.original.size()), edges);
  return out;
}

// ---------------------------------------------------------------------------
// Clique paths (Cohen-Macaulay closed graphs)

/// Maximal cliques F_1..F_t with F_i and F_{i+1} meeting in the single vertex
/// v_i and non-consecutive cliques disjoint.
struct CliquePathStructure {
  std::vector<VertexSet> cliques;
  std::vector<Vertex> cut_vertices;  // v_1 .. v_{t-1}
  VertexSet tilde_c = 0;
  bool given_labelling_closed = false;
  std::vector<Vertex> closed_labelling;  // old -> new, consecutive along the cliques

  int t() const { return static_cast<int>(cliques.size()); }

  /// Index i (1-based) with v_i == v, or 0.
  int cut_index(Vertex v) const {
    for (std::size_t i = 0; i < cut_vertices.size(); ++i) {
      if (cut_vertices[i] == v) return static_cast<int>(i) + 1;
    }
    return 0;
  }
};

inline std::optional<CliquePathStructure> cm_closed_structure(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  std::vector<VertexSet> cliques = maximal_cliques(g);
  const std::size_t t = cliques.size();
  CliquePathStructure out;
  if (t == 1) {
    out.cliques = cliques;
  } else {
    std::vector<std::vector<std::size_t>> meets(t);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        int k = size_of(cliques[i] & cliques[j]);
        if (k > 1) return std::nullopt;
        if (k == 1) {
          meets[i].push_back(j);
          meets[j].push_back(i);
        }
      }
    }
    std::optional<std::size_t> start;
    for (std::size_t i = 0; i < t; ++i) {
      if (meets[i].size() > 2 || meets[i].empty()) return std::nullopt;
      if (meets[i].size() == 1 && !start) start = i;
    }
    if (!start) return std::nullopt;
    std::vector<bool> used(t, false);
    std::size_t cur = *start;
    for (std::size_t step = 0; step < t; ++step) {
      out.cliques.push_back(cliques[cur]);
      used[cur] = true;
      std::optional<std::size_t> next;
      for (std::size_t j : meets[cur]) {
        if (!used[j]) next = j;
      }
      if (!next) break;
      out.cut_vertices.push_back(min_vertex(cliques[cur] & cliques[*next]));
      cur = *next;
    }
    if (out.cliques.size() != t) return std::nullopt;
    for (std::size_t i = 0; i + 1 < out.cut_vertices.size(); ++i) {
      if (out.cut_vertices[i] == out.cut_vertices[i + 1]) return std::nullopt;
    }
    out.tilde_c = make_set(out.cut_vertices);
  }
  // Consecutive relabelling along F_1, ..., F_t, cut vertex last in each clique.
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()), 0);
  Vertex next_label = 1;
  for (std::size_t i = 0; i < out.cliques.size(); ++i) {
    VertexSet body = out.cliques[i];
    if (i > 0) body &= ~bit(out.cut_vertices[i - 1]);
    Vertex last = i < out.cut_vertices.size() ? out.cut_vertices[i] : 0;
    for_each_member(body, [&](Vertex v) {
      if (v != last) perm[static_cast<std::size_t>(v - 1)] = next_label++;
    });
    if (last != 0) perm[static_cast<std::size_t>(last - 1)] = next_label++;
  }
  if (!is_closed_labelling(relabel(g, perm))) {
    throw DisagreementError("consecutive labelling of a clique path is not closed");
  }
  out.closed_labelling = std::move(perm);
  out.given_labelling_closed = is_closed_labelling(g);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive invariants

/// Calls f on every k-subset of `universe` in increasing numeric order.
/// Stops early when f returns true.
template <class F>
bool for_each_subset_of_size(VertexSet universe, int k, F&& f) {
  std::vector<Vertex> elems = members(universe);
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(elems[static_cast<std::size_t>(i)]);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline VertexSet closed_neighbourhood(const Graph& g, VertexSet a) {
  VertexSet out = a;
  for_each_member(a, [&](Vertex v) { out |= g.neighbours(v); });
  return out;
}

struct DominatingSet {
  int size = 0;
  VertexSet vertices = 0;
};

/// Minimum connected dominating set. Complete graphs return size 0 (the
/// empty-cut-set local v-number of a prime ideal).
inline DominatingSet min_connected_dominating_set(const Graph& g, const Limits& lim = default_limits()) {
  if (!is_connected(g)) throw InvalidArgument("connected dominating sets need a connected graph");
  if (is_complete(g)) return {};
  if (g.order() > lim.max_exhaustive_vertices) {
    throw ResourceCapError("connected domination search capped at " + std::to_string(lim.max_exhaustive_vertices) +
                           " vertices");
  }
  for (int k = 1; k <= g.order(); ++k) {
    DominatingSet found;
    bool hit = for_each_subset_of_size(g.vertices(), k, [&](VertexSet a) {
      if (closed_neighbourhood(g, a) == g.vertices() && is_connected_set(g, a)) {
        found = {k, a};
        return true;
      }
      return false;
    });
    if (hit) return found;
  }
  throw DisagreementError("no connected dominating set found in a connected graph");
}

inline int min_connected_dominating_set_size(const Graph& g, const Limits& lim = default_limits()) {
  return min_connected_dominating_set(g, lim).size;
}

/// im(G): maximum number of edges, pairwise at distance >= 2.
inline int induced_matching_number(const Graph& g, const Limits& lim = default_limits()) {
  if (g.order() > 2 * lim.max_exhaustive_vertices) {
    throw ResourceCapError("induced matching search capped at " + std::to_string(2 * lim.max_exhaustive_vertices) +
                           " vertices");
  }
  std::unordered_map<VertexSet, int> memo;
  std::function<int(VertexSet)> best = [&](VertexSet alive) -> int {
    VertexSet busy = 0;
    for_each_member(alive, [&](Vertex v) {
      if ((g.neighbours(v) & alive) != 0) busy |= bit(v);
    });
    if (busy == 0) return 0;
    if (auto it = memo.find(busy); it != memo.end()) return it->second;
    Vertex u = min_vertex(busy);
    int value = best(busy & ~bit(u));
    for_each_member(g.neighbours(u) & busy, [&](Vertex w) {
      VertexSet gone = g.closed_neighbours(u) | g.closed_neighbours(w);
      value = std::max(value, 1 + best(busy & ~gone));
    });
    memo.emplace(busy, value);
    return value;
  };
  return best(g.vertices());
}

/// Chordality by repeated removal of simplicial vertices.
inline bool is_chordal(const Graph& g) {
  VertexSet alive = g.vertices();
  while (alive != 0) {
    bool removed = false;
    for_each_member(alive, [&](Vertex v) {
      if (!removed && is_clique(g, g.neighbours(v) & alive)) {
        alive &= ~bit(v);
        removed = true;
      }
    });
    if (!removed) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Decomposition over a free vertex

struct CliqueSumSplit {
  Vertex shared = 0;
  VertexSet first_vertices = 0;   // includes `shared`
  VertexSet second_vertices = 0;  // includes `shared`
  Subgraph first;
  Subgraph second;
};

/// All ways of writing g as G1 glued to G2 at a cut vertex v that is free in both pieces.
inline std::vector<CliqueSumSplit> clique_sum_splits(const Graph& g) {
  std::vector<CliqueSumSplit> out;
  if (!is_connected(g)) return out;
  for_each_member(cut_vertices(g), [&](Vertex v) {
    std::vector<VertexSet> comps = components(g, g.vertices() & ~bit(v));
    const std::size_t c = comps.size();
    if (c < 2 || c > 20) return;
    // Component 0 always goes to the first piece.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (c - 1)); ++mask) {
      VertexSet a = bit(v) | comps[0];
      VertexSet b = bit(v);
      for (std::size_t i = 1; i < c; ++i) {
        if ((mask >> (i - 1)) & 1) {
          b |= comps[i];
        } else {
          a |= comps[i];
        }
      }
      if (is_clique(g, g.neighbours(v) & a) && is_clique(g, g.neighbours(v) & b)) {
        out.push_back({v, a, b, induced_subgraph(g, a), induced_subgraph(g, b)});
      }
    }
  });
  return out;
}

inline std::optional<CliqueSumSplit> clique_sum_split(const Graph& g) {
  auto all = clique_sum_splits(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

inline std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

}  // namespace vnum

#endif  // VNUM_GRAPH_HPP
