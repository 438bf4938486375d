#ifndef VNUM_IDEALS_HPP
#define VNUM_IDEALS_HPP

// Binomial edge ideals J_G = (x_i y_j - x_j y_i : {i,j} in E), their
// admissible-path Groebner bases, the minimal primes P_S indexed by cut sets,
// membership and colon certificates, and monomial edge ideals.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/field.hpp"
#include "vnum/graph.hpp"
#include "vnum/limits.hpp"
#include "vnum/linalg.hpp"
#include "vnum/polynomial.hpp"

namespace vnum {

/// f_ij = x_i y_j - x_j y_i (sign follows the argument order).
template <class K>
Polynomial<K> edge_binomial(const VariableSpace& space, Vertex i, Vertex j) {
  Polynomial<K> f = Polynomial<K>::term(Monomial::variable(space.x(i)) * Monomial::variable(space.y(j)));
  f.add_term(Monomial::variable(space.x(j)) * Monomial::variable(space.y(i)), K(-1));
  return f;
}

template <class K>
Polynomial<K> x_var(const VariableSpace& space, Vertex i) {
  return variable<K>(space.x(i));
}

template <class K>
Polynomial<K> y_var(const VariableSpace& space, Vertex i) {
  return variable<K>(space.y(i));
}

// ---------------------------------------------------------------------------
// Admissible paths

/// A path u = i_0, i_1, ..., i_r = v with u < v, every interior vertex either
/// smaller than u or larger than v, and no proper subset of the interior
/// vertices forming a path from u to v. The last condition is equivalent to
/// the path being induced (chordless).
struct AdmissiblePath {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> interior;

  bool operator==(const AdmissiblePath&) const = default;
};

inline std::vector<AdmissiblePath> admissible_paths(const Graph& g, const Limits& lim = default_limits()) {
  if (g.order() > lim.max_path_vertices) {
    throw ResourceCapError("admissible-path enumeration capped at " + std::to_string(lim.max_path_vertices) +
                           " vertices");
  }
  std::vector<AdmissiblePath> out;
  std::vector<Vertex> path;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      // interior vertices allowed for this pair
      VertexSet allowed = 0;
      for (Vertex w = 1; w <= g.order(); ++w) {
        if (w < u || w > v) allowed |= bit(w);
      }
      path.assign(1, u);
      VertexSet on_path = bit(u);
      std::function<void()> extend = [&]() {
        const Vertex last = path.back();
        // vertices on the path other than the last one
        const VertexSet earlier = on_path & ~bit(last);
        if (g.adjacent(last, v) && (g.neighbours(v) & earlier) == 0) {
          out.push_back({u, v, std::vector<Vertex>(path.begin() + 1, path.end())});
        }
        if (g.adjacent(last, v)) return;  // any longer path would have a chord to v
        VertexSet next = g.neighbours(last) & allowed & ~on_path;
        for_each_member(next, [&](Vertex w) {
          if ((g.neighbours(w) & earlier) != 0) return;
          path.push_back(w);
          on_path |= bit(w);
          extend();
          on_path &= ~bit(w);
          path.pop_back();
        });
      };
      extend();
    }
  }
  std::sort(out.begin(), out.end(), [](const AdmissiblePath& a, const AdmissiblePath& b) {
    return std::tie(a.u, a.v, a.interior) < std::tie(b.u, b.v, b.interior);
  });
  return out;
}

/// (prod_{w > v} x_w)(prod_{w < u} y_w) f_uv for an admissible path.
template <class K>
Polynomial<K> path_element(const VariableSpace& space, const AdmissiblePath& p) {
  Monomial m;
  for (Vertex w : p.interior) {
    m = m * Monomial::variable(w > p.v ? space.x(w) : space.y(w));
  }
  return edge_binomial<K>(space, p.u, p.v).times(m);
}

// ---------------------------------------------------------------------------
// Binomial edge ideal

template <class K>
class BinomialEdgeIdeal {
 public:
  explicit BinomialEdgeIdeal(Graph g, const Limits& lim = default_limits())
      : graph_(std::move(g)), space_(VariableSpace::binomial(graph_.order())) {
    for (const Edge& e : graph_.edges()) generators_.push_back(edge_binomial<K>(space_, e.u, e.v));
    paths_ = admissible_paths(graph_, lim);
    for (const auto& p : paths_) gb_.add(path_element<K>(space_, p));
  }

  const Graph& graph() const { return graph_; }
  const VariableSpace& space() const { return space_; }
  const std::vector<Polynomial<K>>& generators() const { return generators_; }
  const std::vector<AdmissiblePath>& paths() const { return paths_; }
  const MarkedBasis<K>& groebner_basis() const { return gb_; }
  std::vector<Monomial> initial_ideal() const { return gb_.leading_monomials(); }

  bool contains(const Polynomial<K>& f) const { return normal_form(f, gb_).is_zero(); }

 private:
  Graph graph_;
  VariableSpace space_;
  std::vector<Polynomial<K>> generators_;
  std::vector<AdmissiblePath> paths_;
  MarkedBasis<K> gb_;
};

/// True when every leading monomial is squarefree.
inline bool squarefree(const std::vector<Monomial>& monos) {
  return std::all_of(monos.begin(), monos.end(), [](const Monomial& m) { return m.squarefree(); });
}

// ---------------------------------------------------------------------------
// Minimal primes

/// P_S = (x_s, y_s : s in S) + sum over components H of G \ S of J_{complete(H)}.
template <class K>
class PrimeComponent {
 public:
  PrimeComponent(const Graph& g, CutSet cut) : cut_(std::move(cut)), space_(VariableSpace::binomial(g.order())) {
    for_each_member(cut_.vertices, [&](Vertex s) {
      basis_.add(x_var<K>(space_, s));
      basis_.add(y_var<K>(space_, s));
    });
    for (std::size_t l = 0; l < cut_.components.size(); ++l) {
      const auto vs = members(cut_.components[l]);
      (vs.size() == 1 ? c1_ : c2_).push_back(static_cast<int>(l));
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) basis_.add(edge_binomial<K>(space_, vs[a], vs[b]));
    }
  }

  const CutSet& cut_set() const { return cut_; }
  VertexSet vertices() const { return cut_.vertices; }
  const std::vector<VertexSet>& components() const { return cut_.components; }
  const MarkedBasis<K>& basis() const { return basis_; }
  const VariableSpace& space() const { return space_; }

  std::vector<Polynomial<K>> generators() const {
    std::vector<Polynomial<K>> out;
    for (const auto& e : basis_.elements()) out.push_back(e.poly);
    return out;
  }

  /// Indices of components with one vertex / with at least two.
  const std::vector<int>& c1() const { return c1_; }
  const std::vector<int>& c2() const { return c2_; }

  bool contains(const Polynomial<K>& f) const { return normal_form(f, basis_).is_zero(); }

 private:
  CutSet cut_;
  VariableSpace space_;
  MarkedBasis<K> basis_;
  std::vector<int> c1_, c2_;
};

/// One prime per cut set (the empty set included), in cut-set order.
template <class K>
std::vector<PrimeComponent<K>> minimal_primes(const Graph& g, const Limits& lim = default_limits()) {
  if (!is_connected(g)) throw InvalidArgument("minimal_primes expects a connected graph");
  std::vector<PrimeComponent<K>> out;
  for (auto& c : enumerate_cut_sets(g, lim)) out.emplace_back(g, std::move(c));
  return out;
}

template <class K>
bool member(const Polynomial<K>& f, const BinomialEdgeIdeal<K>& j) {
  return j.contains(f);
}

template <class K>
bool member(const Polynomial<K>& f, const PrimeComponent<K>& p) {
  return p.contains(f);
}

// ---------------------------------------------------------------------------
// Colon certificates
//
// J_G is radical with minimal primes {P_T}, so (J_G : f) = ∩_{T : f ∉ P_T} P_T.
// If f ∉ P_S this intersection lies inside P_S; if moreover g f ∈ J_G for every
// generator g of P_S, then P_S ⊆ (J_G : f). Together: (J_G : f) = P_S.

struct ColonCheck {
  bool accepted = false;
  bool f_in_prime = false;
  std::vector<bool> generator_in_ideal;  // g_i * f ∈ J_G, per generator of P_S
  std::optional<std::size_t> failing_generator;
  std::string failing_generator_text;
  std::string reason;
};

template <class K>
ColonCheck colon_certificate_check(const BinomialEdgeIdeal<K>& j, const PrimeComponent<K>& p,
                                   const Polynomial<K>& f) {
  ColonCheck out;
  if (f.is_zero()) {
    out.reason = "witness is zero";
    return out;
  }
  if (!f.is_homogeneous()) {
    out.reason = "witness is not homogeneous";
    return out;
  }
  out.f_in_prime = p.contains(f);
  const auto& gens = p.basis().elements();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const bool ok = j.contains(gens[i].poly * f);
    out.generator_in_ideal.push_back(ok);
    if (!ok && !out.failing_generator) {
      out.failing_generator = i;
      out.failing_generator_text = format_polynomial(gens[i].poly, p.space());
    }
  }
  if (out.f_in_prime) {
    out.reason = "witness lies in P_S";
  } else if (out.failing_generator) {
    out.reason = "generator " + out.failing_generator_text + " times witness is not in J_G";
  } else {
    out.accepted = true;
    out.reason = "accepted";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Powers

/// (J^k)_d as the span of m * g_1 ... g_k over multisets of generators.
template <class K>
GradedSubspace<K> power_graded_piece(const BinomialEdgeIdeal<K>& j, int k, int d,
                                     const Limits& lim = default_limits()) {
  if (k < 1) throw InvalidArgument("power exponent must be >= 1");
  const auto& gens = j.generators();
  std::vector<Polynomial<K>> products;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, Polynomial<K>)> rec = [&](std::size_t from, Polynomial<K> acc) {
    if (static_cast<int>(pick.size()) == k) {
      products.push_back(std::move(acc));
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      pick.push_back(i);
      rec(i, acc * gens[i]);
      pick.pop_back();
    }
  };
  rec(0, Polynomial<K>::constant(K(1)));
  return graded_piece(products, d, j.space(), lim);
}

template <class K>
bool power_graded_member(const Polynomial<K>& f, const BinomialEdgeIdeal<K>& j, int k,
                         const Limits& lim = default_limits()) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw InvalidArgument("power_graded_member needs a homogeneous polynomial");
  if (f.degree() < 2 * k) return false;
  return power_graded_piece(j, k, f.degree(), lim).contains(f);
}

// ---------------------------------------------------------------------------
// Monomial edge ideals I(G) = (x_i x_j : {i,j} in E) in K[x_1..x_n]

inline Monomial square_free_monomial(const VariableSpace& space, VertexSet s) {
  Monomial m;
  for_each_member(s, [&](Vertex v) { m.set(space.x(v), 1); });
  return m;
}

inline VertexSet monomial_support(const Monomial& m, int n) {
  VertexSet s = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (m[v - 1] != 0) s |= bit(v);
  }
  return s;
}

struct MonomialEdgeIdeal {
  Graph graph;
  VariableSpace space;
  std::vector<Monomial> generators;

  explicit MonomialEdgeIdeal(Graph g) : graph(std::move(g)), space(VariableSpace::monomial(graph.order())) {
    for (const Edge& e : graph.edges()) generators.push_back(square_free_monomial(space, bit(e.u) | bit(e.v)));
  }
};

/// A monomial lies in a monomial ideal iff some generator divides it.
inline bool monomial_ideal_contains(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

/// Drops generators divisible by another one, then sorts lex-descending.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && gens[j].divides(gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

/// Minimal vertex covers of g, by branching on an uncovered edge.
inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g, const Limits& lim = default_limits()) {
  if (g.order() > lim.max_exhaustive_vertices) {
    throw ResourceCapError("vertex-cover enumeration capped at " + std::to_string(lim.max_exhaustive_vertices) +
                           " vertices");
  }
  const auto edges = g.edges();
  std::set<VertexSet> found;
  std::function<void(VertexSet)> rec = [&](VertexSet c) {
    for (const Edge& e : edges) {
      if (!contains(c, e.u) && !contains(c, e.v)) {
        rec(c | bit(e.u));
        rec(c | bit(e.v));
        return;
      }
    }
    found.insert(c);
  };
  rec(0);
  std::vector<VertexSet> out;
  for (VertexSet c : found) {
    bool minimal = true;
    for_each_member(c, [&](Vertex v) {
      if (!minimal) return;
      const VertexSet smaller = c & ~bit(v);
      for (const Edge& e : edges) {
        if (!contains(smaller, e.u) && !contains(smaller, e.v)) return;
      }
      minimal = false;
    });
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (size_of(a) != size_of(b)) return size_of(a) < size_of(b);
    return members(a) < members(b);
  });
  return out;
}

inline std::vector<VertexSet> monomial_primes(const MonomialEdgeIdeal& i, const Limits& lim = default_limits()) {
  return minimal_vertex_covers(i.graph, lim);
}

inline bool is_independent(const Graph& g, VertexSet a) {
  bool ok = true;
  for_each_member(a, [&](Vertex v) { ok = ok && (g.neighbours(v) & a) == 0; });
  return ok;
}

/// Minimal generators of (I(G) : X_A): m / gcd(m, X_A) over the edge generators.
inline std::vector<Monomial> monomial_colon(const MonomialEdgeIdeal& i, VertexSet a) {
  if (!is_independent(i.graph, a)) throw InvalidArgument("monomial_colon needs an independent set");
  std::vector<Monomial> gens;
  for (const Edge& e : i.graph.edges()) {
    gens.push_back(square_free_monomial(i.space, (bit(e.u) | bit(e.v)) & ~a));
  }
  return minimalize(std::move(gens));
}

}  // namespace vnum

#endif  // VNUM_IDEALS_HPP
