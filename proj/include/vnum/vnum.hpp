#ifndef VNUM_VNUM_HPP
#define VNUM_VNUM_HPP

// v-numbers of binomial and monomial edge ideals.
//
// The oracle rests on one observation. J_G is radical and its minimal primes
// are the P_T, T a cut set, so for f ∉ J_G
//     (J_G : f) = ∩_{T : f ∉ P_T} P_T,
// which is prime exactly when f lies in every minimal prime but one. Hence
// (J_G : f) = P_S iff f ∉ P_S and f ∈ P_T for all T ≠ S, and v_S(J_G) is the
// least d for which such an f exists in degree d. Adding an element of J_G
// changes neither condition, so the search runs over the standard monomials
// of in(J_G) in degree d. Modulo P_T every monomial reduces to 0 or to a single
// monomial with coefficient 1, which turns "f ∈ P_T" into one linear
// equation per residue class, and the question into a rank comparison.

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vnum/constructions.hpp"
#include "vnum/error.hpp"
#include "vnum/field.hpp"
#include "vnum/formulas.hpp"
#include "vnum/graph.hpp"
#include "vnum/ideals.hpp"
#include "vnum/limits.hpp"
#include "vnum/linalg.hpp"
#include "vnum/polynomial.hpp"

namespace vnum {

using SearchField = DefaultPrimeField;

// ---------------------------------------------------------------------------
// Oracle context

/// Standard monomials of in(J_G) in one degree, with the residue class of
/// each monomial modulo every minimal prime (-1 when the residue is 0).
struct DegreeData {
  int degree = 0;
  MonomialIndex standard;
  std::vector<std::vector<int>> class_of;  // [prime][column]
  std::vector<int> class_count;            // [prime]
};

/// Image of a monomial in R/P_T: zero if it involves a variable of T, otherwise
/// within each component the x's take the largest indices and the y's the smallest.
inline std::optional<Monomial> prime_residue(const Monomial& m, const VariableSpace& space, const CutSet& t) {
  const int n = space.n();
  Monomial out;
  for (Vertex v = 1; v <= n; ++v) {
    if (contains(t.vertices, v) && (m[space.x(v)] != 0 || m[space.y(v)] != 0)) return std::nullopt;
  }
  std::vector<Vertex> pool;
  for (VertexSet comp : t.components) {
    pool.clear();
    int xs = 0;
    for_each_member(comp, [&](Vertex v) {
      xs += m[space.x(v)];
      for (int e = m[space.x(v)] + m[space.y(v)]; e > 0; --e) pool.push_back(v);
    });
    const std::size_t ys = pool.size() - static_cast<std::size_t>(xs);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const int var = i < ys ? space.y(pool[i]) : space.x(pool[i]);
      out.set(var, out[var] + 1);
    }
  }
  return out;
}

template <class K>
class OracleContext {
 public:
  OracleContext(const Graph& g, const Limits& lim)
      : lim_(lim), ideal_(g, lim), primes_(minimal_primes<K>(g, lim)) {}

  const BinomialEdgeIdeal<K>& ideal() const { return ideal_; }
  const std::vector<PrimeComponent<K>>& primes() const { return primes_; }
  std::size_t prime_count() const { return primes_.size(); }

  const DegreeData& degree(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return *it->second;
    auto data = std::make_unique<DegreeData>();
    data->degree = d;
    const auto leads = ideal_.initial_ideal();
    std::vector<Monomial> monos;
    const VariableSpace& space = ideal_.space();
    for_each_monomial(
        space.count(), d,
        [&](const Monomial& m) {
          if (monos.size() >= lim_.max_graded_dim) {
            throw ResourceCapError("standard monomials of degree " + std::to_string(d) + " exceed cap " +
                                   std::to_string(lim_.max_graded_dim));
          }
          monos.push_back(m);
        },
        [&](const Monomial& partial) { return monomial_ideal_contains(leads, partial); });
    data->standard = MonomialIndex(std::move(monos));
    for (const auto& p : primes_) {
      std::unordered_map<Monomial, int, MonomialHash> classes;
      std::vector<int> cls(data->standard.size(), -1);
      for (std::size_t c = 0; c < data->standard.size(); ++c) {
        auto r = prime_residue(data->standard[c], space, p.cut_set());
        if (!r) continue;
        auto [pos, inserted] = classes.try_emplace(*r, static_cast<int>(classes.size()));
        cls[c] = pos->second;
      }
      data->class_count.push_back(static_cast<int>(classes.size()));
      data->class_of.push_back(std::move(cls));
    }
    return *cache_.emplace(d, std::move(data)).first->second;
  }

  /// Residue-class indicator rows of prime i in degree d: f ∈ P_i iff f is orthogonal to all of them.
  static std::vector<SparseRow<K>> class_rows(const DegreeData& data, std::size_t i) {
    std::vector<SparseRow<K>> rows(static_cast<std::size_t>(data.class_count[i]));
    const auto& cls = data.class_of[i];
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (cls[c] >= 0) rows[static_cast<std::size_t>(cls[c])].emplace_back(static_cast<int>(c), K(1));
    }
    return rows;
  }

  /// Some f of degree d, supported on standard monomials, with f ∈ P_T for all T ≠ S and f ∉ P_S.
  std::optional<Polynomial<K>> witness_at(std::size_t s, int d) {
    const DegreeData& data = degree(d);
    if (data.standard.size() == 0) return std::nullopt;
    Echelon<K> others(data.standard.size());
    for (std::size_t t = 0; t < primes_.size(); ++t) {
      if (t == s) continue;
      for (const auto& row : class_rows(data, t)) others.insert(row);
    }
    for (const auto& row : class_rows(data, s)) {
      const SparseRow<K> rem = others.reduce(row);
      if (rem.empty()) continue;
      const std::vector<K> x = others.kernel_vector(rem.front().first);
      Polynomial<K> f;
      for (std::size_t c = 0; c < x.size(); ++c) {
        if (!FieldTraits<K>::is_zero(x[c])) f.add_term(data.standard[c], x[c]);
      }
      return f;
    }
    return std::nullopt;
  }

 private:
  Limits lim_;
  BinomialEdgeIdeal<K> ideal_;
  std::vector<PrimeComponent<K>> primes_;
  std::map<int, std::unique_ptr<DegreeData>> cache_;
};

// ---------------------------------------------------------------------------
// Reports

enum class Method { oracle, formula, witness };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::formula: return "formula";
    case Method::witness: return "witness-upper-bound";
  }
  return "?";
}

struct LocalEntry {
  VertexSet cut_set = 0;
  std::optional<int> value;        // exact local v-number, when known
  int lower_bound = 0;             // no witness exists below this degree
  std::optional<int> upper_bound;  // degree of some certified witness
  Method method = Method::oracle;
  std::optional<Polynomial<Rational>> witness;
  bool certified = false;  // witness accepted by the colon check over Q
};

struct VReport {
  Graph graph;
  std::string field;
  std::vector<LocalEntry> locals;  // cut-set order
  std::optional<int> global;
  std::optional<VertexSet> global_cut_set;
  int v_empty = 0;
  bool complete = false;
  std::vector<std::string> caps_hit;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// Local upper bound from a product of prime generators

/// A product with one factor in P_T \ P_S for every T ≠ S: a variable x_t
/// (t ∈ T \ S) or a binomial f_ij (i, j joined in G \ T, separated in G \ S).
/// The product is a witness for S since P_S is prime; greedy cover by factors.
inline Polynomial<Rational> local_bound_witness(const Graph& g, const std::vector<CutSet>& cuts, std::size_t s) {
  const VariableSpace space = VariableSpace::binomial(g.order());
  const CutSet& cs = cuts[s];
  auto comp_of = [](const CutSet& c, Vertex v) -> int {
    for (std::size_t i = 0; i < c.components.size(); ++i)
      if (contains(c.components[i], v)) return static_cast<int>(i);
    return -1;
  };
  struct Factor {
    Polynomial<Rational> poly;
    std::vector<std::size_t> covers;
    int degree;
  };
  std::vector<Factor> factors;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (contains(cs.vertices, v)) continue;
    Factor f{x_var<Rational>(space, v), {}, 1};
    for (std::size_t t = 0; t < cuts.size(); ++t)
      if (t != s && contains(cuts[t].vertices, v)) f.covers.push_back(t);
    if (!f.covers.empty()) factors.push_back(std::move(f));
  }
  for (Vertex i = 1; i <= g.order(); ++i) {
    for (Vertex j = i + 1; j <= g.order(); ++j) {
      if (contains(cs.vertices, i) || contains(cs.vertices, j) || comp_of(cs, i) == comp_of(cs, j)) continue;
      Factor f{edge_binomial<Rational>(space, i, j), {}, 2};
      for (std::size_t t = 0; t < cuts.size(); ++t) {
        if (t == s || contains(cuts[t].vertices, i) || contains(cuts[t].vertices, j)) continue;
        if (comp_of(cuts[t], i) == comp_of(cuts[t], j)) f.covers.push_back(t);
      }
      if (!f.covers.empty()) factors.push_back(std::move(f));
    }
  }
  std::vector<char> covered(cuts.size(), 0);
  covered[s] = 1;
  std::size_t left = cuts.size() - 1;
  Polynomial<Rational> out = Polynomial<Rational>::constant(1);
  while (left > 0) {
    const Factor* best = nullptr;
    double best_ratio = 0;
    for (const auto& f : factors) {
      int gain = 0;
      for (std::size_t t : f.covers) gain += covered[t] ? 0 : 1;
      const double ratio = static_cast<double>(gain) / f.degree;
      if (gain > 0 && ratio > best_ratio) {
        best_ratio = ratio;
        best = &f;
      }
    }
    if (!best) throw Error("no prime generator separates the remaining cut sets");
    for (std::size_t t : best->covers) {
      if (!covered[t]) {
        covered[t] = 1;
        --left;
      }
    }
    out = out * best->poly;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The oracle

struct OracleOptions {
  std::optional<int> d_max;      // overrides the default degree caps
  bool exact_search = false;     // search over Q instead of GF(p)
  bool all_locals = false;       // v_oracle: also pin down every local value
  bool recheck_misses = false;   // re-run GF(p) misses over Q
};

struct WitnessSearch {
  std::optional<Polynomial<Rational>> witness;
  bool certified = false;
  bool used_exact_fallback = false;
};

template <class F>
class BasicOracle {
 public:
  explicit BasicOracle(const Graph& g, OracleOptions opts = {}, const Limits& lim = default_limits())
      : graph_(g), opts_(opts), lim_(lim) {
    if (!is_connected(g)) throw InvalidArgument("v-number computations expect a connected graph");
    exact_ideal_ = std::make_unique<BinomialEdgeIdeal<Rational>>(g, lim);
    exact_primes_ = minimal_primes<Rational>(g, lim);
    if (!opts_.exact_search) modp_ = std::make_unique<OracleContext<F>>(g, lim);
  }

  const Graph& graph() const { return graph_; }
  const BinomialEdgeIdeal<Rational>& ideal() const { return *exact_ideal_; }
  const std::vector<PrimeComponent<Rational>>& primes() const { return exact_primes_; }
  std::string field() const { return opts_.exact_search ? "qq" : field_name<F>(); }

  std::optional<std::size_t> index_of(VertexSet s) const {
    for (std::size_t i = 0; i < exact_primes_.size(); ++i)
      if (exact_primes_[i].vertices() == s) return i;
    return std::nullopt;
  }

  ColonCheck check(std::size_t s, const Polynomial<Rational>& f) const {
    return colon_certificate_check(*exact_ideal_, exact_primes_[s], f);
  }

  /// Witness search in one degree: GF(p) first, lifted and confirmed over Q;
  /// the search is repeated over Q when lifting or confirmation fails.
  WitnessSearch witness_at(std::size_t s, int d) {
    WitnessSearch out;
    if (modp_) {
      auto f = modp_->witness_at(s, d);
      if (!f) {
        if (!opts_.recheck_misses) return out;
      } else if (auto q = lift_to_rationals(*f)) {
        if (check(s, *q).accepted) {
          out.witness = std::move(q);
          out.certified = true;
          return out;
        }
      }
      out.used_exact_fallback = true;
    }
    auto f = exact().witness_at(s, d);
    if (f && check(s, *f).accepted) {
      out.witness = std::move(f);
      out.certified = true;
    } else if (f) {
      throw DisagreementError("oracle witness rejected by the colon check over Q");
    }
    return out;
  }

  /// Least degree of a witness for P_S, searching d = 0, 1, ..., d_max. The
  /// default cap is the degree of the product witness, so the search always ends.
  LocalEntry local(std::size_t s, std::optional<int> d_max = std::nullopt) {
    LocalEntry e;
    e.cut_set = exact_primes_[s].vertices();
    const Polynomial<Rational> bound = local_bound_witness(graph_, cut_sets(), s);
    int cap = bound.degree();
    if (d_max) cap = std::min(cap, *d_max);
    if (opts_.d_max) cap = std::min(cap, *opts_.d_max);
    for (int d = 0; d <= cap; ++d) {
      WitnessSearch w = witness_at(s, d);
      if (w.witness) {
        e.value = d;
        e.lower_bound = d;
        e.upper_bound = d;
        e.witness = std::move(w.witness);
        e.certified = w.certified;
        return e;
      }
      e.lower_bound = d + 1;
    }
    if (cap == bound.degree()) {
      throw DisagreementError("no witness found up to the degree of the product witness for " +
                              format_set(e.cut_set));
    }
    return e;
  }

  std::vector<CutSet> cut_sets() const {
    std::vector<CutSet> out;
    for (const auto& p : exact_primes_) out.push_back(p.cut_set());
    return out;
  }

 private:
  OracleContext<Rational>& exact() {
    if (!exact_ctx_) exact_ctx_ = std::make_unique<OracleContext<Rational>>(graph_, lim_);
    return *exact_ctx_;
  }

  Graph graph_;
  OracleOptions opts_;
  Limits lim_;
  std::unique_ptr<BinomialEdgeIdeal<Rational>> exact_ideal_;
  std::vector<PrimeComponent<Rational>> exact_primes_;
  std::unique_ptr<OracleContext<F>> modp_;
  std::unique_ptr<OracleContext<Rational>> exact_ctx_;
};

using Oracle = BasicOracle<SearchField>;

// ---------------------------------------------------------------------------
// v_∅

struct VEmptyResult {
  int value = 0;
  DominatingSet dominating;            // route 1: minimum connected dominating set
  std::optional<int> intersection;     // route 2: least generator degree of ∩ m_S over nonempty cut sets
  std::optional<Monomial> generator;
};

/// Minimal generators of ∩ m_S over the nonempty cut sets, m_S = (x_s, y_s : s ∈ S).
inline std::vector<Monomial> cut_set_intersection(const Graph& g, const std::vector<CutSet>& cuts,
                                                  std::size_t cap = 20000) {
  const VariableSpace space = VariableSpace::binomial(g.order());
  std::vector<Monomial> gens{Monomial{}};
  for (const CutSet& c : cuts) {
    if (c.vertices == 0) continue;
    std::vector<Monomial> vars;
    for_each_member(c.vertices, [&](Vertex v) {
      vars.push_back(Monomial::variable(space.x(v)));
      vars.push_back(Monomial::variable(space.y(v)));
    });
    std::vector<Monomial> next;
    for (const Monomial& m : gens) {
      if (std::any_of(vars.begin(), vars.end(), [&](const Monomial& x) { return x.divides(m); })) {
        next.push_back(m);
        continue;
      }
      for (const Monomial& x : vars) next.push_back(m * x);
    }
    gens = minimalize(std::move(next));
    if (gens.size() > cap) throw ResourceCapError("intersection of the m_S exceeds " + std::to_string(cap) + " generators");
  }
  return gens;
}

inline VEmptyResult v_empty(const Graph& g, const Limits& lim = default_limits()) {
  if (!is_connected(g)) throw InvalidArgument("v_empty expects a connected graph");
  VEmptyResult out;
  if (is_complete(g)) {
    out.value = 0;
  } else {
    out.dominating = min_connected_dominating_set(g, lim);
    out.value = out.dominating.size;
  }
  try {
    const auto gens = cut_set_intersection(g, enumerate_cut_sets(g, lim));
    auto best = std::min_element(gens.begin(), gens.end(),
                                 [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    out.intersection = best->degree();
    out.generator = *best;
  } catch (const ResourceCapError&) {
    // route 2 unavailable at this size; route 1 stands alone
  }
  if (out.intersection && *out.intersection != out.value) {
    throw DisagreementError("v_empty: connected domination number " + std::to_string(out.value) +
                            " differs from the cut-set intersection degree " + std::to_string(*out.intersection));
  }
  return out;
}

/// Global oracle: increasing degree, all cut sets per degree; the first degree
/// with a witness is v(J_G). v_∅ caps the search.
template <class F = SearchField>
VReport v_oracle(const Graph& g, OracleOptions opts = {}, const Limits& lim = default_limits()) {
  BasicOracle<F> oracle(g, opts, lim);
  VReport r;
  r.graph = g;
  r.field = oracle.field();
  r.v_empty = v_empty(g, lim).value;
  const std::size_t np = oracle.primes().size();
  for (std::size_t i = 0; i < np; ++i) {
    LocalEntry e;
    e.cut_set = oracle.primes()[i].vertices();
    r.locals.push_back(e);
  }
  int cap = r.v_empty;
  if (opts.d_max) cap = std::min(cap, *opts.d_max);
  for (int d = 0; d <= cap && !r.global; ++d) {
    for (std::size_t i = 0; i < np; ++i) {
      WitnessSearch w = oracle.witness_at(i, d);
      LocalEntry& e = r.locals[i];
      if (w.witness) {
        e.value = d;
        e.lower_bound = d;
        e.upper_bound = d;
        e.witness = std::move(w.witness);
        e.certified = w.certified;
        if (!r.global) {
          r.global = d;
          r.global_cut_set = e.cut_set;
        }
      } else {
        e.lower_bound = d + 1;
      }
    }
  }
  if (!r.global) {
    if (cap == r.v_empty) throw DisagreementError("no witness up to v_empty = " + std::to_string(r.v_empty));
    r.caps_hit.push_back("degree cap " + std::to_string(cap) + " reached before a witness was found");
    return r;
  }
  if (opts.all_locals) {
    for (std::size_t i = 0; i < np; ++i) {
      if (r.locals[i].value) continue;
      LocalEntry e = oracle.local(i);
      if (!e.value) r.caps_hit.push_back("local search for " + format_set(e.cut_set) + " stopped at the degree cap");
      r.locals[i] = std::move(e);
    }
  }
  r.complete = true;
  return r;
}

// ---------------------------------------------------------------------------
// Witness constructions

struct Witness {
  VertexSet cut_set = 0;
  Polynomial<Rational> f;
  std::string construction;
};

inline Polynomial<Rational> x_product(const VariableSpace& space, VertexSet s) {
  return Polynomial<Rational>::term(square_free_monomial(space, s));
}

/// f_S f_{D_S} with the shared split; degree 2|S| + |D_S|.
inline Witness witness_cm_closed(const Graph& g, const CliquePathStructure& cps, VertexSet s) {
  const VariableSpace space = VariableSpace::binomial(g.order());
  const CmClosedSplit split = cm_closed_split(g, cps, s);
  Polynomial<Rational> f = x_product(space, split.d);
  for (const auto& [a, b] : split.factors) f = f * edge_binomial<Rational>(space, a, b);
  return {s, std::move(f), "cm-closed: f_S f_{D_S}"};
}

/// ∏_{s ∈ S} f_{s-1, s+1} times x over the interior vertices of the path components.
inline Witness witness_cycle(int n, VertexSet s) {
  const Graph c = build(FamilySpec::cycle(n)).graph;
  if (s == 0) throw InvalidArgument("the cycle recipe needs a nonempty cut set; use v_empty for S = {}");
  if (!is_cut_set(c, s)) throw InvalidArgument(format_set(s) + " is not a cut set of C_n");
  const VariableSpace space = VariableSpace::binomial(n);
  VertexSet interior = 0;
  for (VertexSet comp : components(c, c.vertices() & ~s)) {
    for_each_member(comp, [&](Vertex v) {
      if (size_of(c.neighbours(v) & comp) == 2) interior |= bit(v);
    });
  }
  Polynomial<Rational> f = x_product(space, interior);
  for_each_member(s, [&](Vertex v) {
    const auto nb = members(c.neighbours(v));
    f = f * edge_binomial<Rational>(space, nb[0], nb[1]);
  });
  return {s, std::move(f), "cycle: prod f_{s_i s_j} prod_{D_S} x"};
}

/// C_4, S nonempty: G \ S is two vertices a_1, a_2 and f = f_{a_1 a_2}.
inline Witness witness_c4(VertexSet s) {
  const Graph c = build(FamilySpec::cycle(4)).graph;
  if (s == 0 || !is_cut_set(c, s)) throw InvalidArgument(format_set(s) + " is not a nonempty cut set of C_4");
  const auto rest = members(c.vertices() & ~s);
  return {s, edge_binomial<Rational>(VariableSpace::binomial(4), rest[0], rest[1]), "C_4: f_{a_1 a_2}"};
}

/// C_5, S nonempty: G \ S is an edge {a_1, a_2} and a vertex a_3; f = f_{a_1 a_3} x_{a_2}.
/// a_1 is the smaller endpoint of the edge.
inline Witness witness_c5(VertexSet s) {
  const Graph c = build(FamilySpec::cycle(5)).graph;
  if (s == 0 || !is_cut_set(c, s)) throw InvalidArgument(format_set(s) + " is not a nonempty cut set of C_5");
  Vertex a1 = 0, a2 = 0, a3 = 0;
  for (VertexSet comp : components(c, c.vertices() & ~s)) {
    const auto vs = members(comp);
    if (vs.size() == 2) {
      a1 = vs[0];
      a2 = vs[1];
    } else {
      a3 = vs[0];
    }
  }
  const VariableSpace space = VariableSpace::binomial(5);
  return {s, edge_binomial<Rational>(space, a1, a3) * x_var<Rational>(space, a2), "C_5: f_{a_1 a_3} x_{a_2}"};
}

/// Heap labels. B_0: (∅, 1); B_1: (∅, x_1); B_2: ({1}, f_{2,3}); n >= 3: the B_{n-3}
/// pair extended by the level n-2 vertices s', each contributing f_{2s', 2s'+1}.
inline Witness witness_binary_tree(int n) {
  if (n < 0 || n > 5) throw InvalidArgument("binary tree level must lie in [0, 5]");
  const int order = (1 << (n + 1)) - 1;
  if (2 * order > kMaxVariables) throw ResourceCapError("B_" + std::to_string(n) + " exceeds the variable limit");
  const VariableSpace space = VariableSpace::binomial(order);
  std::function<Witness(int)> rec = [&](int level) -> Witness {
    if (level == 0) return {0, Polynomial<Rational>::constant(1), ""};
    if (level == 1) return {0, x_var<Rational>(space, 1), ""};
    if (level == 2) return {bit(1), edge_binomial<Rational>(space, 2, 3), ""};
    Witness w = rec(level - 3);
    for (int i = 1; i <= (1 << (level - 2)); ++i) {
      const Vertex p = binary_tree_node(level - 2, i);
      w.cut_set |= bit(p);
      w.f = w.f * edge_binomial<Rational>(space, 2 * p, 2 * p + 1);
    }
    return w;
  };
  Witness w = rec(n);
  w.construction = "binary tree: f * prod_{s' in S'} f_{s'_1 s'_2}";
  return w;
}

/// T = {v}, f = (∏_{i ≤ k-2} x_{v_{i_2}}) f_{v_{(k-1)_2} v_{k_2}}.
inline Witness witness_gkr(int k, int r) {
  const BuiltGraph b = build(FamilySpec::gkr(k, r));
  const VariableSpace space = VariableSpace::binomial(b.graph.order());
  auto mid = [&](int i) { return b.names.at("v" + std::to_string(i) + "_2"); };
  Polynomial<Rational> f = edge_binomial<Rational>(space, mid(k - 1), mid(k));
  for (int i = 1; i <= k - 2; ++i) f = f * x_var<Rational>(space, mid(i));
  return {bit(b.names.at("v")), std::move(f), "G(k,r): prod x_{v_{i_2}} f_{v_{(k-1)_2} v_{k_2}}"};
}

/// S = ∅ with a minimum connected dominating set A: f = ∏_{a ∈ A} x_a (f = 1 for complete graphs).
inline Witness witness_empty(const Graph& g, const Limits& lim = default_limits()) {
  const VEmptyResult ve = v_empty(g, lim);
  return {0, x_product(VariableSpace::binomial(g.order()), ve.dominating.vertices), "S = {}: prod_{a in A} x_a"};
}

// ---------------------------------------------------------------------------
// Monomial edge ideals

struct MonomialVResult {
  int value = 0;
  VertexSet witness = 0;             // A with (I : X_A) = (N(A)) a minimal prime
  std::optional<int> colon_route;    // least |B| with (I : X_B) generated by variables
};

/// min |A| over independent sets A with N(A) a minimal vertex cover; the second
/// route checks that the smallest squarefree X_B whose colon is generated by
/// variables has the same degree.
inline MonomialVResult v_monomial(const Graph& g, const Limits& lim = default_limits()) {
  if (g.edge_count() == 0) throw InvalidArgument("v_monomial needs at least one edge");
  if (g.order() > lim.max_exhaustive_vertices) {
    throw ResourceCapError("v_monomial capped at " + std::to_string(lim.max_exhaustive_vertices) + " vertices");
  }
  const MonomialEdgeIdeal ideal(g);
  const auto covers = minimal_vertex_covers(g, lim);
  const std::set<VertexSet> cover_set(covers.begin(), covers.end());
  MonomialVResult out;
  bool found = false;
  for (int k = 0; k <= g.order() && !found; ++k) {
    for_each_subset_of_size(g.vertices(), k, [&](VertexSet a) {
      if (found || !is_independent(g, a)) return found;
      const VertexSet nb = closed_neighbourhood(g, a) & ~a;
      if (!cover_set.count(nb)) return false;
      const auto colon = monomial_colon(ideal, a);
      std::vector<Monomial> expected;
      for_each_member(nb, [&](Vertex v) { expected.push_back(Monomial::variable(ideal.space.x(v))); });
      if (colon != minimalize(expected)) return false;
      out.value = k;
      out.witness = a;
      found = true;
      return true;
    });
  }
  for (int k = 0; k <= g.order() && !out.colon_route; ++k) {
    for_each_subset_of_size(g.vertices(), k, [&](VertexSet b) {
      if (out.colon_route) return true;
      if (monomial_ideal_contains(ideal.generators, square_free_monomial(ideal.space, b))) return false;
      const auto colon = monomial_colon(ideal, b);
      if (std::all_of(colon.begin(), colon.end(), [](const Monomial& m) { return m.degree() == 1; })) {
        out.colon_route = k;
        return true;
      }
      return false;
    });
  }
  if (!found || out.colon_route != out.value) {
    throw DisagreementError("monomial v-number routes disagree");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Powers of J_{K_n}

struct PowerResult {
  int value = 0;  // 2k - 2
  bool f_outside_power = false;
  std::vector<bool> generator_results;  // g f ∈ J^k per generator g
  bool upper_certified = false;
  std::optional<bool> lower_confirmed;  // tiny oracle; unset when only cited
  std::string lower_method;
};

/// V_d = {f ∈ R_d : J f ⊆ J^k}; true when V_d ⊆ (J^k)_d, i.e. no witness in degree d.
inline bool no_power_witness_in_degree(const BinomialEdgeIdeal<Rational>& j, int k, int d,
                                       const Limits& lim = default_limits()) {
  const auto& gens = j.generators();
  const auto source = degree_basis(j.space(), d, lim);
  const GradedSubspace<Rational> target = power_graded_piece(j, k, d + 2, lim);
  const Echelon<Rational> target_e = target.echelon();
  const int nt = static_cast<int>(target.ambient_dim());
  const int blocks = static_cast<int>(gens.size());
  Echelon<Rational> e(static_cast<std::size_t>(blocks * nt) + source->size());
  for (std::size_t c = 0; c < source->size(); ++c) {
    SparseRow<Rational> row;
    for (int b = 0; b < blocks; ++b) {
      const auto image = target_e.reduce(coordinates(gens[static_cast<std::size_t>(b)].times((*source)[c]), *target.basis));
      for (const auto& [col, v] : image) row.emplace_back(b * nt + col, v);
    }
    row.emplace_back(blocks * nt + static_cast<int>(c), Rational(1));
    e.insert(row);
  }
  const GradedSubspace<Rational> power_d = power_graded_piece(j, k, d, lim);
  for (const auto& row : e.rows()) {
    if (row.front().first < blocks * nt) continue;
    SparseRow<Rational> kernel;
    for (const auto& [col, v] : row) kernel.emplace_back(col - blocks * nt, v);
    if (!power_d.contains(from_coordinates(kernel, *source))) return false;
  }
  return true;
}

/// f = f_12^{k-1}: f ∉ J^k and J f ⊆ J^k give (J^k : f) = J, using Ass(J^k) = {J}
/// for complete graphs (imported, not verified). Lower bound by the tiny oracle
/// for n = 2, k <= 3; otherwise cited.
inline PowerResult v_power_complete(int n, int k, const Limits& lim = default_limits()) {
  if (n < 2 || k < 1) throw InvalidArgument("v_power_complete needs n >= 2 and k >= 1");
  const BinomialEdgeIdeal<Rational> j(build(FamilySpec::complete(n)).graph, lim);
  PowerResult out;
  out.value = 2 * k - 2;
  Polynomial<Rational> f = Polynomial<Rational>::constant(1);
  for (int i = 1; i < k; ++i) f = f * edge_binomial<Rational>(j.space(), 1, 2);
  out.f_outside_power = !power_graded_member(f, j, k, lim);
  bool all = true;
  for (const auto& g : j.generators()) {
    const bool ok = power_graded_member(g * f, j, k, lim);
    out.generator_results.push_back(ok);
    all = all && ok;
  }
  out.upper_certified = out.f_outside_power && all;
  if (n == 2 && k <= 3) {
    bool ok = true;
    for (int d = 0; d < out.value && ok; ++d) ok = no_power_witness_in_degree(j, k, d, lim);
    out.lower_confirmed = ok;
    out.lower_method = "oracle";
  } else {
    out.lower_method = "cited";
  }
  return out;
}

}  // namespace vnum

#endif  // VNUM_VNUM_HPP
