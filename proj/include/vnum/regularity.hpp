#ifndef VNUM_REGULARITY_HPP
#define VNUM_REGULARITY_HPP

// Castelnuovo-Mumford regularity of R/I for squarefree monomial I, by
// Hochster's formula: with Δ the Stanley-Reisner complex of I,
//     reg(R/I) = max { q + 1 : H̃_q(Δ_σ) ≠ 0 },
// σ ranging over the nonempty unions of generator supports (the lcm lattice;
// the multigraded Betti numbers vanish elsewhere). Convention: reg(R/I) = reg(I) - 1.
//
// Speed-up: if the link of a vertex w in Δ_σ is a cone, Δ_σ is homotopy
// equivalent to Δ_{σ \ w}, so w is dropped; a cone Δ_σ has no reduced homology.
// The surviving complexes are computed once each by boundary-matrix ranks.

#include <algorithm>
#include <bit>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/field.hpp"
#include "vnum/graph.hpp"
#include "vnum/ideals.hpp"
#include "vnum/limits.hpp"
#include "vnum/linalg.hpp"

namespace vnum {

using VarSet = std::uint64_t;
using HomologyField = DefaultPrimeField;

/// Squarefree monomial ideal given by the supports of its minimal generators.
struct SquarefreeIdeal {
  int nvars = 0;
  std::vector<VarSet> generators;
};

inline SquarefreeIdeal squarefree_ideal(const std::vector<Monomial>& gens, int nvars) {
  SquarefreeIdeal out;
  out.nvars = nvars;
  for (const Monomial& m : minimalize(gens)) {
    if (!m.squarefree()) throw InvalidArgument("regularity needs a squarefree monomial ideal");
    out.generators.push_back(m.support());
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

/// Reduced Betti numbers dim H̃_q(Δ_σ) for q = -1, 0, 1, ... (index q + 1).
template <class K>
std::vector<std::size_t> reduced_homology(const SquarefreeIdeal& ideal, VarSet sigma) {
  std::vector<VarSet> gens;
  for (VarSet g : ideal.generators)
    if ((g & ~sigma) == 0) gens.push_back(g);
  // faces by size
  std::vector<std::vector<VarSet>> faces(1, std::vector<VarSet>{0});
  std::vector<int> verts;
  for (int i = 0; i < 64; ++i)
    if ((sigma >> i) & 1) verts.push_back(i);
  std::function<void(std::size_t, VarSet, std::size_t)> rec = [&](std::size_t from, VarSet face, std::size_t size) {
    for (std::size_t i = from; i < verts.size(); ++i) {
      const VarSet next = face | (VarSet{1} << verts[i]);
      bool ok = true;
      for (VarSet g : gens) {
        if ((g & ~next) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (faces.size() <= size + 1) faces.emplace_back();
      faces[size + 1].push_back(next);
      rec(i + 1, next, size + 1);
    }
  };
  rec(0, 0, 0);
  // rank of the boundary map from faces of size s to faces of size s - 1
  std::vector<std::size_t> rank(faces.size() + 1, 0);
  for (std::size_t s = 1; s < faces.size(); ++s) {
    std::unordered_map<VarSet, int> index;
    for (std::size_t i = 0; i < faces[s - 1].size(); ++i) index.emplace(faces[s - 1][i], static_cast<int>(i));
    Echelon<K> e(faces[s - 1].size());
    for (VarSet f : faces[s]) {
      SparseRow<K> row;
      int pos = 0;
      for (VarSet rest = f; rest != 0; rest &= rest - 1, ++pos) {
        const VarSet v = rest & (~rest + 1);
        row.emplace_back(index.at(f & ~v), pos % 2 == 0 ? K(1) : K(-1));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      e.insert(row);
    }
    rank[s] = e.rank();
  }
  std::vector<std::size_t> betti(faces.size(), 0);
  for (std::size_t s = 0; s < faces.size(); ++s) {
    betti[s] = faces[s].size() - rank[s] - rank[s + 1];
  }
  return betti;
}

/// Largest q with H̃_q ≠ 0, or nullopt when all reduced homology vanishes.
inline std::optional<int> top_homology(const std::vector<std::size_t>& betti) {
  for (std::size_t i = betti.size(); i-- > 0;) {
    if (betti[i] != 0) return static_cast<int>(i) - 1;
  }
  return std::nullopt;
}

/// Drops vertices whose link is a cone. Returns nullopt when Δ_σ itself is a cone.
inline std::optional<VarSet> collapse(const SquarefreeIdeal& ideal, VarSet sigma) {
  std::vector<VarSet> gens, with, without, minimal;
  while (true) {
    gens.clear();
    VarSet used = 0;
    for (VarSet g : ideal.generators) {
      if ((g & ~sigma) == 0) {
        gens.push_back(g);
        used |= g;
      }
    }
    // variables lying in a generator of their own are not vertices
    for (VarSet g : gens) {
      if (std::popcount(g) == 1) sigma &= ~g;
    }
    if ((sigma & ~used) != 0) return std::nullopt;
    bool dropped = false;
    for (VarSet rest = sigma; rest != 0 && !dropped; rest &= rest - 1) {
      const VarSet w = rest & (~rest + 1);
      with.clear();
      without.clear();
      for (VarSet g : gens) ((g & w) ? with : without).push_back(g & ~w);
      VarSet link_used = 0;
      for (VarSet b : with) link_used |= b;
      for (VarSet a : without) {
        bool redundant = false;
        for (VarSet b : with) {
          if ((b & ~a) == 0) {
            redundant = true;
            break;
          }
        }
        if (!redundant) link_used |= a;
      }
      if ((sigma & ~w & ~link_used) != 0) {
        sigma &= ~w;
        dropped = true;
      }
    }
    if (!dropped) return sigma;
  }
}

/// All nonempty unions of generator supports.
inline std::vector<VarSet> lcm_lattice(const SquarefreeIdeal& ideal, std::size_t cap = 4000000) {
  std::unordered_set<VarSet> seen;
  std::vector<VarSet> order;
  for (VarSet g : ideal.generators) {
    const std::size_t before = order.size();
    if (seen.insert(g).second) order.push_back(g);
    for (std::size_t i = 0; i < before; ++i) {
      const VarSet u = order[i] | g;
      if (seen.insert(u).second) order.push_back(u);
    }
    if (order.size() > cap) throw ResourceCapError("lcm lattice exceeds " + std::to_string(cap) + " elements");
  }
  std::sort(order.begin(), order.end());
  return order;
}

struct RegOptions {
  bool collapse = true;          // link-cone reduction before computing homology
  bool rational_recheck = true;  // recompute every surviving complex over Q
};

struct RegResult {
  int value = 0;
  VarSet sigma = 0;  // a lattice element attaining the maximum
  std::size_t lattice_size = 0;
  std::size_t complexes = 0;  // distinct complexes whose homology was computed
  bool rational_rechecked = false;
};

inline RegResult reg_monomial(const SquarefreeIdeal& ideal, RegOptions opts = {},
                              const Limits& lim = default_limits()) {
  if (ideal.nvars > lim.max_reg_variables) {
    throw ResourceCapError("regularity capped at " + std::to_string(lim.max_reg_variables) + " variables");
  }
  RegResult out;
  if (ideal.generators.empty()) return out;
  const auto lattice = lcm_lattice(ideal);
  out.lattice_size = lattice.size();
  std::unordered_map<VarSet, std::optional<int>> computed;  // reduced σ -> top homology degree
  for (VarSet sigma : lattice) {
    std::optional<VarSet> core = opts.collapse ? collapse(ideal, sigma) : std::optional<VarSet>(sigma);
    if (!core) continue;
    auto it = computed.find(*core);
    if (it == computed.end()) {
      it = computed.emplace(*core, top_homology(reduced_homology<HomologyField>(ideal, *core))).first;
    }
    if (it->second && *it->second + 1 > out.value) {
      out.value = *it->second + 1;
      out.sigma = sigma;
    }
  }
  out.complexes = computed.size();
  if (opts.rational_recheck) {
    for (const auto& [core, top] : computed) {
      if (top_homology(reduced_homology<Rational>(ideal, core)) != top) {
        throw DisagreementError("homology over GF(p) differs from homology over Q");
      }
    }
    out.rational_rechecked = true;
  }
  return out;
}

inline SquarefreeIdeal edge_ideal(const Graph& g) {
  const MonomialEdgeIdeal i(g);
  return squarefree_ideal(i.generators, g.order());
}

inline SquarefreeIdeal initial_ideal_of(const Graph& g, const Limits& lim = default_limits()) {
  const BinomialEdgeIdeal<DefaultPrimeField> j(g, lim);
  return squarefree_ideal(j.initial_ideal(), 2 * g.order());
}

/// reg(R/J_G) read off from reg(R/in(J_G)); equality for squarefree initial
/// ideals is an imported theorem, and every use is paired with a formula check.
inline RegResult reg_binomial(const Graph& g, RegOptions opts = {}, const Limits& lim = default_limits()) {
  if (!is_connected(g)) throw InvalidArgument("reg_binomial expects a connected graph");
  return reg_monomial(initial_ideal_of(g, lim), opts, lim);
}

/// For chordal g, reg(R/I(G)) equals the induced matching number.
inline int reg_chordal_edge(const Graph& g, const Limits& lim = default_limits()) {
  if (!is_chordal(g)) throw InvalidArgument("reg_chordal_edge needs a chordal graph");
  return induced_matching_number(g, lim);
}

}  // namespace vnum

#endif  // VNUM_REGULARITY_HPP
