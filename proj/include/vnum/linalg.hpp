#ifndef VNUM_LINALG_HPP
#define VNUM_LINALG_HPP

// Exact sparse row reduction and graded pieces of homogeneous ideals.
//
// A graded piece I_d is stored as the row space of an echelon matrix whose
// columns are the degree-d monomials in lex-descending order.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/field.hpp"
#include "vnum/limits.hpp"
#include "vnum/polynomial.hpp"

namespace vnum {

/// Sparse vector: (column, value) pairs with strictly increasing columns and nonzero values.
template <class K>
using SparseRow = std::vector<std::pair<int, K>>;

/// Incremental row-echelon form. Every stored row is fully reduced against the
/// rows stored before it and has leading coefficient 1. Not thread-safe: the
/// reduction reuses a dense scratch buffer.
template <class K>
class Echelon {
 public:
  explicit Echelon(std::size_t ncols = 0)
      : ncols_(ncols), pivot_row_(ncols, -1), scratch_(ncols, K(0)), queued_(ncols, 0) {}

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow<K>>& rows() const { return rows_; }
  bool is_pivot(int col) const { return pivot_row_[static_cast<std::size_t>(col)] >= 0; }

  /// Remainder of `row` after eliminating every pivot column.
  SparseRow<K> reduce(const SparseRow<K>& row) const {
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    std::vector<int> touched;
    auto touch = [&](int c) {
      auto uc = static_cast<std::size_t>(c);
      if (!queued_[uc]) {
        queued_[uc] = 1;
        heap.push(c);
        touched.push_back(c);
      }
    };
    for (const auto& [c, v] : row) {
      scratch_[static_cast<std::size_t>(c)] += v;
      touch(c);
    }
    SparseRow<K> out;
    while (!heap.empty()) {
      const int c = heap.top();
      heap.pop();
      const auto uc = static_cast<std::size_t>(c);
      const K a = scratch_[uc];
      if (FieldTraits<K>::is_zero(a)) continue;
      const int p = pivot_row_[uc];
      if (p < 0) {
        out.emplace_back(c, a);
        continue;
      }
      for (const auto& [c2, v2] : rows_[static_cast<std::size_t>(p)]) {
        scratch_[static_cast<std::size_t>(c2)] -= a * v2;
        touch(c2);
      }
    }
    for (int c : touched) {
      scratch_[static_cast<std::size_t>(c)] = K(0);
      queued_[static_cast<std::size_t>(c)] = 0;
    }
    return out;
  }

  /// Adds a row; returns true when the rank grew.
  bool insert(const SparseRow<K>& row) {
    SparseRow<K> r = reduce(row);
    if (r.empty()) return false;
    const K inv = K(1) / r.front().second;
    for (auto& [c, v] : r) v *= inv;
    pivot_row_[static_cast<std::size_t>(r.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseRow<K>& row) const { return reduce(row).empty(); }

  /// The stored rows in reduced row-echelon form, sorted by pivot column.
  std::vector<SparseRow<K>> reduced_rows() const {
    std::vector<SparseRow<K>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
      SparseRow<K> tail(r.begin() + 1, r.end());
      SparseRow<K> rr{r.front()};
      for (auto& term : reduce(tail)) rr.push_back(std::move(term));
      out.push_back(std::move(rr));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    return out;
  }

  /// Dense vector x with x[free_col] = 1, zero on the other non-pivot columns,
  /// and every stored row orthogonal to x. Requires free_col not a pivot.
  std::vector<K> kernel_vector(int free_col) const {
    if (is_pivot(free_col)) throw InvalidArgument("kernel_vector needs a non-pivot column");
    std::vector<K> x(ncols_, K(0));
    x[static_cast<std::size_t>(free_col)] = K(1);
    std::vector<int> order;
    order.reserve(rows_.size());
    for (const auto& r : rows_) order.push_back(r.front().first);
    std::sort(order.rbegin(), order.rend());
    for (int p : order) {
      const auto& r = rows_[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(p)])];
      K s(0);
      for (std::size_t i = 1; i < r.size(); ++i) s += r[i].second * x[static_cast<std::size_t>(r[i].first)];
      x[static_cast<std::size_t>(p)] = -s;
    }
    return x;
  }

 private:
  std::size_t ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow<K>> rows_;
  mutable std::vector<K> scratch_;
  mutable std::vector<char> queued_;
};

template <class K>
K dot(const SparseRow<K>& row, const std::vector<K>& x) {
  K s(0);
  for (const auto& [c, v] : row) s += v * x[static_cast<std::size_t>(c)];
  return s;
}

/// Coordinates of a homogeneous polynomial in a monomial basis; throws if a term falls outside.
template <class K>
SparseRow<K> coordinates(const Polynomial<K>& p, const MonomialIndex& basis) {
  SparseRow<K> row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) row.emplace_back(basis.at(m), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

template <class K>
Polynomial<K> from_coordinates(const SparseRow<K>& row, const MonomialIndex& basis) {
  Polynomial<K> p;
  for (const auto& [c, v] : row) p.add_term(basis[static_cast<std::size_t>(c)], v);
  return p;
}

/// A subspace of R_d given by an echelon basis.
template <class K>
struct GradedSubspace {
  int degree = 0;
  std::shared_ptr<const MonomialIndex> basis;
  std::vector<SparseRow<K>> rows;  // reduced row-echelon, sorted by pivot

  std::size_t dim() const { return rows.size(); }
  std::size_t ambient_dim() const { return basis->size(); }

  Echelon<K> echelon() const {
    Echelon<K> e(basis->size());
    for (const auto& r : rows) e.insert(r);
    return e;
  }

  bool contains(const Polynomial<K>& p) const {
    if (p.is_zero()) return true;
    return echelon().contains(coordinates(p, *basis));
  }
};

template <class K>
GradedSubspace<K> make_subspace(int d, std::shared_ptr<const MonomialIndex> basis, const Echelon<K>& e) {
  return GradedSubspace<K>{d, std::move(basis), e.reduced_rows()};
}

inline std::shared_ptr<const MonomialIndex> degree_basis(const VariableSpace& space, int d,
                                                         const Limits& lim = default_limits()) {
  return std::make_shared<const MonomialIndex>(MonomialIndex::all_of_degree(space.count(), d, lim.max_graded_dim));
}

/// I_d as the span of {m * g : g a generator, m a monomial, deg(m g) = d}.
template <class K>
GradedSubspace<K> graded_piece(const std::vector<Polynomial<K>>& generators, int d, const VariableSpace& space,
                               const Limits& lim = default_limits()) {
  auto basis = degree_basis(space, d, lim);
  Echelon<K> e(basis->size());
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InvalidArgument("graded_piece needs homogeneous generators");
    const int gd = g.degree();
    if (gd > d) continue;
    for_each_monomial(space.count(), d - gd, [&](const Monomial& m) { e.insert(coordinates(g.times(m), *basis)); });
  }
  return make_subspace(d, std::move(basis), e);
}

/// I_d as the kernel of the normal-form map of a Groebner basis: the rows m - NF(m).
template <class K>
GradedSubspace<K> graded_piece(const MarkedBasis<K>& gb, int d, const VariableSpace& space,
                               const Limits& lim = default_limits()) {
  auto basis = degree_basis(space, d, lim);
  Echelon<K> e(basis->size());
  for (const Monomial& m : basis->monomials()) {
    if (!gb.reducer(m)) continue;
    Polynomial<K> p = Polynomial<K>::term(m) - normal_form(Polynomial<K>::term(m), gb);
    e.insert(coordinates(p, *basis));
  }
  return make_subspace(d, std::move(basis), e);
}

template <class K>
struct SubspaceComparison {
  GradedSubspace<K> intersection;
  bool a_in_b = false;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
};

/// Zassenhaus: row-reduce [a | a] over [b | 0]; rows with zero left half span a ∩ b.
template <class K>
GradedSubspace<K> intersect(const GradedSubspace<K>& a, const GradedSubspace<K>& b) {
  if (a.degree != b.degree || a.ambient_dim() != b.ambient_dim()) {
    throw InvalidArgument("subspaces live in different graded pieces");
  }
  const int n = static_cast<int>(a.ambient_dim());
  Echelon<K> e(2 * a.ambient_dim());
  for (const auto& r : a.rows) {
    SparseRow<K> doubled = r;
    for (const auto& [c, v] : r) doubled.emplace_back(c + n, v);
    e.insert(doubled);
  }
  for (const auto& r : b.rows) e.insert(r);
  Echelon<K> out(a.ambient_dim());
  for (const auto& r : e.rows()) {
    if (r.front().first < n) continue;
    SparseRow<K> right;
    for (const auto& [c, v] : r) right.emplace_back(c - n, v);
    out.insert(right);
  }
  return make_subspace(a.degree, a.basis, out);
}

template <class K>
SubspaceComparison<K> compare(const GradedSubspace<K>& a, const GradedSubspace<K>& b) {
  SubspaceComparison<K> out{intersect(a, b), false, a.dim(), b.dim()};
  out.a_in_b = out.intersection.dim() == a.dim();
  return out;
}

}  // namespace vnum

#endif  // VNUM_LINALG_HPP
