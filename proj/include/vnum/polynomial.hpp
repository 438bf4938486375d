#ifndef VNUM_POLYNOMIAL_HPP
#define VNUM_POLYNOMIAL_HPP

// Exact multivariate polynomials under the lexicographic order
// x_1 > ... > x_n > y_1 > ... > y_n, marked bases, the division algorithm and
// Buchberger's criterion.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/field.hpp"

namespace vnum {

inline constexpr int kMaxVariables = 64;

/// Exponent vector. Variable index 0 is the largest variable, so the defaulted
/// three-way comparison is exactly the lexicographic monomial order.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index, int power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }

  void set(int i, int e) {
    if (i < 0 || i >= kMaxVariables) throw InvalidArgument("variable index out of range");
    if (e < 0 || e > 255) throw InvalidArgument("exponent out of range");
    deg_ = static_cast<std::uint16_t>(deg_ - exp_[static_cast<std::size_t>(i)] + e);
    exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }

  int degree() const { return deg_; }

  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  bool squarefree() const {
    for (auto e : exp_) {
      if (e > 1) return false;
    }
    return true;
  }

  /// Bitmask of the variables occurring (index i -> bit i).
  std::uint64_t support() const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      if (exp_[i] != 0) s |= std::uint64_t{1} << i;
    }
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
      int e = a.exp_[i] + b.exp_[i];
      if (e > 255) throw InvalidArgument("exponent overflow");
      out.exp_[i] = static_cast<std::uint8_t>(e);
    }
    out.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    return out;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
      if (b.exp_[i] > a.exp_[i]) throw InvalidArgument("monomial division is not exact");
      out.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
    }
    out.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
      out.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      out.deg_ = static_cast<std::uint16_t>(out.deg_ + out.exp_[i]);
    }
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : exp_) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  auto operator<=>(const Monomial& other) const { return exp_ <=> other.exp_; }
  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

 private:
  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Names and indices of the ring variables. In the binomial context the ring
/// is K[x_1..x_n, y_1..y_n] with x_i at index i-1 and y_i at index n+i-1; in the
/// monomial context it is K[x_1..x_n].
class VariableSpace {
 public:
  VariableSpace() = default;
  VariableSpace(int n, bool binomial) : n_(n), binomial_(binomial) {
    if (n < 0 || count() > kMaxVariables) {
      throw ResourceCapError("polynomial ring limited to " + std::to_string(kMaxVariables) + " variables");
    }
  }

  static VariableSpace binomial(int n) { return {n, true}; }
  static VariableSpace monomial(int n) { return {n, false}; }

  int n() const { return n_; }
  bool is_binomial() const { return binomial_; }
  int count() const { return binomial_ ? 2 * n_ : n_; }

  int x(int i) const {
    check(i);
    return i - 1;
  }
  int y(int i) const {
    if (!binomial_) throw InvalidArgument("no y variables in the monomial context");
    check(i);
    return n_ + i - 1;
  }

  std::string name(int index) const {
    if (index < n_) return "x_" + std::to_string(index + 1);
    return "y_" + std::to_string(index - n_ + 1);
  }

  bool operator==(const VariableSpace&) const = default;

 private:
  void check(int i) const {
    if (i < 1 || i > n_) throw InvalidArgument("vertex " + std::to_string(i) + " has no variable");
  }
  int n_ = 0;
  bool binomial_ = true;
};

template <class K>
class Polynomial {
 public:
  using Terms = std::map<Monomial, K, std::greater<>>;

  Polynomial() = default;

  static Polynomial constant(const K& c) { return term(Monomial{}, c); }

  static Polynomial term(const Monomial& m, const K& c = K(1)) {
    Polynomial p;
    p.add_term(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  const Monomial& leading_monomial() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  const K& leading_coefficient() const {
    require_nonzero();
    return terms_.begin()->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) return false;
    }
    return true;
  }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, K(-c));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const { return scaled(K(-1)); }

  Polynomial scaled(const K& s) const {
    Polynomial out;
    if (is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, K(c * s));
    return out;
  }

  /// c * m * this
  Polynomial times(const Monomial& m, const K& c = K(1)) const {
    Polynomial out;
    if (is_zero(c)) return out;
    for (const auto& [t, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), t * m, K(a * c));
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [m, c] : b.terms_) out += a.times(m, c);
    return out;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Coefficient-wise conversion into another field.
  template <class L, class Convert>
  Polynomial<L> map_coefficients(Convert&& convert) const {
    Polynomial<L> out;
    for (const auto& [m, c] : terms_) out.add_term(m, convert(c));
    return out;
  }

 private:
  static bool is_zero(const K& c) { return FieldTraits<K>::is_zero(c); }
  void require_nonzero() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  }
  Terms terms_;
};

template <class K>
Polynomial<K> to_field(const Polynomial<Rational>& p) {
  return p.template map_coefficients<K>([](const Rational& c) { return FieldTraits<K>::from_rational(c); });
}

/// Lifts prime-field coefficients to rationals by rational reconstruction.
template <class K>
std::optional<Polynomial<Rational>> lift_to_rationals(const Polynomial<K>& p) {
  Polynomial<Rational> out;
  for (const auto& [m, c] : p.terms()) {
    auto q = FieldTraits<K>::lift(c);
    if (!q) return std::nullopt;
    out.add_term(m, *q);
  }
  return out;
}

template <class K>
Polynomial<K> variable(int index) {
  return Polynomial<K>::term(Monomial::variable(index));
}

inline std::string format_monomial(const Monomial& m, const VariableSpace& space) {
  std::string out;
  for (int i = 0; i < space.count(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += space.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// "x_1*y_2 - x_2*y_1", "3*x_1^2 + 1"; terms in decreasing lex order.
template <class K>
std::string format_polynomial(const Polynomial<K>& p, const VariableSpace& space) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string coeff = FieldTraits<K>::to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = format_monomial(m, space);
    if (mono == "1") {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Marked bases and division

template <class K>
struct MarkedPolynomial {
  Polynomial<K> poly;
  Monomial lead;
};

/// Polynomials with a designated leading term (the lex-largest term).
template <class K>
class MarkedBasis {
 public:
  MarkedBasis() = default;
  explicit MarkedBasis(std::vector<Polynomial<K>> polys) {
    for (auto& p : polys) add(std::move(p));
  }

  void add(Polynomial<K> p) {
    if (p.is_zero()) throw InvalidArgument("zero polynomial in a marked basis");
    Monomial lead = p.leading_monomial();
    elements_.push_back({std::move(p), lead});
  }

  const std::vector<MarkedPolynomial<K>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : elements_) out.push_back(e.lead);
    return out;
  }

  /// Index of the first element whose leading monomial divides m.
  std::optional<std::size_t> reducer(const Monomial& m) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].lead.divides(m)) return i;
    }
    return std::nullopt;
  }

 private:
  std::vector<MarkedPolynomial<K>> elements_;
};

/// Remainder of f on division by the basis: always cancels the lex-largest
/// reducible term first, using the first basis element whose leading term divides it.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const MarkedBasis<K>& basis) {
  Polynomial<K> rest = f;
  Polynomial<K> remainder;
  while (!rest.is_zero()) {
    const Monomial t = rest.leading_monomial();
    const K c = rest.leading_coefficient();
    if (auto i = basis.reducer(t)) {
      const auto& g = basis.elements()[*i];
      rest -= g.poly.times(t / g.lead, K(c / g.poly.leading_coefficient()));
    } else {
      remainder.add_term(t, c);
      rest.add_term(t, K(-c));
    }
  }
  return remainder;
}

template <class K>
Polynomial<K> s_polynomial(const MarkedPolynomial<K>& a, const MarkedPolynomial<K>& b) {
  const Monomial l = lcm(a.lead, b.lead);
  return a.poly.times(l / a.lead, K(K(1) / a.poly.leading_coefficient())) -
         b.poly.times(l / b.lead, K(K(1) / b.poly.leading_coefficient()));
}

struct BuchbergerFailure {
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Checks that every S-polynomial reduces to zero. With skip_coprime the
/// pairs with coprime leading terms are skipped (first criterion).
template <class K>
std::optional<BuchbergerFailure> buchberger_check(const MarkedBasis<K>& basis, bool skip_coprime = false) {
  const auto& el = basis.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (skip_coprime && el[i].lead.coprime(el[j].lead)) continue;
      if (!normal_form(s_polynomial(el[i], el[j]), basis).is_zero()) return BuchbergerFailure{i, j};
    }
  }
  return std::nullopt;
}

/// Reduced: monic, and no term of any element is divisible by another element's leading term.
template <class K>
bool is_reduced(const MarkedBasis<K>& basis) {
  const auto& el = basis.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (!(el[i].poly.leading_coefficient() == K(1))) return false;
    for (const auto& [m, c] : el[i].poly.terms()) {
      for (std::size_t j = 0; j < el.size(); ++j) {
        if (j != i && el[j].lead.divides(m)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Graded monomial bases

/// Calls f on every monomial of degree d in `nvars` variables, in lex-descending order.
/// `prune(m)` is consulted on partial monomials; returning true skips all extensions.
template <class F, class Prune>
void for_each_monomial(int nvars, int d, F&& f, Prune&& prune) {
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (left == 0) {
      f(m);
      return;
    }
    if (var == nvars) return;
    for (int e = left; e >= 0; --e) {
      if (var == nvars - 1 && e != left) break;
      m.set(var, e);
      if (e > 0 && prune(m)) continue;
      rec(var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(0, d);
}

template <class F>
void for_each_monomial(int nvars, int d, F&& f) {
  for_each_monomial(nvars, d, std::forward<F>(f), [](const Monomial&) { return false; });
}

/// Monomials of one degree in lex-descending order, with reverse lookup.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monos) : monos_(std::move(monos)) {
    index_.reserve(monos_.size());
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<int>(i));
  }

  static MonomialIndex all_of_degree(int nvars, int d, std::size_t cap) {
    std::vector<Monomial> monos;
    for_each_monomial(nvars, d, [&](const Monomial& m) {
      if (monos.size() >= cap) {
        throw ResourceCapError("graded piece dimension exceeds cap " + std::to_string(cap));
      }
      monos.push_back(m);
    });
    return MonomialIndex(std::move(monos));
  }

  std::size_t size() const { return monos_.size(); }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const { return monos_; }

  std::optional<int> find(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int at(const Monomial& m) const {
    auto i = find(m);
    if (!i) throw InvalidArgument("monomial outside the graded basis");
    return *i;
  }

 private:
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
};

}  // namespace vnum

#endif  // VNUM_POLYNOMIAL_HPP
