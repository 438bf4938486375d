#ifndef VNUM_FIELD_HPP
#define VNUM_FIELD_HPP

// Coefficient fields: exact rationals (GMP) and prime fields Z/p with a
// compile-time modulus. Generic code uses only the arithmetic operators,
// construction from long, and the free functions below.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "vnum/error.hpp"

namespace vnum {

using Rational = mpq_class;

template <std::uint32_t P>
class Zp {
  static_assert(P >= 2, "modulus must be at least 2");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long long v) : v_(reduce(v)) {}  // NOLINT(google-explicit-constructor)

  constexpr std::uint32_t value() const { return v_; }

  /// Symmetric representative in (-p/2, p/2].
  constexpr long long symmetric() const {
    return v_ > P / 2 ? static_cast<long long>(v_) - static_cast<long long>(P) : static_cast<long long>(v_);
  }

  friend constexpr Zp operator+(Zp a, Zp b) { return from_raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} + b.v_) % P)); }
  friend constexpr Zp operator-(Zp a, Zp b) { return from_raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} + P - b.v_) % P)); }
  friend constexpr Zp operator*(Zp a, Zp b) { return from_raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % P)); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  Zp inverse() const {
    if (v_ == 0) throw InvalidArgument("division by zero in Z/" + std::to_string(P));
    std::int64_t a = v_, m = P, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Zp(x0);
  }

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.symmetric(); }

 private:
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  static constexpr Zp from_raw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  std::uint32_t v_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;
using DefaultPrimeField = Zp<kDefaultPrime>;

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::string name() { return "qq"; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static std::string to_string(const Rational& a) { return a.get_str(); }
  static Rational from_rational(const Rational& a) { return a; }
  static std::optional<Rational> lift(const Rational& a) { return a; }
};

template <std::uint32_t P>
struct FieldTraits<Zp<P>> {
  static std::string name() { return "fp:" + std::to_string(P); }
  static bool is_zero(Zp<P> a) { return a.value() == 0; }
  static std::string to_string(Zp<P> a) { return std::to_string(a.symmetric()); }

  static Zp<P> from_rational(const Rational& a) {
    mpz_class num = a.get_num() % P;
    mpz_class den = a.get_den() % P;
    if (den == 0) throw InvalidArgument("rational has denominator divisible by " + std::to_string(P));
    return Zp<P>(num.get_si()) / Zp<P>(den.get_si());
  }

  /// Rational reconstruction: the unique a/b with |a|, b <= sqrt(p/2)
  /// congruent to the residue, if any.
  static std::optional<Rational> lift(Zp<P> z) {
    long long r0 = P, r1 = z.value(), t0 = 0, t1 = 1;
    long long bound = 1;
    while ((bound + 1) * (bound + 1) * 2 <= static_cast<long long>(P)) ++bound;
    while (r1 > bound) {
      long long q = r0 / r1;
      long long r2 = r0 - q * r1;
      long long t2 = t0 - q * t1;
      r0 = r1;
      r1 = r2;
      t0 = t1;
      t1 = t2;
    }
    if (t1 == 0 || (t1 < 0 ? -t1 : t1) > bound) return std::nullopt;
    Rational q{mpz_class(static_cast<long>(r1)), mpz_class(static_cast<long>(t1))};
    q.canonicalize();
    return q;
  }
};

template <class K>
bool is_zero(const K& a) {
  return FieldTraits<K>::is_zero(a);
}

template <class K>
std::string field_name() {
  return FieldTraits<K>::name();
}

/// Primes accepted by "--field fp:P" style options.
inline constexpr std::uint32_t kSupportedPrimes[] = {2, 3, 101, 32003, 65521};

/// Calls f(K{}) with K the field named by `spec` ("qq" or "fp:P" for a supported P).
template <class F>
decltype(auto) with_field(const std::string& spec, F&& f) {
  if (spec == "qq") return f(Rational{});
  if (spec == "fp:2") return f(Zp<2>{});
  if (spec == "fp:3") return f(Zp<3>{});
  if (spec == "fp:101") return f(Zp<101>{});
  if (spec == "fp:32003") return f(Zp<32003>{});
  if (spec == "fp:65521") return f(Zp<65521>{});
  throw InvalidArgument("unsupported field '" + spec + "' (use qq or fp:P with P in {2,3,101,32003,65521})");
}

}  // namespace vnum

#endif  // VNUM_FIELD_HPP
