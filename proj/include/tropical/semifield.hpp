#pragma once

/**
 * @file semifield.hpp
 * @brief Commutative idempotent semifields and their elementary predicates.
 *
 * A semifield type K provides K::zero() (additive neutral, written 0̄),
 * K::one() (multiplicative neutral 1̄), free functions add/mul/inv and a
 * total natural order exposed through operator<=>. Addition is idempotent
 * (characteristic 1) and every nonzero element is invertible.
 *
 * Concrete instances:
 *   - MaxPlus: rationals with max and +, 0̄ = -inf.
 *   - MinPlus: order dual of MaxPlus (min and +, 0̄ = +inf).
 *   - F1: the two-element semifield {0, 1} with 1 + 1 = 1.
 *   - GroupMax<G>: any totally ordered abelian group with an adjoined bottom.
 */

#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "tropical/error.hpp"

namespace tropical {

using Rational = mpq_class;
using Integer = mpz_class;

template <class K>
concept Semifield = std::regular<K> && requires(const K a, const K b) {
  { K::zero() } -> std::same_as<K>;
  { K::one() } -> std::same_as<K>;
  { add(a, b) } -> std::same_as<K>;
  { mul(a, b) } -> std::same_as<K>;
  { inv(a) } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Semifields whose natural order (a <= b iff a + b = b) is total. The
/// ordering operator must agree with that natural order.
template <class K>
concept TotallyOrdered = Semifield<K> && requires(const K a, const K b) {
  { a <=> b } -> std::convertible_to<std::strong_ordering>;
};

/// Instances whose nonzero elements carry a rational magnitude, i.e. the
/// numeric max-plus/min-plus family. Used by the assignment fast path and the
/// Newton-polygon root finder.
template <class K>
concept RationalMagnitude = TotallyOrdered<K> && requires(const K a, Rational r) {
  { a.magnitude() } -> std::convertible_to<Rational>;
  { K(r) } -> std::same_as<K>;
};

// ---------------------------------------------------------------------------
// MaxPlus

class MaxPlus {
 public:
  /// Default-constructs 0̄.
  MaxPlus() = default;
  explicit MaxPlus(Rational m) : mag_(std::move(m)) { mag_->canonicalize(); }
  explicit MaxPlus(long m) : mag_(Rational(m)) {}

  static MaxPlus zero() { return MaxPlus(); }
  static MaxPlus one() { return MaxPlus(Rational(0)); }

  bool is_zero() const { return !mag_.has_value(); }

  /// Undefined on 0̄; check is_zero() first.
  const Rational& magnitude() const { return *mag_; }

  friend bool operator==(const MaxPlus& a, const MaxPlus& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return *a.mag_ == *b.mag_;
  }
  friend std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
    const int c = cmp(*a.mag_, *b.mag_);
    return c <=> 0;
  }

  friend MaxPlus add(const MaxPlus& a, const MaxPlus& b) { return a < b ? b : a; }
  friend MaxPlus mul(const MaxPlus& a, const MaxPlus& b) {
    if (a.is_zero() || b.is_zero()) return MaxPlus();
    return MaxPlus(Rational(*a.mag_ + *b.mag_));
  }
  friend MaxPlus inv(const MaxPlus& a) {
    if (a.is_zero()) throw NoInverse();
    return MaxPlus(Rational(-*a.mag_));
  }

 private:
  std::optional<Rational> mag_;
};

// ---------------------------------------------------------------------------
// MinPlus, stored as the max-plus element with negated magnitude.

class MinPlus {
 public:
  MinPlus() = default;
  explicit MinPlus(Rational m) : dual_(Rational(-m)) {}
  explicit MinPlus(long m) : dual_(Rational(-m)) {}

  static MinPlus zero() { return MinPlus(); }
  static MinPlus one() { return MinPlus(0L); }
  static MinPlus from_dual(MaxPlus d) {
    MinPlus r;
    r.dual_ = std::move(d);
    return r;
  }

  bool is_zero() const { return dual_.is_zero(); }
  Rational magnitude() const { return -dual_.magnitude(); }
  const MaxPlus& dual() const { return dual_; }

  friend bool operator==(const MinPlus&, const MinPlus&) = default;
  // Natural order: a <= b iff min(a, b) = b, so +inf is the bottom.
  friend std::strong_ordering operator<=>(const MinPlus& a, const MinPlus& b) {
    return a.dual_ <=> b.dual_;
  }

  friend MinPlus add(const MinPlus& a, const MinPlus& b) { return from_dual(add(a.dual_, b.dual_)); }
  friend MinPlus mul(const MinPlus& a, const MinPlus& b) { return from_dual(mul(a.dual_, b.dual_)); }
  friend MinPlus inv(const MinPlus& a) { return from_dual(inv(a.dual_)); }

 private:
  MaxPlus dual_;
};

// ---------------------------------------------------------------------------
// F1 = {0, 1}

class F1 {
 public:
  F1() = default;
  explicit F1(bool bit) : bit_(bit) {}

  static F1 zero() { return F1(false); }
  static F1 one() { return F1(true); }

  bool is_zero() const { return !bit_; }
  bool bit() const { return bit_; }

  friend bool operator==(const F1&, const F1&) = default;
  friend std::strong_ordering operator<=>(const F1& a, const F1& b) { return a.bit_ <=> b.bit_; }

  friend F1 add(const F1& a, const F1& b) { return F1(a.bit_ || b.bit_); }
  friend F1 mul(const F1& a, const F1& b) { return F1(a.bit_ && b.bit_); }
  friend F1 inv(const F1& a) {
    if (a.is_zero()) throw NoInverse();
    return a;
  }

 private:
  bool bit_ = false;
};

// ---------------------------------------------------------------------------
// Totally ordered abelian groups and the semifield they induce.

template <class G>
concept OrderedGroup = requires(const typename G::element a, const typename G::element b) {
  { G::identity() } -> std::same_as<typename G::element>;
  { G::op(a, b) } -> std::same_as<typename G::element>;
  { G::inverse(a) } -> std::same_as<typename G::element>;
  { G::less(a, b) } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

/// (Z, +) with the usual order.
struct IntegerGroup {
  using element = Integer;
  static element identity() { return 0; }
  static element op(const element& a, const element& b) { return a + b; }
  static element inverse(const element& a) { return -a; }
  static bool less(const element& a, const element& b) { return a < b; }
};

/// (Z^N, +) ordered lexicographically; non-archimedean for N > 1.
template <std::size_t N>
struct LexIntegerGroup {
  using element = std::array<Integer, N>;
  static element identity() {
    element e;
    for (auto& c : e) c = 0;
    return e;
  }
  static element op(const element& a, const element& b) {
    element r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
  }
  static element inverse(const element& a) {
    element r;
    for (std::size_t i = 0; i < N; ++i) r[i] = -a[i];
    return r;
  }
  static bool less(const element& a, const element& b) {
    for (std::size_t i = 0; i < N; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// The semifield G ∪ {0̄} with a + b = max(a, b) and the group law as product.
template <OrderedGroup G>
class GroupMax {
 public:
  using group = G;
  using element = typename G::element;

  GroupMax() = default;
  explicit GroupMax(element e) : value_(std::move(e)) {}

  static GroupMax zero() { return GroupMax(); }
  static GroupMax one() { return GroupMax(G::identity()); }

  bool is_zero() const { return !value_.has_value(); }
  const element& value() const { return *value_; }

  friend bool operator==(const GroupMax& a, const GroupMax& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const GroupMax& a, const GroupMax& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
    if (G::less(*a.value_, *b.value_)) return std::strong_ordering::less;
    if (G::less(*b.value_, *a.value_)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend GroupMax add(const GroupMax& a, const GroupMax& b) { return a < b ? b : a; }
  friend GroupMax mul(const GroupMax& a, const GroupMax& b) {
    if (a.is_zero() || b.is_zero()) return GroupMax();
    return GroupMax(G::op(*a.value_, *b.value_));
  }
  friend GroupMax inv(const GroupMax& a) {
    if (a.is_zero()) throw NoInverse();
    return GroupMax(G::inverse(*a.value_));
  }

 private:
  std::optional<element> value_;
};

/// Handle returned by ordered_group_semifield once the group passed validation.
template <OrderedGroup G>
struct OrderedGroupSemifield {
  using value_type = GroupMax<G>;
  static value_type lift(typename G::element e) { return value_type(std::move(e)); }
  static value_type zero() { return value_type::zero(); }
  static value_type one() { return value_type::one(); }
};

/// Checks the group axioms, totality and translation invariance of the order
/// on every pair/triple of samples, then hands back the induced semifield.
/// Throws DomainError when a sample exposes an incompatible order.
template <OrderedGroup G>
OrderedGroupSemifield<G> ordered_group_semifield(std::span<const typename G::element> samples) {
  const auto e = G::identity();
  for (const auto& a : samples) {
    if (!(G::op(a, e) == a)) throw DomainError("group identity law fails on a sample");
    if (!(G::op(a, G::inverse(a)) == e)) throw DomainError("group inverse law fails on a sample");
    if (G::less(a, a)) throw DomainError("order is not irreflexive");
  }
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      if (!(G::op(a, b) == G::op(b, a))) throw DomainError("group law is not commutative");
      const bool lt = G::less(a, b), gt = G::less(b, a), eq = a == b;
      if (int(lt) + int(gt) + int(eq) != 1) throw DomainError("order is not total");
      for (const auto& c : samples) {
        if (!(G::op(G::op(a, b), c) == G::op(a, G::op(b, c))))
          throw DomainError("group law is not associative");
        if (lt && G::less(b, c) && !G::less(a, c)) throw DomainError("order is not transitive");
        if (lt && !G::less(G::op(a, c), G::op(b, c)))
          throw DomainError("order is not compatible with the group law");
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Generic predicates

template <Semifield K>
bool natural_leq(const K& x, const K& y) {
  return add(x, y) == y;
}

/// In characteristic 1 every element is its own quasi-opposite.
template <Semifield K>
K quasi_opposite(const K& x) {
  return x;
}

template <Semifield K>
K power(const K& x, unsigned n) {
  K r = K::one();
  for (unsigned i = 0; i < n; ++i) r = mul(r, x);
  return r;
}

/// (x + y)^n == x^n + y^n, both sides evaluated exactly.
template <Semifield K>
bool frobenius_check(const K& x, const K& y, unsigned n) {
  return power(add(x, y), n) == add(power(x, n), power(y, n));
}

/// Disjoint supports with respect to the standard basis.
template <Semifield K>
bool is_orthogonal(std::span<const K> x, std::span<const K> y) {
  if (x.size() != y.size()) throw DimensionMismatch("orthogonality needs vectors of equal length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) return false;
  }
  return true;
}

/// Meet (greatest lower bound) for the natural order.
template <TotallyOrdered K>
K meet(const K& a, const K& b) {
  return b < a ? b : a;
}

}  // namespace tropical
