#pragma once

// Univariate polynomials over a characteristic-1 semifield.
//
// A root of P is a point x at which P splits into two polynomials with
// disjoint monomial supports taking equal values. Over a totally ordered
// semifield that means two monomials tie at the maximum, or x = 0̄ and the
// constant term vanishes. Over max-plus the roots are read off the upper
// concave hull of the points (i, a_i) (the Newton polygon): every hull edge
// of slope -s and horizontal length m contributes the root s with
// multiplicity m.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tropical/cover.hpp"
#include "tropical/error.hpp"
#include "tropical/semifield.hpp"

namespace tropical {

template <Semifield K>
class Polynomial {
 public:
  using Coefficients = std::map<std::size_t, K>;

  Polynomial() = default;
  /// Zero coefficients are dropped.
  explicit Polynomial(Coefficients c) {
    for (auto& [deg, a] : c)
      if (!a.is_zero()) coeffs_.emplace(deg, std::move(a));
  }

  static Polynomial monomial(std::size_t degree, K coefficient = K::one()) {
    return Polynomial(Coefficients{{degree, std::move(coefficient)}});
  }
  static Polynomial constant(K c) { return monomial(0, std::move(c)); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the leading monomial; 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  std::size_t lowest_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  K coefficient(std::size_t deg) const {
    auto it = coeffs_.find(deg);
    return it == coeffs_.end() ? K::zero() : it->second;
  }
  const Coefficients& coefficients() const { return coeffs_; }

  /// Formal equality of coefficient maps.
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Coefficients coeffs_;
};

template <Semifield K>
Polynomial<K> poly_add(const Polynomial<K>& p, const Polynomial<K>& q) {
  auto c = p.coefficients();
  for (const auto& [deg, a] : q.coefficients()) {
    auto [it, inserted] = c.emplace(deg, a);
    if (!inserted) it->second = add(it->second, a);
  }
  return Polynomial<K>(std::move(c));
}

template <Semifield K>
Polynomial<K> poly_mul(const Polynomial<K>& p, const Polynomial<K>& q) {
  typename Polynomial<K>::Coefficients c;
  for (const auto& [i, a] : p.coefficients())
    for (const auto& [j, b] : q.coefficients()) {
      K t = mul(a, b);
      auto [it, inserted] = c.emplace(i + j, t);
      if (!inserted) it->second = add(it->second, t);
    }
  return Polynomial<K>(std::move(c));
}

template <Semifield K>
Polynomial<K> poly_pow(const Polynomial<K>& p, unsigned n) {
  auto r = Polynomial<K>::constant(K::one());
  for (unsigned i = 0; i < n; ++i) r = poly_mul(r, p);
  return r;
}

/// ⊕_i a_i ⊗ x^i, evaluated term by term.
template <Semifield K>
K poly_eval(const Polynomial<K>& p, const K& x) {
  K s = K::zero();
  for (const auto& [deg, a] : p.coefficients()) s = add(s, mul(a, power(x, static_cast<unsigned>(deg))));
  return s;
}

template <TotallyOrdered K>
bool is_root(const Polynomial<K>& p, const K& r) {
  if (p.is_zero()) return true;
  if (r.is_zero()) return p.coefficient(0).is_zero();
  K best = K::zero();
  std::size_t hits = 0;
  for (const auto& [deg, a] : p.coefficients()) {
    K t = mul(a, power(r, static_cast<unsigned>(deg)));
    if (best < t) {
      best = std::move(t);
      hits = 1;
    } else if (t == best) {
      ++hits;
    }
  }
  return hits >= 2;
}

/// Evaluation in the supertropical cover with tangible coefficients and
/// argument. Ghost-or-zero exactly at the roots.
template <TotallyOrdered K>
Cover<K> eval_cover(const Polynomial<K>& p, const K& x) {
  Cover<K> s;
  const auto tx = Cover<K>::tangible(x);
  for (const auto& [deg, a] : p.coefficients()) {
    Cover<K> t = Cover<K>::tangible(a);
    for (std::size_t i = 0; i < deg; ++i) t = cover_mul(t, tx);
    s = cover_add(s, t);
  }
  return s;
}

template <Semifield K>
struct Root {
  K value;
  std::size_t multiplicity = 0;

  friend bool operator==(const Root&, const Root&) = default;
};

namespace detail {

/// Roots of a max-plus polynomial given by degree -> magnitude, as
/// (root, multiplicity) with nullopt for -inf, largest root first.
inline std::vector<std::pair<std::optional<Rational>, std::size_t>> newton_roots(
    const std::vector<std::pair<std::size_t, Rational>>& pts) {
  // Upper hull by monotone chain; collinear points are dropped so every
  // edge has a distinct slope.
  std::vector<std::pair<std::size_t, Rational>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& m = hull.back();
      // keep m only if it lies strictly above the chord o -> pt
      const Rational cross = (Rational(m.first) - Rational(o.first)) * (pt.second - o.second) -
                             (m.second - o.second) * (Rational(pt.first) - Rational(o.first));
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  std::vector<std::pair<std::optional<Rational>, std::size_t>> out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const auto& [i1, a1] = hull[k];
    const auto& [i2, a2] = hull[k + 1];
    Rational r = (a1 - a2) / Rational(i2 - i1);
    r.canonicalize();
    out.emplace_back(std::move(r), i2 - i1);
  }
  std::reverse(out.begin(), out.end());
  if (!pts.empty() && pts.front().first > 0) out.emplace_back(std::nullopt, pts.front().first);
  return out;
}

}  // namespace detail

/// Root multiset of a nonzero max-plus or min-plus polynomial, largest root
/// (in the natural order) first, 0̄ last. Multiplicities add up to the degree.
template <RationalMagnitude K>
std::vector<Root<K>> roots(const Polynomial<K>& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial are undefined");
  // Work in max-plus; min-plus goes through its order-dual representation.
  std::vector<std::pair<std::size_t, Rational>> pts;
  for (const auto& [deg, a] : p.coefficients()) {
    if constexpr (std::is_same_v<K, MinPlus>) pts.emplace_back(deg, a.dual().magnitude());
    else pts.emplace_back(deg, a.magnitude());
  }
  std::vector<Root<K>> out;
  for (auto& [r, m] : detail::newton_roots(pts)) {
    K value;
    if (r) {
      if constexpr (std::is_same_v<K, MinPlus>) value = MinPlus::from_dual(MaxPlus(*r));
      else value = K(*r);
    }
    out.push_back(Root<K>{std::move(value), m});
  }
  return out;
}

}  // namespace tropical
