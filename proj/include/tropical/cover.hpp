#pragma once

/**
 * @file cover.hpp
 * @brief Supertropical cover T = K ∪ U of a totally ordered semifield K.
 *
 * Each element is a magnitude in K tagged tangible or ghost. Ghosts record
 * that a maximum was attained at least twice; a product AX landing entirely
 * in the ghost layer (or at 0̄) is what makes a matrix tropically singular.
 */

#include <span>
#include <vector>

#include "tropical/semifield.hpp"

namespace tropical {

enum class Layer { tangible, ghost };

template <TotallyOrdered K>
class Cover {
 public:
  /// 0̄, tangible.
  Cover() = default;

  /// ghost(0̄) is normalized to tangible 0̄.
  explicit Cover(K magnitude, Layer layer = Layer::tangible)
      : magnitude_(std::move(magnitude)), ghost_(layer == Layer::ghost && !magnitude_.is_zero()) {}

  static Cover tangible(K k) { return Cover(std::move(k), Layer::tangible); }
  static Cover ghost(K k) { return Cover(std::move(k), Layer::ghost); }

  const K& magnitude() const { return magnitude_; }
  Layer layer() const { return ghost_ ? Layer::ghost : Layer::tangible; }
  bool is_ghost() const { return ghost_; }
  bool is_zero() const { return magnitude_.is_zero(); }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  K magnitude_{};
  bool ghost_ = false;
};

template <TotallyOrdered K>
Cover<K> cover_add(const Cover<K>& a, const Cover<K>& b) {
  const auto& x = a.magnitude();
  const auto& y = b.magnitude();
  if (!a.is_ghost() && !b.is_ghost()) {
    if (x == y) return Cover<K>::ghost(x);  // ghost(0̄) collapses to tangible 0̄
    return Cover<K>::tangible(x < y ? y : x);
  }
  if (a.is_ghost() && b.is_ghost()) return Cover<K>::ghost(x < y ? y : x);
  const Cover<K>& t = a.is_ghost() ? b : a;
  const Cover<K>& g = a.is_ghost() ? a : b;
  if (g.magnitude() < t.magnitude()) return t;
  return g;
}

template <TotallyOrdered K>
Cover<K> cover_mul(const Cover<K>& a, const Cover<K>& b) {
  return Cover<K>(mul(a.magnitude(), b.magnitude()),
                  a.is_ghost() || b.is_ghost() ? Layer::ghost : Layer::tangible);
}

template <TotallyOrdered K>
bool is_ghost_or_zero(std::span<const Cover<K>> v) {
  for (const auto& c : v) {
    if (!c.is_ghost() && !c.is_zero()) return false;
  }
  return true;
}

template <TotallyOrdered K>
bool is_ghost_or_zero(const std::vector<Cover<K>>& v) {
  return is_ghost_or_zero(std::span<const Cover<K>>(v));
}

template <TotallyOrdered K>
std::vector<Cover<K>> lift(std::span<const K> v) {
  std::vector<Cover<K>> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Cover<K>::tangible(x));
  return out;
}

/// Hat map K -> U ∪ {0̄}.
template <TotallyOrdered K>
Cover<K> hat(const K& k) {
  return Cover<K>::ghost(k);
}

}  // namespace tropical
