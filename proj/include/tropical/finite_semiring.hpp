#pragma once

// Finite semirings given by explicit operation tables, and their
// characteristic. Tables are validated eagerly by full enumeration.

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "tropical/error.hpp"

namespace tropical {

class FiniteSemiringTable {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  static constexpr std::size_t max_size = 64;

  /// Throws DomainError if the tables do not define a semiring.
  FiniteSemiringTable(Table add, Table mul, std::size_t zero, std::size_t one)
      : add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
    validate();
  }

  std::size_t size() const { return add_.size(); }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a][b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  const Table& add_table() const { return add_; }
  const Table& mul_table() const { return mul_; }

  /// k·x as the k-fold sum x + ... + x (0·x = 0).
  std::size_t times(std::size_t k, std::size_t x) const {
    std::size_t r = zero_;
    for (std::size_t i = 0; i < k; ++i) r = add(r, x);
    return r;
  }

 private:
  void validate() const {
    const std::size_t n = add_.size();
    if (n == 0 || n > max_size) throw DomainError("semiring table size must be in 1..64");
    if (mul_.size() != n) throw DomainError("addition and multiplication tables differ in size");
    for (std::size_t i = 0; i < n; ++i) {
      if (add_[i].size() != n || mul_[i].size() != n) throw DomainError("semiring tables must be square");
      for (std::size_t j = 0; j < n; ++j) {
        if (add_[i][j] >= n || mul_[i][j] >= n) throw DomainError("table entry out of range");
      }
    }
    if (zero_ >= n || one_ >= n) throw DomainError("neutral index out of range");
    for (std::size_t a = 0; a < n; ++a) {
      if (add(a, zero_) != a || add(zero_, a) != a) throw DomainError("0 is not neutral for +");
      if (mul(a, one_) != a || mul(one_, a) != a) throw DomainError("1 is not neutral for *");
      if (mul(a, zero_) != zero_ || mul(zero_, a) != zero_) throw DomainError("0 is not absorbing");
      for (std::size_t b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) throw DomainError("+ is not commutative");
        for (std::size_t c = 0; c < n; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) throw DomainError("+ is not associative");
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("* is not associative");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) throw DomainError("left distributivity fails");
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) throw DomainError("right distributivity fails");
        }
      }
    }
  }

  Table add_;
  Table mul_;
  std::size_t zero_;
  std::size_t one_;
};

/// Smallest n > 0 with n·1 + 1 = 1, or 0 when the orbit of 1 under "+1"
/// never returns to 1.
inline std::size_t characteristic(const FiniteSemiringTable& t) {
  // s = k·1; s + 1 = 1 means k lies in H. The sequence k·1 is eventually
  // periodic with period at most size(), so size()+1 steps decide.
  std::size_t s = t.one();
  for (std::size_t k = 1; k <= t.size() + 1; ++k) {
    if (t.add(s, t.one()) == t.one()) return k;
    s = t.add(s, t.one());
  }
  return 0;
}

/// For every x != 0: (k+1)·x = x implies p | k, checked for k up to size·p.
inline bool is_pure_characteristic(const FiniteSemiringTable& t) {
  const std::size_t p = characteristic(t);
  if (p == 0) throw PreconditionError("pure characteristic is undefined in characteristic 0");
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (x == t.zero()) continue;
    std::size_t kx = x;  // (k+1)·x, starting at k = 0
    for (std::size_t k = 1; k <= t.size() * p; ++k) {
      kx = t.add(kx, x);
      if (kx == x && k % p != 0) return false;
    }
  }
  return true;
}

/// The two-element semifield {0, 1} with 1 + 1 = 1.
inline FiniteSemiringTable f1_table() {
  return FiniteSemiringTable({{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
}

/// The ring Z/n (element i stands for the residue i).
inline FiniteSemiringTable zmod_table(std::size_t n) {
  FiniteSemiringTable::Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  }
  return FiniteSemiringTable(std::move(add), std::move(mul), 0, n == 1 ? 0 : 1);
}

/// Componentwise product semiring; element (a, b) is encoded as a·|B| + b.
inline FiniteSemiringTable product_table(const FiniteSemiringTable& a, const FiniteSemiringTable& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  FiniteSemiringTable::Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      add[x][y] = a.add(xa, ya) * nb + b.add(xb, yb);
      mul[x][y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  }
  return FiniteSemiringTable(std::move(add), std::move(mul), a.zero() * nb + b.zero(), a.one() * nb + b.one());
}

}  // namespace tropical
