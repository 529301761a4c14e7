#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over a semifield and the permutation-census determinant.
 *
 * The determinant of an n×n matrix is the ⊕-sum over all permutations τ of
 * the weight a_{1,τ(1)} ⊗ ... ⊗ a_{n,τ(n)}. In characteristic 1 the sign
 * coefficient is 1̄, so det = det₊ ⊕ det₋ where det₊ (det₋) ranges over even
 * (odd) permutations. det_report enumerates S_n and keeps the full census of
 * optimal permutations; det_value_fast only returns the value.
 */

#include <algorithm>
#include <cstddef>
#include <future>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropical/cover.hpp"
#include "tropical/error.hpp"
#include "tropical/semifield.hpp"

namespace tropical {

template <Semifield K>
using Vector = std::vector<K>;

template <Semifield K>
class Matrix {
 public:
  using value_type = K;

  Matrix() = default;
  /// rows×cols matrix filled with 0̄.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<K> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match rows*cols");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K::one();
    return m;
  }

  /// Builds the matrix whose columns are the given vectors, each of length dim.
  static Matrix from_columns(std::span<const Vector<K>> columns, std::size_t dim) {
    Matrix m(dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != dim) throw DimensionMismatch("family vectors must share one dimension");
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector<K> column(std::size_t j) const {
    Vector<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<Vector<K>> columns() const {
    std::vector<Vector<K>> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }
  const std::vector<K>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix m(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <Semifield K>
Matrix<K> transpose(const Matrix<K>& a) {
  Matrix<K> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <Semifield K>
Matrix<K> mat_mul(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
  Matrix<K> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      K s = K::zero();
      for (std::size_t k = 0; k < a.cols(); ++k) s = add(s, mul(a(i, k), b(k, j)));
      c(i, j) = std::move(s);
    }
  return c;
}

template <Semifield K>
Vector<K> mat_vec(const Matrix<K>& a, std::span<const K> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("mat_vec: vector length differs from column count");
  Vector<K> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    K s = K::zero();
    for (std::size_t k = 0; k < a.cols(); ++k) s = add(s, mul(a(i, k), x[k]));
    y[i] = std::move(s);
  }
  return y;
}

template <Semifield K>
Vector<K> mat_vec(const Matrix<K>& a, const Vector<K>& x) {
  return mat_vec(a, std::span<const K>(x));
}

/// A ⊗ X computed in the supertropical cover with tangible lifts of A and X.
template <TotallyOrdered K>
std::vector<Cover<K>> cover_mat_vec(const Matrix<K>& a, std::span<const K> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("cover_mat_vec: vector length differs from column count");
  std::vector<Cover<K>> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Cover<K> s;
    for (std::size_t k = 0; k < a.cols(); ++k)
      s = cover_add(s, cover_mul(Cover<K>::tangible(a(i, k)), Cover<K>::tangible(x[k])));
    y[i] = std::move(s);
  }
  return y;
}

template <Semifield K>
bool is_zero_vector(std::span<const K> v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

template <Semifield K>
Vector<K> unit_vector(std::size_t n, std::size_t k) {
  Vector<K> e(n);
  e[k] = K::one();
  return e;
}

template <Semifield K>
Vector<K> scale(const K& lambda, std::span<const K> x) {
  Vector<K> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = mul(lambda, x[i]);
  return y;
}

template <Semifield K>
Vector<K> vec_add(std::span<const K> x, std::span<const K> y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector lengths differ");
  Vector<K> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = add(x[i], y[i]);
  return z;
}

/// Entrywise natural order A >= B.
template <TotallyOrdered K>
bool dominates(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("dominates: shapes differ");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) < b(i, j)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Permutations

enum class Parity { even, odd };

struct Permutation {
  std::vector<std::size_t> image;  // zero-based: i -> image[i]
  Parity parity = Parity::even;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Sign from the cycle structure: a cycle of length L contributes L-1 transpositions.
inline Parity parity_of(std::span<const std::size_t> image) {
  std::vector<bool> seen(image.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t i = s; !seen[i]; i = image[i]) {
      seen[i] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

template <Semifield K>
K permutation_weight(const Matrix<K>& a, std::span<const std::size_t> image) {
  K w = K::one();
  for (std::size_t i = 0; i < image.size(); ++i) {
    w = mul(w, a(i, image[i]));
    if (w.is_zero()) break;
  }
  return w;
}

template <Semifield K>
struct DetReport {
  K det;
  K det_plus;
  K det_minus;
  /// Even (odd) permutations whose weight equals det_plus (det_minus), in
  /// lexicographic order. Empty when the respective value is 0̄.
  std::vector<Permutation> optimal_even;
  std::vector<Permutation> optimal_odd;

  /// Number of permutations of weight det (det != 0̄).
  std::size_t optimal_count() const {
    if (det.is_zero()) return 0;
    std::size_t c = 0;
    if (det_plus == det) c += optimal_even.size();
    if (det_minus == det) c += optimal_odd.size();
    return c;
  }
};

struct DetOptions {
  std::size_t enumeration_bound = 9;
  bool parallel = false;
};

namespace detail {

template <TotallyOrdered K>
struct CensusPart {
  K best_even{};
  K best_odd{};
  std::vector<Permutation> even;
  std::vector<Permutation> odd;
};

template <TotallyOrdered K>
void census_record(CensusPart<K>& part, const K& w, std::span<const std::size_t> image) {
  if (w.is_zero()) return;
  const Parity p = parity_of(image);
  K& best = p == Parity::even ? part.best_even : part.best_odd;
  auto& list = p == Parity::even ? part.even : part.odd;
  if (best < w) {
    best = w;
    list.clear();
  }
  if (best == w) list.push_back(Permutation{{image.begin(), image.end()}, p});
}

// All permutations with image[0] == first, in lexicographic order.
template <TotallyOrdered K>
CensusPart<K> census_slice(const Matrix<K>& a, std::size_t first) {
  const std::size_t n = a.rows();
  CensusPart<K> part;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < n; ++j)
    if (j != first) rest.push_back(j);
  std::vector<std::size_t> image(n);
  image[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), image.begin() + 1);
    census_record(part, permutation_weight(a, image), image);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return part;
}

template <TotallyOrdered K>
void census_merge(CensusPart<K>& into, CensusPart<K>&& from) {
  auto merge_one = [](K& best, std::vector<Permutation>& list, K& fbest, std::vector<Permutation>& flist) {
    if (fbest.is_zero()) return;
    if (best < fbest) {
      best = std::move(fbest);
      list = std::move(flist);
    } else if (best == fbest) {
      list.insert(list.end(), std::make_move_iterator(flist.begin()), std::make_move_iterator(flist.end()));
    }
  };
  merge_one(into.best_even, into.even, from.best_even, from.even);
  merge_one(into.best_odd, into.odd, from.best_odd, from.odd);
}

}  // namespace detail

/// Full permutation census. Throws NotSquare, or SizeLimit above the
/// enumeration bound (use det_value_fast for the value alone).
template <TotallyOrdered K>
DetReport<K> det_report(const Matrix<K>& a, DetOptions opt = {}) {
  if (!a.is_square()) throw NotSquare();
  const std::size_t n = a.rows();
  if (n > opt.enumeration_bound) {
    throw SizeLimit("det_report: n = " + std::to_string(n) + " exceeds the enumeration bound " +
                    std::to_string(opt.enumeration_bound) + "; use det_value_fast for the value");
  }
  detail::CensusPart<K> total;
  if (n == 0) {
    total.best_even = K::one();
    total.even.push_back(Permutation{});
  } else if (opt.parallel && n >= 6) {
    // Slices are merged in order of image[0], so the result is schedule independent.
    std::vector<std::future<detail::CensusPart<K>>> parts;
    for (std::size_t f = 0; f < n; ++f)
      parts.push_back(std::async(std::launch::async, [&a, f] { return detail::census_slice(a, f); }));
    for (auto& p : parts) detail::census_merge(total, p.get());
  } else {
    for (std::size_t f = 0; f < n; ++f) detail::census_merge(total, detail::census_slice(a, f));
  }
  DetReport<K> r;
  r.det_plus = total.best_even;
  r.det_minus = total.best_odd;
  r.det = add(r.det_plus, r.det_minus);
  r.optimal_even = std::move(total.even);
  r.optimal_odd = std::move(total.odd);
  return r;
}

template <TotallyOrdered K>
K det(const Matrix<K>& a) {
  return det_report(a).det;
}

// ---------------------------------------------------------------------------
// Bipartite matching on the support graph

/// Perfect matching of rows to columns using only nonzero entries
/// (Kuhn's augmenting paths). Returns row -> column, or nothing.
template <Semifield K>
std::optional<std::vector<std::size_t>> support_matching(const Matrix<K>& a) {
  if (!a.is_square()) throw NotSquare();
  const std::size_t n = a.rows();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_col(n, none);  // column -> row
  std::vector<bool> visited;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero() || visited[j]) continue;
      visited[j] = true;
      if (match_col[j] == none || self(self, match_col[j])) {
        match_col[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    visited.assign(n, false);
    if (!augment(augment, i)) return std::nullopt;
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 0; j < n; ++j) row_to_col[match_col[j]] = j;
  return row_to_col;
}

// ---------------------------------------------------------------------------
// Exact optimal assignment (fast determinant value)

namespace detail {

/// Minimum-cost perfect matching with forbidden edges (nullopt cost), exact
/// rational potentials. Pre: a perfect matching on the allowed edges exists.
/// Returns row -> column.
inline std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<std::optional<Rational>>>& cost) {
  const std::size_t n = cost.size();
  // 1-based arrays; column 0 is the virtual root of each Dijkstra phase.
  std::vector<Rational> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        if (const auto& c = cost[i0 - 1][j - 1]) {
          Rational cur = *c - u[i0] - v[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = *minv[j];
          j1 = j;
        }
      }
      if (!delta) throw std::logic_error("min_cost_assignment: no augmenting path");
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace detail

/// Determinant value through an optimal assignment, O(n^3). Instances
/// without rational magnitudes fall back to the permutation census.
template <TotallyOrdered K>
K det_value_fast(const Matrix<K>& a) {
  if (!a.is_square()) throw NotSquare();
  if constexpr (RationalMagnitude<K>) {
    const std::size_t n = a.rows();
    if (n > 64) throw SizeLimit("det_value_fast supports n <= 64");
    if (n == 0) return K::one();
    const auto matching = support_matching(a);
    if (!matching) return K::zero();
    // Maximize in the natural order: for max-plus that is the largest
    // magnitude, for min-plus the smallest. Compare through a probe.
    const bool larger_is_better = K::one() < K(Rational(1));
    std::vector<std::vector<std::optional<Rational>>> cost(n, std::vector<std::optional<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!a(i, j).is_zero()) cost[i][j] = larger_is_better ? Rational(-a(i, j).magnitude()) : a(i, j).magnitude();
    const auto assignment = detail::min_cost_assignment(cost);
    return permutation_weight(a, assignment);
  } else {
    return det_report(a, {.enumeration_bound = 64}).det;
  }
}

// ---------------------------------------------------------------------------
// Monomial (invertible) matrices

template <Semifield K>
bool is_monomial(const Matrix<K>& a) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  std::vector<std::size_t> per_col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t per_row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j).is_zero()) {
        ++per_row;
        ++per_col[j];
      }
    }
    if (per_row != 1) return false;
  }
  return std::all_of(per_col.begin(), per_col.end(), [](std::size_t c) { return c == 1; });
}

/// Transposed pattern with inverted entries; A ⊗ A⁻¹ = I.
template <Semifield K>
Matrix<K> monomial_inverse(const Matrix<K>& a) {
  if (!is_monomial(a)) throw NotInvertible();
  Matrix<K> b(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) b(j, i) = inv(a(i, j));
  return b;
}

/// A monomial S with A >= S entrywise, or nothing iff det(A) = 0̄.
template <TotallyOrdered K>
std::optional<Matrix<K>> dominates_monomial(const Matrix<K>& a) {
  const auto matching = support_matching(a);
  if (!matching) return std::nullopt;
  Matrix<K> s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) s(i, (*matching)[i]) = a(i, (*matching)[i]);
  return s;
}

}  // namespace tropical
