#pragma once

/**
 * @file rank.hpp
 * @brief Tropical rank, regular families, kernels of linear forms and the
 * rank theorem over a totally ordered semifield.
 *
 * A linear form l = (a_1..a_n) is singular at x iff l(x) = 0̄ or two distinct
 * terms a_i x_i = a_j x_j attain the maximum. The kernel of a matrix is the
 * intersection of the kernels of its rows. The tropical rank of a matrix is
 * the largest order of a d-regular square submatrix, and the rank theorem
 * states n = rank(A) + dim_T(Tker A) for an A with n columns.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropical/combinatorics.hpp"
#include "tropical/error.hpp"
#include "tropical/matrix.hpp"
#include "tropical/oracle.hpp"
#include "tropical/singularity.hpp"

namespace tropical {

template <TotallyOrdered K>
struct LinearForm {
  Vector<K> coeffs;

  std::size_t size() const { return coeffs.size(); }
  K operator()(std::span<const K> x) const {
    if (x.size() != coeffs.size()) throw DimensionMismatch("linear form and vector lengths differ");
    K s = K::zero();
    for (std::size_t i = 0; i < x.size(); ++i) s = add(s, mul(coeffs[i], x[i]));
    return s;
  }
  bool is_zero() const { return is_zero_vector<K>(coeffs); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Largest order the rank/dimension enumerations accept.
struct RankBudget {
  std::size_t max_dim = 7;
  static constexpr std::size_t hard_cap = 9;
};

inline void check_rank_budget(std::size_t rows, std::size_t cols, const RankBudget& b) {
  const std::size_t limit = std::min(b.max_dim, RankBudget::hard_cap);
  if (rows > limit || cols > limit) {
    throw SizeLimit("rank enumeration: " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds the budget of " + std::to_string(limit));
  }
}

// ---------------------------------------------------------------------------
// Kernels of linear forms

template <TotallyOrdered K>
bool kernel_membership(const LinearForm<K>& l, std::span<const K> x) {
  if (x.size() != l.size()) throw DimensionMismatch("kernel_membership: lengths differ");
  K best = K::zero();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const K t = mul(l.coeffs[i], x[i]);
    if (best < t) {
      best = t;
      hits = 1;
    } else if (t == best) {
      ++hits;
    }
  }
  return best.is_zero() || hits >= 2;
}

template <TotallyOrdered K>
bool kernel_membership(const LinearForm<K>& l, const Vector<K>& x) {
  return kernel_membership(l, std::span<const K>(x));
}

/// Generators of Ker l: for nonzero coefficients i < j the vector with a_i⁻¹
/// at i and a_j⁻¹ at j, then e_k for every zero coefficient k. With fewer
/// than two nonzero coefficients only the unit vectors remain.
template <TotallyOrdered K>
std::vector<Vector<K>> kernel_generators(const LinearForm<K>& l) {
  const std::size_t n = l.size();
  std::vector<std::size_t> nonzero, zero;
  for (std::size_t i = 0; i < n; ++i) (l.coeffs[i].is_zero() ? zero : nonzero).push_back(i);
  std::vector<Vector<K>> gens;
  if (nonzero.size() >= 2) {
    for (std::size_t a = 0; a < nonzero.size(); ++a)
      for (std::size_t b = a + 1; b < nonzero.size(); ++b) {
        Vector<K> v(n);
        v[nonzero[a]] = inv(l.coeffs[nonzero[a]]);
        v[nonzero[b]] = inv(l.coeffs[nonzero[b]]);
        gens.push_back(std::move(v));
      }
  }
  for (std::size_t k : zero) gens.push_back(unit_vector<K>(n, k));
  return gens;
}

template <TotallyOrdered K>
struct SpanCertificate {
  bool member = false;
  /// Greatest λ with g ⊗ λ <= y; g ⊗ λ == y iff y is in the span.
  Vector<K> lambda;
};

/// Residuation test for y in the column span of g.
template <TotallyOrdered K>
SpanCertificate<K> span_membership(const Matrix<K>& g, std::span<const K> y) {
  if (y.size() != g.rows()) throw DimensionMismatch("span_membership: vector length differs from row count");
  SpanCertificate<K> cert;
  cert.lambda.resize(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    std::optional<K> lam;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (g(i, j).is_zero()) continue;
      K q = mul(y[i], inv(g(i, j)));
      lam = lam ? meet(*lam, q) : q;
    }
    cert.lambda[j] = lam.value_or(K::zero());
  }
  cert.member = mat_vec(g, cert.lambda) == Vector<K>(y.begin(), y.end());
  return cert;
}

template <TotallyOrdered K>
SpanCertificate<K> span_membership(const Matrix<K>& g, const Vector<K>& y) {
  return span_membership(g, std::span<const K>(y));
}

template <TotallyOrdered K>
bool tker_membership(const Matrix<K>& a, std::span<const K> x) {
  if (x.size() != a.cols()) throw DimensionMismatch("tker_membership: vector length differs from column count");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    if (!kernel_membership(LinearForm<K>{Vector<K>(r.begin(), r.end())}, x)) return false;
  }
  return true;
}

template <TotallyOrdered K>
bool tker_membership(const Matrix<K>& a, const Vector<K>& x) {
  return tker_membership(a, std::span<const K>(x));
}

/// x lies in Ker l for every family member; certifies l ∈ (span family)'.
template <TotallyOrdered K>
bool orthogonal_form_membership(const LinearForm<K>& l, std::span<const Vector<K>> family) {
  return std::all_of(family.begin(), family.end(), [&](const Vector<K>& f) { return kernel_membership(l, f); });
}

// ---------------------------------------------------------------------------
// Rank and regular families

template <TotallyOrdered K>
bool is_d_regular_minor(const Matrix<K>& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  return !is_d_singular(a.submatrix(rows, cols));
}

/// Largest k such that some k×k submatrix is d-regular; 0 iff A = 0̄.
template <TotallyOrdered K>
std::size_t tropical_rank(const Matrix<K>& a, const RankBudget& budget = {}) {
  check_rank_budget(a.rows(), a.cols(), budget);
  for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k) {
    const bool found = for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        return is_d_regular_minor(a, rows, cols);
      });
    });
    if (found) return k;
  }
  return 0;
}

/// Regularity of a family of vectors of common length (the columns of a
/// matrix). The empty family is regular.
template <TotallyOrdered K>
bool is_regular_family(std::span<const Vector<K>> vectors) {
  if (vectors.empty()) return true;
  const std::size_t dim = vectors.front().size();
  if (vectors.size() > dim) return false;
  return !is_definitionally_singular(Matrix<K>::from_columns(vectors, dim));
}

template <TotallyOrdered K>
bool is_regular_family(const std::vector<Vector<K>>& vectors) {
  return is_regular_family(std::span<const Vector<K>>(vectors));
}

template <TotallyOrdered K>
struct FamilyReport {
  std::vector<Vector<K>> vectors;
  bool is_regular = false;
  std::size_t tropical_dimension = 0;
  /// Lexicographically smallest index set of a regular subfamily of maximal size.
  std::vector<std::size_t> max_regular_subfamily;
};

template <TotallyOrdered K>
FamilyReport<K> tropical_dimension(std::span<const Vector<K>> family, const RankBudget& budget = {}) {
  FamilyReport<K> r;
  r.vectors.assign(family.begin(), family.end());
  if (family.empty()) {
    r.is_regular = true;
    return r;
  }
  const std::size_t dim = family.front().size();
  const auto m = Matrix<K>::from_columns(family, dim);
  const std::size_t rank = tropical_rank(m, budget);
  r.tropical_dimension = rank;
  r.is_regular = rank == family.size();
  for_each_subset(family.size(), rank, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector<K>> sub;
    for (std::size_t i : idx) sub.push_back(family[i]);
    if (!is_regular_family(sub)) return false;
    r.max_regular_subfamily = idx;
    return true;
  });
  return r;
}

template <TotallyOrdered K>
FamilyReport<K> tropical_dimension(const std::vector<Vector<K>>& family, const RankBudget& budget = {}) {
  return tropical_dimension(std::span<const Vector<K>>(family), budget);
}

/// Completes a regular family of p vectors of length n to a regular family
/// of n vectors by appending the unit vectors e_i for the rows outside the
/// lexicographically first d-regular p×p row-minor. The input comes first.
template <TotallyOrdered K>
std::vector<Vector<K>> complete_to_tropical_basis(std::span<const Vector<K>> family, std::size_t n) {
  for (const auto& f : family)
    if (f.size() != n) throw DimensionMismatch("complete_to_tropical_basis: vector length differs from n");
  std::vector<Vector<K>> out(family.begin(), family.end());
  if (family.empty()) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector<K>(n, i));
    return out;
  }
  if (!is_regular_family(family)) throw PreconditionError("complete_to_tropical_basis: family is not regular");
  const std::size_t p = family.size();
  const auto m = Matrix<K>::from_columns(family, n);
  std::vector<std::size_t> all_cols(p);
  for (std::size_t j = 0; j < p; ++j) all_cols[j] = j;
  std::vector<std::size_t> used;
  for_each_subset(n, p, [&](const std::vector<std::size_t>& rows) {
    if (!is_d_regular_minor(m, rows, all_cols)) return false;
    used = rows;
    return true;
  });
  for (std::size_t i : complement(used, n)) out.push_back(unit_vector<K>(n, i));
  return out;
}

template <TotallyOrdered K>
std::vector<Vector<K>> complete_to_tropical_basis(const std::vector<Vector<K>>& family, std::size_t n) {
  return complete_to_tropical_basis(std::span<const Vector<K>>(family), n);
}

// ---------------------------------------------------------------------------
// Determinant forms and weak spans

/// The form y ↦ det(c_1, ..., c_{n-1}, y) for n-1 columns of length n,
/// expanded along y: coefficient i is the determinant with row i deleted.
template <TotallyOrdered K>
LinearForm<K> determinant_form(const std::vector<Vector<K>>& columns, std::size_t n) {
  const auto m = Matrix<K>::from_columns(columns, n);
  std::vector<std::size_t> cols(columns.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  LinearForm<K> l{Vector<K>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    l.coeffs[i] = det_value_fast(m.submatrix(rows, cols));
  }
  return l;
}

/// Searches determinant forms singular on the whole family but not at x.
/// A returned form certifies that x is outside the weakly generated
/// submodule; nothing means no determinant form separates them.
template <TotallyOrdered K>
std::optional<LinearForm<K>> weak_span_separation(std::span<const Vector<K>> family, std::span<const K> x) {
  const std::size_t n = x.size();
  const std::size_t k = family.size();
  for (const auto& f : family)
    if (f.size() != n) throw DimensionMismatch("weak_span_separation: vector length differs");
  if (k + 1 > n) return std::nullopt;
  std::optional<LinearForm<K>> found;
  for_each_subset(n, n - 1 - k, [&](const std::vector<std::size_t>& units) {
    std::vector<Vector<K>> cols(family.begin(), family.end());
    for (std::size_t u : units) cols.push_back(unit_vector<K>(n, u));
    auto l = determinant_form(cols, n);
    if (l.is_zero() || !orthogonal_form_membership(l, family) || kernel_membership(l, x)) return false;
    found = std::move(l);
    return true;
  });
  return found;
}

template <TotallyOrdered K>
std::optional<LinearForm<K>> weak_span_separation(const std::vector<Vector<K>>& family, const Vector<K>& x) {
  return weak_span_separation(std::span<const Vector<K>>(family), std::span<const K>(x));
}

// ---------------------------------------------------------------------------
// Kernel dimension and the rank theorem

/// Normalized grid vectors that lie in Tker(A).
template <TotallyOrdered K>
std::vector<Vector<K>> kernel_grid_members(const Matrix<K>& a) {
  std::vector<Vector<K>> members;
  for_each_candidate(default_budget(a), a.cols(), [&](const Vector<K>& x) {
    if (tker_membership(a, x)) members.push_back(x);
    return false;
  });
  return members;
}

/// First (lexicographic by index set) regular family of the given size
/// among the candidates. Subfamilies of regular families are regular, so
/// the depth-first search only extends regular prefixes.
template <TotallyOrdered K>
std::optional<std::vector<std::size_t>> find_regular_subfamily(const std::vector<Vector<K>>& candidates,
                                                                std::size_t size) {
  std::vector<std::size_t> chosen;
  std::vector<Vector<K>> current;
  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == size) return true;
    for (std::size_t i = from; i + (size - chosen.size()) <= candidates.size(); ++i) {
      chosen.push_back(i);
      current.push_back(candidates[i]);
      if (is_regular_family(current) && self(self, i + 1)) return true;
      chosen.pop_back();
      current.pop_back();
    }
    return false;
  };
  if (size == 0) return chosen;
  if (!candidates.empty() && size > candidates.front().size()) return std::nullopt;
  if (dfs(dfs, 0)) return chosen;
  return std::nullopt;
}

template <TotallyOrdered K>
struct TkerDimension {
  /// n - rank(A). Non-generic matrices can hold a larger regular family in
  /// Tker(A); rank_theorem_check_detailed reports those as refuted.
  std::size_t value = 0;
  /// A regular family of that size inside Tker(A) found on the grid, if any.
  std::optional<std::vector<Vector<K>>> evidence;
};

template <TotallyOrdered K>
TkerDimension<K> tker_dimension(const Matrix<K>& a, const RankBudget& budget = {}) {
  TkerDimension<K> r;
  r.value = a.cols() - tropical_rank(a, budget);
  const auto members = kernel_grid_members(a);
  if (auto idx = find_regular_subfamily(members, r.value)) {
    std::vector<Vector<K>> fam;
    for (std::size_t i : *idx) fam.push_back(members[i]);
    r.evidence = std::move(fam);
  }
  return r;
}

enum class RankTheoremStatus {
  confirmed,  ///< grid reproduces dim Tker = n - rank exactly
  exhausted,  ///< the grid holds too few kernel vectors to exhibit n - rank
  refuted,    ///< a regular family larger than n - rank lies in Tker
};

inline std::string to_string(RankTheoremStatus s) {
  switch (s) {
    case RankTheoremStatus::confirmed: return "confirmed";
    case RankTheoremStatus::exhausted: return "exhausted";
    case RankTheoremStatus::refuted: return "refuted";
  }
  return "?";
}

template <TotallyOrdered K>
struct RankTheoremResult {
  RankTheoremStatus status = RankTheoremStatus::exhausted;
  std::size_t columns = 0;
  std::size_t rank = 0;
  /// Largest regular family size found among grid kernel members.
  std::size_t kernel_dimension = 0;
  /// A regular family inside Tker(A) of size kernel_dimension (empty when exhausted).
  std::vector<Vector<K>> kernel_basis;
};

/// Recomputes dim_T(Tker A) from grid kernel members and compares with
/// n - rank(A).
template <TotallyOrdered K>
RankTheoremResult<K> rank_theorem_check_detailed(const Matrix<K>& a, const RankBudget& budget = {}) {
  RankTheoremResult<K> r;
  r.columns = a.cols();
  r.rank = tropical_rank(a, budget);
  const std::size_t expected = r.columns - r.rank;
  const auto members = kernel_grid_members(a);
  const auto idx = find_regular_subfamily(members, expected);
  if (!idx) {
    std::size_t s = expected;
    while (s > 0 && !find_regular_subfamily(members, s)) --s;
    r.kernel_dimension = s;
    r.status = RankTheoremStatus::exhausted;
    return r;
  }
  for (std::size_t i : *idx) r.kernel_basis.push_back(members[i]);
  r.kernel_dimension = expected;
  if (expected + 1 <= r.columns) {
    if (const auto larger = find_regular_subfamily(members, expected + 1)) {
      r.kernel_basis.clear();
      for (std::size_t i : *larger) r.kernel_basis.push_back(members[i]);
      r.kernel_dimension = expected + 1;
      r.status = RankTheoremStatus::refuted;
      return r;
    }
  }
  r.status = RankTheoremStatus::confirmed;
  return r;
}

template <TotallyOrdered K>
bool rank_theorem_check(const Matrix<K>& a, const RankBudget& budget = {}) {
  return rank_theorem_check_detailed(a, budget).status == RankTheoremStatus::confirmed;
}

}  // namespace tropical
