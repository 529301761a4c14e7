#pragma once

/**
 * @file singularity.hpp
 * @brief Regularity notions for matrices over a totally ordered semifield.
 *
 *   d-singular            det(A) = 0̄, or the optimum is attained by two
 *                         distinct permutations (A is a zero of det).
 *   D-singular            det₊(A) = det₋(A).
 *   singular              some X != 0̄ and split A = A1 ⊕ A2 with disjoint
 *                         supports satisfy A1 X = A2 X; equivalently A X is
 *                         ghost-or-zero in the supertropical cover.
 *   *singular (GM)        some disjoint X1, X2, not both 0̄, with A X1 = A X2.
 *
 * For square matrices singular ⇔ d-singular and *singular ⇔ D-singular. The
 * classifier decides through the determinant census and then extracts
 * machine-checked witnesses.
 *
 * Witness candidates are tried in this order:
 *   1. Cramer vectors: for each (n-1)-subset R of rows, x_j = det(A[R, cols∖j]).
 *      Each row of R ties by construction; when two optimal permutations
 *      differ on the left-out row, that row ties as well.
 *   2. Cramer vectors of smaller blocks: columns T, rows R with |R| = |T|-1,
 *      zero outside T. These cover det(A) = 0̄ through a Frobenius–König
 *      zero block.
 *   3. The bounded candidate grid of the oracle testkit.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropical/combinatorics.hpp"
#include "tropical/cover.hpp"
#include "tropical/error.hpp"
#include "tropical/matrix.hpp"
#include "tropical/oracle.hpp"
#include "tropical/witness.hpp"

namespace tropical {

template <TotallyOrdered K>
bool is_d_singular(const Matrix<K>& a) {
  const auto r = det_report(a);
  return r.det.is_zero() || r.optimal_count() >= 2;
}

template <TotallyOrdered K>
bool is_D_singular(const Matrix<K>& a) {
  const auto r = det_report(a);
  return r.det_plus == r.det_minus;
}

/// Regularity of the column family of a p×n matrix. More columns than rows
/// is always singular; p > n is regular iff some n×n row-minor is d-regular.
template <TotallyOrdered K>
bool is_definitionally_singular(const Matrix<K>& a) {
  const std::size_t p = a.rows(), n = a.cols();
  if (n > p) return true;
  if (n == p) return is_d_singular(a);
  std::vector<std::size_t> all_cols(n);
  for (std::size_t j = 0; j < n; ++j) all_cols[j] = j;
  const bool some_regular = for_each_subset(p, n, [&](const std::vector<std::size_t>& rows) {
    return !is_d_singular(a.submatrix(rows, all_cols));
  });
  return !some_regular;
}

/// x_j = det(A[rows, cols ∖ {j}]) for j in cols, 0̄ elsewhere.
/// Pre: |rows| + 1 == |cols|.
template <TotallyOrdered K>
Vector<K> cramer_vector(const Matrix<K>& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Vector<K> x(a.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> minor_cols;
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != k) minor_cols.push_back(cols[l]);
    x[cols[k]] = det_value_fast(a.submatrix(rows, minor_cols));
  }
  return x;
}

/// Visits Cramer candidates in the documented order (largest blocks first,
/// lexicographic subsets), skipping zero vectors. Stops when visit returns true.
template <TotallyOrdered K, class Visit>
bool for_each_cramer_candidate(const Matrix<K>& a, Visit&& visit) {
  const std::size_t p = a.rows(), n = a.cols();
  for (std::size_t t = std::min(n, p + 1); t >= 1; --t) {
    const bool stop = for_each_subset(n, t, [&](const std::vector<std::size_t>& cols) {
      return for_each_subset(p, t - 1, [&](const std::vector<std::size_t>& rows) {
        const auto x = cramer_vector(a, rows, cols);
        if (is_zero_vector<K>(x)) return false;
        return visit(static_cast<const Vector<K>&>(x));
      });
    });
    if (stop) return true;
  }
  return false;
}

/// Splits A along the row maxima of A ⊗ X. Each row's first argmax entry goes
/// to A1 and the rest of the row to A2; rows whose products are all 0̄ go
/// wholly to A1. Returns nothing unless A ⊗ X is ghost-or-zero.
template <TotallyOrdered K>
std::optional<SingularWitness<K>> split_at(const Matrix<K>& a, const Vector<K>& x) {
  if (is_zero_vector<K>(x) || !is_ghost_or_zero(cover_mat_vec<K>(a, x))) return std::nullopt;
  Matrix<K> a1(a.rows(), a.cols()), a2(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    K best = K::zero();
    std::size_t arg = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      K w = mul(a(i, j), x[j]);
      if (best < w) {
        best = std::move(w);
        arg = j;
      }
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (best.is_zero() || j == arg) a1(i, j) = a(i, j);
      else a2(i, j) = a(i, j);
    }
  }
  SingularWitness<K> w{x, std::move(a1), std::move(a2)};
  if (!verify_singular_witness(a, w)) return std::nullopt;
  return w;
}

/// A verified singularity certificate. Throws PreconditionError on a regular
/// matrix and WitnessSearchExhausted if every candidate source runs dry.
template <TotallyOrdered K>
SingularWitness<K> singular_witness(const Matrix<K>& a) {
  if (!is_definitionally_singular(a)) throw PreconditionError("matrix is regular: no singularity witness exists");
  std::optional<SingularWitness<K>> found;
  for_each_cramer_candidate(a, [&](const Vector<K>& x) {
    found = split_at(a, x);
    return found.has_value();
  });
  if (found) return *found;
  if (a.cols() <= default_budget(a).max_dimension) {
    for_each_candidate(default_budget(a), a.cols(), [&](const Vector<K>& x) {
      found = split_at(a, x);
      return found.has_value();
    });
    if (found) return *found;
  }
  throw WitnessSearchExhausted("no singularity witness among Cramer candidates or the candidate grid");
}

/// Searches Cramer candidates, then the grid, splitting each candidate's
/// support every possible way. Nothing means "not found within bounds".
template <TotallyOrdered K>
std::optional<GmWitness<K>> find_gm_witness(const Matrix<K>& a) {
  std::optional<GmWitness<K>> found;
  for_each_cramer_candidate(a, [&](const Vector<K>& x) {
    found = gm_split(a, x);
    return found.has_value();
  });
  if (found) return found;
  const auto budget = default_budget(a);
  if (a.cols() > budget.max_dimension || normalized_candidate_count(budget.pool.size(), a.cols()) > budget.candidate_cap)
    return std::nullopt;
  for_each_candidate(budget, a.cols(), [&](const Vector<K>& x) {
    found = gm_split(a, x);
    return found.has_value();
  });
  return found;
}

enum class GmBasis {
  determinant,     ///< square: det₊ = det₋ decides exactly
  dimension,       ///< more columns than rows: always dependent
  bounded_search,  ///< tall rectangular: semi-decision over the candidate grid
};

inline std::string to_string(GmBasis b) {
  switch (b) {
    case GmBasis::determinant: return "determinant";
    case GmBasis::dimension: return "dimension";
    case GmBasis::bounded_search: return "bounded_search";
  }
  return "?";
}

template <TotallyOrdered K>
struct GmDecision {
  bool dependent = false;
  GmBasis basis = GmBasis::determinant;
  std::optional<GmWitness<K>> witness;
  /// Grid size explored when basis == bounded_search.
  std::size_t candidates_searched = 0;
};

template <TotallyOrdered K>
GmDecision<K> decide_gm_dependence(const Matrix<K>& a) {
  GmDecision<K> d;
  const std::size_t p = a.rows(), n = a.cols();
  if (p == n) {
    d.basis = GmBasis::determinant;
    d.dependent = is_D_singular(a);
    if (d.dependent) d.witness = find_gm_witness(a);
  } else if (n > p) {
    d.basis = GmBasis::dimension;
    d.dependent = true;
    d.witness = find_gm_witness(a);
  } else {
    d.basis = GmBasis::bounded_search;
    const auto budget = default_budget(a);
    d.candidates_searched = normalized_candidate_count(budget.pool.size(), n);
    d.witness = find_gm_witness(a);
    d.dependent = d.witness.has_value();
  }
  return d;
}

template <TotallyOrdered K>
bool is_gm_dependent(const Matrix<K>& a) {
  return decide_gm_dependence(a).dependent;
}

template <TotallyOrdered K>
struct SingularityReport {
  bool d_singular = false;
  bool D_singular = false;
  bool definitional_singular = false;
  bool gm_dependent = false;
  DetReport<K> det;
  std::optional<SingularWitness<K>> witness;
  std::optional<GmWitness<K>> gm_witness;
};

/// Throws std::logic_error if a report breaks one of the implications that
/// hold for square matrices over a totally ordered semifield.
template <TotallyOrdered K>
void check_report_invariants(const Matrix<K>& a, const SingularityReport<K>& r) {
  auto fail = [](const char* what) { throw std::logic_error(std::string("singularity report invariant: ") + what); };
  if (r.D_singular && !r.d_singular) fail("D-singular but d-regular");
  if (r.gm_dependent && !r.definitional_singular) fail("*singular but regular");
  if (r.definitional_singular != r.d_singular) fail("singular and d-singular disagree");
  if (r.gm_dependent != r.D_singular) fail("*singular and D-singular disagree");
  if (r.witness && !verify_singular_witness(a, *r.witness)) fail("singularity witness does not verify");
  if (r.gm_witness && !verify_gm_witness(a, *r.gm_witness)) fail("GM witness does not verify");
  if (r.witness && !r.definitional_singular) fail("witness on a regular matrix");
  if (r.gm_witness && !r.gm_dependent) fail("GM witness on a *regular matrix");
}

/// Full classification of a square matrix with witnesses.
template <TotallyOrdered K>
SingularityReport<K> classify(const Matrix<K>& a, DetOptions opt = {}) {
  if (!a.is_square()) throw NotSquare();
  SingularityReport<K> r;
  r.det = det_report(a, opt);
  r.d_singular = r.det.det.is_zero() || r.det.optimal_count() >= 2;
  r.D_singular = r.det.det_plus == r.det.det_minus;
  r.definitional_singular = r.d_singular;
  r.gm_dependent = r.D_singular;
  if (r.definitional_singular) r.witness = singular_witness(a);
  if (r.gm_dependent) r.gm_witness = find_gm_witness(a);
  check_report_invariants(a, r);
  return r;
}

}  // namespace tropical
