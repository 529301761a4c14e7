#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force oracles built on the raw definitions of singularity.
 *
 * Nothing here calls the determinant criteria; the oracles only use matrix
 * products and exhaustive enumeration over a finite candidate pool, so they
 * can validate the criterion-based predicates independently.
 *
 * Candidate vectors X are drawn from pool^n and normalized so that their
 * first nonzero coordinate is 1̄ (every certificate is invariant under
 * scaling X by a nonzero scalar). Over F1 the pool {0, 1} is the whole
 * semifield and the enumeration is complete. For max-plus the pool holds the
 * entry quotients a ⊗ b⁻¹ closed under one ⊕/⊗ step, plus 0̄.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropical/error.hpp"
#include "tropical/matrix.hpp"
#include "tropical/polynomial.hpp"
#include "tropical/witness.hpp"

namespace tropical {

template <TotallyOrdered K>
struct SearchBudget {
  std::size_t max_dimension = 6;
  /// Candidate coordinates; always contains 0̄ and 1̄.
  std::vector<K> pool;
  /// Hard cap on the number of normalized candidate vectors.
  std::size_t candidate_cap = 2'000'000;
};

template <TotallyOrdered K>
void sort_unique(std::vector<K>& v) {
  std::sort(v.begin(), v.end(), [](const K& a, const K& b) { return a < b; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Entry quotients a ⊗ b⁻¹ of the nonzero entries, closed under one ⊕/⊗
/// step, plus 0̄ and 1̄. Deterministic given the matrix.
template <TotallyOrdered K>
std::vector<K> value_pool(const Matrix<K>& a) {
  std::vector<K> nz;
  for (const auto& x : a.entries())
    if (!x.is_zero()) nz.push_back(x);
  sort_unique(nz);
  std::vector<K> d{K::one()};
  for (const auto& x : nz)
    for (const auto& y : nz) d.push_back(mul(x, inv(y)));
  sort_unique(d);
  std::vector<K> pool = d;
  for (const auto& x : d)
    for (const auto& y : d) {
      pool.push_back(mul(x, y));
      pool.push_back(add(x, y));
    }
  pool.push_back(K::zero());
  sort_unique(pool);
  return pool;
}

template <TotallyOrdered K>
SearchBudget<K> default_budget(const Matrix<K>& a) {
  SearchBudget<K> b;
  b.pool = value_pool(a);
  return b;
}

/// Number of nonzero vectors in pool^n whose first nonzero coordinate is 1̄.
inline std::size_t normalized_candidate_count(std::size_t pool_size, std::size_t n) {
  // pool_size counts 0̄; after the leading 1̄ the remaining coordinates are free.
  std::size_t total = 0, pw = 1;
  for (std::size_t k = 0; k < n; ++k) {
    total += pw;
    if (pw > (std::size_t(1) << 40) / std::max<std::size_t>(pool_size, 1)) return std::size_t(-1);
    pw *= pool_size;
  }
  return total;
}

/// Calls visit(x) for every normalized nonzero candidate, in lexicographic
/// order of (leading position descending, pool indices ascending). Stops when
/// visit returns true. Throws WitnessSearchExhausted when the cap is exceeded
/// up front.
template <TotallyOrdered K, class Visit>
bool for_each_candidate(const SearchBudget<K>& budget, std::size_t n, Visit&& visit) {
  if (n > budget.max_dimension)
    throw WitnessSearchExhausted("candidate search: dimension " + std::to_string(n) + " above budget " +
                                 std::to_string(budget.max_dimension));
  const std::size_t p = budget.pool.size();
  const std::size_t count = normalized_candidate_count(p, n);
  if (count > budget.candidate_cap)
    throw WitnessSearchExhausted("candidate search: " + std::to_string(count) + " candidates exceed cap " +
                                 std::to_string(budget.candidate_cap));
  Vector<K> x(n);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), K::zero());
    x[lead] = K::one();
    const std::size_t free = n - lead - 1;
    std::vector<std::size_t> idx(free, 0);
    while (true) {
      for (std::size_t k = 0; k < free; ++k) x[lead + 1 + k] = budget.pool[idx[k]];
      if (visit(static_cast<const Vector<K>&>(x))) return true;
      std::size_t k = free;
      while (k > 0 && ++idx[k - 1] == p) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return false;
}

/// Looks for a row split with equal ⊕ on both sides, for each row
/// independently. A1 ⊗ X = A2 ⊗ X is a conjunction of per-row equations on
/// per-row parts, so this is the same search as enumerating every global
/// support bipartition.
template <TotallyOrdered K>
std::optional<SingularWitness<K>> definitional_split(const Matrix<K>& a, const Vector<K>& x) {
  Matrix<K> a1(a.rows(), a.cols()), a2(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::size_t> supp;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) supp.push_back(j);
    std::vector<K> prod(supp.size());
    for (std::size_t k = 0; k < supp.size(); ++k) prod[k] = mul(a(i, supp[k]), x[supp[k]]);
    bool found = false;
    for (std::size_t mask = 0; mask < (std::size_t(1) << supp.size()) && !found; ++mask) {
      K s1 = K::zero(), s2 = K::zero();
      for (std::size_t k = 0; k < supp.size(); ++k) {
        if (mask >> k & 1) s1 = add(s1, prod[k]);
        else s2 = add(s2, prod[k]);
      }
      if (s1 == s2) {
        found = true;
        for (std::size_t k = 0; k < supp.size(); ++k) {
          if (mask >> k & 1) a1(i, supp[k]) = a(i, supp[k]);
          else a2(i, supp[k]) = a(i, supp[k]);
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return SingularWitness<K>{x, std::move(a1), std::move(a2)};
}

/// Some (X, A1, A2) certifying that the columns of A are singular, or none
/// over the whole candidate pool.
template <TotallyOrdered K>
std::optional<SingularWitness<K>> oracle_definitional_singular(const Matrix<K>& a, const SearchBudget<K>& budget) {
  std::optional<SingularWitness<K>> out;
  for_each_candidate(budget, a.cols(), [&](const Vector<K>& x) {
    out = definitional_split(a, x);
    return out.has_value();
  });
  return out;
}

template <TotallyOrdered K>
std::optional<GmWitness<K>> gm_split(const Matrix<K>& a, const Vector<K>& x) {
  std::vector<std::size_t> supp;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) supp.push_back(j);
  for (std::size_t mask = 0; mask < (std::size_t(1) << supp.size()); ++mask) {
    Vector<K> x1(x.size()), x2(x.size());
    for (std::size_t k = 0; k < supp.size(); ++k) (mask >> k & 1 ? x1 : x2)[supp[k]] = x[supp[k]];
    if (mat_vec(a, x1) == mat_vec(a, x2)) return GmWitness<K>{std::move(x1), std::move(x2)};
  }
  return std::nullopt;
}

/// Some disjoint pair (X1, X2) with A ⊗ X1 = A ⊗ X2, or none over the pool.
template <TotallyOrdered K>
std::optional<GmWitness<K>> oracle_gm_dependent(const Matrix<K>& a, const SearchBudget<K>& budget) {
  std::optional<GmWitness<K>> out;
  for_each_candidate(budget, a.cols(), [&](const Vector<K>& x) {
    out = gm_split(a, x);
    return out.has_value();
  });
  return out;
}

/// Grid sweep of is_root over lo, lo + step, ..., hi.
template <RationalMagnitude K>
std::vector<K> oracle_roots(const Polynomial<K>& p, const Rational& lo, const Rational& hi, const Rational& step) {
  if (step <= 0) throw DomainError("oracle_roots: step must be positive");
  std::vector<K> out;
  for (Rational r = lo; r <= hi; r += step) {
    K x(r);
    if (is_root(p, x)) out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random instances for the agreement suites

struct RandomEntries {
  long lo = -2;
  long hi = 2;
  double zero_probability = 0.2;
};

template <TotallyOrdered K, class Rng>
K random_value(Rng& rng, const RandomEntries& entries) {
  if (std::bernoulli_distribution(entries.zero_probability)(rng)) return K::zero();
  if constexpr (std::is_same_v<K, F1>) {
    return F1::one();
  } else if constexpr (RationalMagnitude<K>) {
    return K(Rational(std::uniform_int_distribution<long>(entries.lo, entries.hi)(rng)));
  } else {
    return K(typename K::element(std::uniform_int_distribution<long>(entries.lo, entries.hi)(rng)));
  }
}

template <TotallyOrdered K, class Rng>
Matrix<K> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const RandomEntries& entries = {}) {
  Matrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_value<K>(rng, entries);
  return m;
}

/// All 2^(n*n) square F1 matrices, in binary order of the row-major bits.
inline std::vector<Matrix<F1>> all_f1_matrices(std::size_t rows, std::size_t cols) {
  std::vector<Matrix<F1>> out;
  const std::size_t cells = rows * cols;
  for (std::size_t bits = 0; bits < (std::size_t(1) << cells); ++bits) {
    Matrix<F1> m(rows, cols);
    for (std::size_t c = 0; c < cells; ++c) m(c / cols, c % cols) = F1(bits >> c & 1);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace tropical
