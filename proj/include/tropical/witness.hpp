#pragma once

// Certificates for singularity and Gondran–Minoux dependence, with exact
// verifiers that only use the raw definitions.

#include <span>

#include "tropical/matrix.hpp"

namespace tropical {

/// A = A1 ⊕ A2 with disjoint supports and A1 ⊗ X = A2 ⊗ X, X != 0̄.
template <Semifield K>
struct SingularWitness {
  Vector<K> x;
  Matrix<K> a1;
  Matrix<K> a2;

  friend bool operator==(const SingularWitness&, const SingularWitness&) = default;
};

/// Disjoint supports, X1 ⊕ X2 != 0̄ and A ⊗ X1 = A ⊗ X2.
template <Semifield K>
struct GmWitness {
  Vector<K> x1;
  Vector<K> x2;

  friend bool operator==(const GmWitness&, const GmWitness&) = default;
};

template <Semifield K>
bool verify_singular_witness(const Matrix<K>& a, const SingularWitness<K>& w) {
  if (w.x.size() != a.cols() || is_zero_vector<K>(w.x)) return false;
  if (w.a1.rows() != a.rows() || w.a1.cols() != a.cols()) return false;
  if (w.a2.rows() != a.rows() || w.a2.cols() != a.cols()) return false;
  if (!is_orthogonal<K>(w.a1.entries(), w.a2.entries())) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(add(w.a1(i, j), w.a2(i, j)) == a(i, j))) return false;
  return mat_vec(w.a1, w.x) == mat_vec(w.a2, w.x);
}

template <Semifield K>
bool verify_gm_witness(const Matrix<K>& a, const GmWitness<K>& w) {
  if (w.x1.size() != a.cols() || w.x2.size() != a.cols()) return false;
  if (!is_orthogonal<K>(w.x1, w.x2)) return false;
  if (is_zero_vector<K>(vec_add<K>(w.x1, w.x2))) return false;
  return mat_vec(a, w.x1) == mat_vec(a, w.x2);
}

}  // namespace tropical
