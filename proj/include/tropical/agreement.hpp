#pragma once

/**
 * @file agreement.hpp
 * @brief Oracle/criterion agreement suites.
 *
 * Every suite draws its instances from a seeded std::mt19937_64, so a given
 * (seed, scale) pair always replays the same checks. The scale multiplies the
 * sample counts; 1.0 gives the full acceptance sizes.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tropical/cover.hpp"
#include "tropical/error.hpp"
#include "tropical/finite_semiring.hpp"
#include "tropical/matrix.hpp"
#include "tropical/oracle.hpp"
#include "tropical/polynomial.hpp"
#include "tropical/rank.hpp"
#include "tropical/semifield.hpp"
#include "tropical/singularity.hpp"
#include "tropical/value.hpp"

namespace tropical::agreement {

struct Config {
  std::uint64_t seed = 20240611;
  double scale = 1.0;

  std::size_t count(std::size_t full) const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(full) * scale)));
  }
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;
  double seconds = 0;
};

using Rng = std::mt19937_64;

/// Collects failures with the first few messages kept for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checked_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what());
  }
  void note(std::string s) { extra_.push_back(std::move(s)); }

  CriterionResult finish(int id, std::string name) const {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.checked = checked_;
    r.failures = failures_;
    r.passed = failures_ == 0 && checked_ > 0;
    std::ostringstream d;
    d << checked_ << " checks, " << failures_ << " failures";
    for (const auto& e : extra_) d << "; " << e;
    for (const auto& n : notes_) d << "; " << n;
    r.detail = d.str();
    return r;
  }

 private:
  std::size_t checked_ = 0, failures_ = 0;
  std::vector<std::string> notes_, extra_;
};

// ---------------------------------------------------------------------------
// Generators

inline Rational random_rational(Rng& rng, long num = 20, long den = 6) {
  Rational r(std::uniform_int_distribution<long>(-num, num)(rng), std::uniform_int_distribution<long>(1, den)(rng));
  r.canonicalize();
  return r;
}

template <class K>
K random_element(Rng& rng, double zero_probability = 0.1) {
  if (std::bernoulli_distribution(zero_probability)(rng)) return K::zero();
  if constexpr (std::is_same_v<K, F1>) {
    return F1::one();
  } else if constexpr (RationalMagnitude<K>) {
    return K(random_rational(rng));
  } else if constexpr (std::is_same_v<typename K::group, IntegerGroup>) {
    return K(Integer(std::uniform_int_distribution<long>(-50, 50)(rng)));
  } else {
    typename K::element e;
    for (auto& c : e) c = Integer(std::uniform_int_distribution<long>(-3, 3)(rng));
    return K(e);
  }
}

template <class K>
Matrix<K> small_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  return random_matrix<K>(rng, rows, cols, RandomEntries{-2, 2, 0.2});
}

template <class K>
std::string show(const Matrix<K>& a) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) s << (j ? "," : "") << format_value(a(i, j));
    s << "]";
  }
  s << "]";
  return s.str();
}

inline Matrix<MaxPlus> g3() {
  const MaxPlus o(0), z;
  return Matrix<MaxPlus>(3, 3, {o, o, z, z, o, o, o, z, o});
}

/// The shared max-plus suite: square matrices of order 1..3, entries in
/// {-2..2, 0̄}. Criteria 6, 7, 8, 10 and 13 all run on this list.
inline std::vector<Matrix<MaxPlus>> random_suite(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Matrix<MaxPlus>> out;
  const std::size_t n = cfg.count(10'000);
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    out.push_back(small_matrix<MaxPlus>(rng, dim, dim));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Semifield axioms

template <class K>
void axiom_suite(Rng& rng, std::size_t samples, Tally& t, const char* name) {
  const K zero = K::zero(), one = K::one();
  for (std::size_t s = 0; s < samples; ++s) {
    const K x = random_element<K>(rng), y = random_element<K>(rng), z = random_element<K>(rng);
    const bool ok = add(add(x, y), z) == add(x, add(y, z)) && add(x, y) == add(y, x) && add(x, x) == x &&
                    add(x, zero) == x && mul(mul(x, y), z) == mul(x, mul(y, z)) && mul(x, y) == mul(y, x) &&
                    mul(x, one) == x && mul(x, add(y, z)) == add(mul(x, y), mul(x, z)) && mul(x, zero) == zero &&
                    (x.is_zero() || mul(x, inv(x)) == one) && natural_leq(x, add(x, y)) &&
                    (natural_leq(x, y) || natural_leq(y, x)) && quasi_opposite(x) == x;
    t.check(ok, [&] { return std::string(name) + ": axiom failure"; });
  }
}

inline CriterionResult semifield_axioms(const Config& cfg) {
  Rng rng(cfg.seed + 1);
  Tally t;
  const std::size_t n = cfg.count(10'000);
  axiom_suite<MaxPlus>(rng, n, t, "maxplus");
  axiom_suite<MinPlus>(rng, n, t, "minplus");
  axiom_suite<F1>(rng, n, t, "f1");
  axiom_suite<GroupMax<IntegerGroup>>(rng, n, t, "Z");
  axiom_suite<GroupMax<LexIntegerGroup<2>>>(rng, n, t, "Z^2 lex");
  // quasi-opposite uniqueness on max-plus
  for (std::size_t s = 0; s < cfg.count(100); ++s) {
    const MaxPlus x = random_element<MaxPlus>(rng);
    for (int c = 0; c < 10; ++c) {
      const MaxPlus y = random_element<MaxPlus>(rng);
      if (y == x) continue;
      t.check(!(add(add(x, y), x) == x && add(add(y, x), y) == y), [] { return std::string("second quasi-opposite"); });
    }
  }
  return t.finish(1, "semifield axiom suite");
}

// ---------------------------------------------------------------------------
// 2. Characteristic of finite tables

inline CriterionResult characteristics(const Config&) {
  Tally t;
  const auto f1 = f1_table(), z2 = zmod_table(2), z3 = zmod_table(3), z6 = zmod_table(6);
  const auto z2z3 = product_table(z2, z3);
  t.check(characteristic(f1) == 1, [&] { return "char F1 = " + std::to_string(characteristic(f1)); });
  t.check(characteristic(z2) == 2, [&] { return "char Z/2 = " + std::to_string(characteristic(z2)); });
  t.check(characteristic(z6) == 6, [&] { return "char Z/6 = " + std::to_string(characteristic(z6)); });
  t.check(characteristic(z2z3) == 6, [&] { return "char Z/2xZ/3 = " + std::to_string(characteristic(z2z3)); });
  t.check(is_pure_characteristic(f1), [] { return std::string("F1 not pure"); });
  t.check(is_pure_characteristic(z2), [] { return std::string("Z/2 not pure"); });
  t.check(!is_pure_characteristic(z2z3), [] { return std::string("Z/2xZ/3 reported pure"); });
  // H = pN: k·1 + 1 = 1 exactly when p divides k
  for (const auto* tab : {&f1, &z2, &z3, &z6, &z2z3}) {
    const std::size_t p = characteristic(*tab);
    for (std::size_t k = 1; k <= 4 * tab->size(); ++k) {
      const bool in_h = tab->add(tab->times(k, tab->one()), tab->one()) == tab->one();
      t.check(in_h == (k % p == 0), [&] { return "H != pN at k = " + std::to_string(k); });
    }
  }
  return t.finish(2, "characteristic of finite semirings");
}

// ---------------------------------------------------------------------------
// 3. Frobenius

inline CriterionResult frobenius(const Config& cfg) {
  Rng rng(cfg.seed + 3);
  Tally t;
  std::uniform_int_distribution<unsigned> deg(1, 8);
  for (std::size_t s = 0; s < cfg.count(10'000); ++s) {
    const unsigned n = deg(rng);
    const MaxPlus x = random_element<MaxPlus>(rng), y = random_element<MaxPlus>(rng);
    t.check(frobenius_check(x, y, n), [&] { return "maxplus (" + format_value(x) + "," + format_value(y) + ")"; });
    const F1 a = random_element<F1>(rng, 0.5), b = random_element<F1>(rng, 0.5);
    t.check(frobenius_check(a, b, n), [] { return std::string("f1"); });
  }
  return t.finish(3, "Frobenius identity");
}

// ---------------------------------------------------------------------------
// 4. Non-cancellation in K[X]

template <class K>
void non_cancellation(Tally& t, const char* name) {
  using P = Polynomial<K>;
  const P x1 = poly_add(P::monomial(1), P::constant(K::one()));
  const P x2 = poly_add(P::monomial(2), P::constant(K::one()));
  const P x2x = poly_add(x2, P::monomial(1));
  t.check(!(x2 == x2x), [&] { return std::string(name) + ": X^2+1 equals X^2+X+1"; });
  t.check(poly_mul(x1, x2) == poly_mul(x1, x2x), [&] { return std::string(name) + ": products differ"; });
}

inline CriterionResult non_cancellation(const Config&) {
  Tally t;
  non_cancellation<MaxPlus>(t, "maxplus");
  non_cancellation<MinPlus>(t, "minplus");
  non_cancellation<F1>(t, "f1");
  return t.finish(4, "non-cancellation in K[X]");
}

// ---------------------------------------------------------------------------
// 5. Supertropical cover

inline Cover<MaxPlus> random_cover(Rng& rng) {
  MaxPlus m = random_element<MaxPlus>(rng, 0.1);
  // small magnitudes so that ties happen often
  if (!m.is_zero()) m = MaxPlus(Rational(std::uniform_int_distribution<long>(-3, 3)(rng)));
  return Cover<MaxPlus>(m, std::bernoulli_distribution(0.4)(rng) ? Layer::ghost : Layer::tangible);
}

inline CriterionResult supertropical(const Config& cfg) {
  Rng rng(cfg.seed + 5);
  Tally t;
  for (std::size_t s = 0; s < cfg.count(10'000); ++s) {
    const auto a = random_cover(rng), b = random_cover(rng), c = random_cover(rng);
    const MaxPlus x = random_element<MaxPlus>(rng), y = random_element<MaxPlus>(rng);
    const bool hat_ok = hat(add(x, y)) == cover_add(hat(x), hat(y)) && hat(mul(x, y)) == cover_mul(hat(x), hat(y)) &&
                        (hat(x) == hat(y)) == (x == y) && hat(x).magnitude() == x &&
                        cover_add(Cover<MaxPlus>::tangible(x), Cover<MaxPlus>::tangible(x)) == hat(x);
    t.check(hat_ok, [] { return std::string("hat map"); });
    const bool ring_ok = cover_add(a, b) == cover_add(b, a) &&
                         cover_add(cover_add(a, b), c) == cover_add(a, cover_add(b, c)) &&
                         cover_mul(a, b) == cover_mul(b, a) &&
                         cover_mul(cover_mul(a, b), c) == cover_mul(a, cover_mul(b, c)) &&
                         cover_mul(a, cover_add(b, c)) == cover_add(cover_mul(a, b), cover_mul(a, c)) &&
                         cover_add(a, Cover<MaxPlus>()) == a &&
                         cover_mul(a, Cover<MaxPlus>::tangible(MaxPlus::one())) == a &&
                         cover_mul(a, Cover<MaxPlus>()) == Cover<MaxPlus>();
    t.check(ring_ok, [] { return std::string("cover ring law"); });
  }
  return t.finish(5, "supertropical cover laws");
}

// ---------------------------------------------------------------------------
// 6. Singularity equivalences against the definitional oracles

template <class K>
void equivalence_check(const Matrix<K>& a, const SearchBudget<K>& budget, Tally& t) {
  const auto rep = classify(a);
  const auto def = oracle_definitional_singular(a, budget);
  const auto gm = oracle_gm_dependent(a, budget);
  t.check(def.has_value() == rep.d_singular, [&] { return "definitional oracle vs d-criterion on " + show(a); });
  t.check(gm.has_value() == rep.D_singular, [&] { return "GM oracle vs D-criterion on " + show(a); });
  t.check(!def || verify_singular_witness(a, *def), [&] { return "oracle witness fails on " + show(a); });
  t.check(!gm || verify_gm_witness(a, *gm), [&] { return "oracle GM witness fails on " + show(a); });
  t.check(!rep.d_singular || (rep.witness && verify_singular_witness(a, *rep.witness)),
          [&] { return "missing singularity witness on " + show(a); });
  t.check(!rep.D_singular || (rep.gm_witness && verify_gm_witness(a, *rep.gm_witness)),
          [&] { return "missing GM witness on " + show(a); });
}

inline CriterionResult singularity_equivalences(const Config& cfg, const std::vector<Matrix<MaxPlus>>& suite) {
  Tally t;
  SearchBudget<F1> f1_budget;
  f1_budget.pool = {F1::zero(), F1::one()};
  std::size_t f1_count = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& a : all_f1_matrices(n, n)) {
      equivalence_check(a, f1_budget, t);
      ++f1_count;
    }
  for (const auto& a : suite) equivalence_check(a, default_budget(a), t);
  t.note(std::to_string(f1_count) + " F1 matrices, " + std::to_string(suite.size()) + " max-plus matrices");
  (void)cfg;
  return t.finish(6, "singularity equivalences vs oracles");
}

// ---------------------------------------------------------------------------
// 7. Implication chain

inline CriterionResult implication_chain(const Config&, const std::vector<Matrix<MaxPlus>>& suite) {
  Tally t;
  for (const auto& a : suite) {
    const auto rep = classify(a);
    t.check(!rep.D_singular || rep.d_singular, [&] { return "D-singular but d-regular: " + show(a); });
    t.check(!rep.gm_dependent || rep.definitional_singular, [&] { return "*singular but regular: " + show(a); });
    const auto gm = oracle_gm_dependent(a, default_budget(a));
    t.check(!gm || is_definitionally_singular(a), [&] { return "GM oracle witness on regular matrix " + show(a); });
  }
  const auto rep = classify(g3());
  t.check(rep.d_singular && !rep.D_singular, [] { return std::string("G3 is not d-singular and D-regular"); });
  t.check(rep.witness && verify_singular_witness(g3(), *rep.witness), [] { return std::string("G3 witness"); });
  return t.finish(7, "implication chain D => d, GM => singular");
}

// ---------------------------------------------------------------------------
// 8. Transpose invariance

template <class K>
bool same_verdicts(const SingularityReport<K>& a, const SingularityReport<K>& b) {
  return a.d_singular == b.d_singular && a.D_singular == b.D_singular &&
         a.definitional_singular == b.definitional_singular && a.gm_dependent == b.gm_dependent &&
         a.det.det == b.det.det && a.det.det_plus == b.det.det_plus && a.det.det_minus == b.det.det_minus &&
         a.det.optimal_count() == b.det.optimal_count();
}

inline CriterionResult transpose_invariance(const Config&, const std::vector<Matrix<MaxPlus>>& suite) {
  Tally t;
  for (const auto& a : suite)
    t.check(same_verdicts(classify(a), classify(transpose(a))), [&] { return "transpose changes verdict: " + show(a); });
  return t.finish(8, "transpose invariance of classify");
}

// ---------------------------------------------------------------------------
// 9. Gl_n(F1) = S_n

inline CriterionResult gl_n_f1(const Config&) {
  Tally t;
  std::size_t factorial = 1;
  for (std::size_t n = 1; n <= 3; ++n) {
    factorial *= n;
    const auto all = all_f1_matrices(n, n);
    const auto id = Matrix<F1>::identity(n);
    std::size_t invertible = 0, monomial = 0;
    for (const auto& a : all) {
      const bool has_inverse = std::any_of(all.begin(), all.end(), [&](const Matrix<F1>& b) {
        return mat_mul(a, b) == id && mat_mul(b, a) == id;
      });
      invertible += has_inverse;
      monomial += is_monomial(a);
      t.check(has_inverse == is_monomial(a), [&] { return "invertibility vs monomial on " + show(a); });
      if (is_monomial(a)) t.check(mat_mul(a, monomial_inverse(a)) == id, [&] { return "monomial_inverse " + show(a); });
    }
    t.check(invertible == factorial, [&] {
      return "n = " + std::to_string(n) + ": " + std::to_string(invertible) + " invertible, expected " +
             std::to_string(factorial);
    });
    t.note("n=" + std::to_string(n) + ": " + std::to_string(invertible) + " invertible");
  }
  return t.finish(9, "Gl_n(F1) has n! elements");
}

// ---------------------------------------------------------------------------
// 10. Monomial domination

inline CriterionResult monomial_domination(const Config&, const std::vector<Matrix<MaxPlus>>& suite) {
  Tally t;
  for (const auto& a : suite) {
    const auto s = dominates_monomial(a);
    const bool nonzero = !det(a).is_zero();
    t.check(s.has_value() == nonzero, [&] { return "det != 0 vs dominating monomial on " + show(a); });
    if (s) t.check(is_monomial(*s) && dominates(a, *s), [&] { return "bad dominated monomial for " + show(a); });
  }
  return t.finish(10, "det != 0 iff a monomial is dominated");
}

// ---------------------------------------------------------------------------
// 11. Minor lemma

inline CriterionResult minor_lemma(const Config& cfg) {
  Rng rng(cfg.seed + 11);
  Tally t;
  std::size_t regular = 0;
  for (std::size_t s = 0; s < cfg.count(1'000); ++s) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(n, 5)(rng);
    const auto a = small_matrix<MaxPlus>(rng, p, n);
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    const bool regular_minor = for_each_subset(p, n, [&](const std::vector<std::size_t>& rows) {
      return !is_d_singular(a.submatrix(rows, cols));
    });
    const auto oracle = oracle_definitional_singular(a, default_budget(a));
    regular += regular_minor;
    t.check(oracle.has_value() != regular_minor, [&] { return "oracle vs regular minor on " + show(a); });
    t.check(is_definitionally_singular(a) != regular_minor, [&] { return "is_definitionally_singular on " + show(a); });
  }
  t.note(std::to_string(regular) + " regular");
  return t.finish(11, "rectangular regularity iff a regular minor");
}

// ---------------------------------------------------------------------------
// 12. Basis completion

inline CriterionResult basis_completion(const Config& cfg) {
  Rng rng(cfg.seed + 12);
  Tally t;
  std::size_t attempts = 0;
  for (std::size_t s = 0; s < cfg.count(1'000); ++s) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    std::vector<Vector<MaxPlus>> family;
    do {
      ++attempts;
      family.clear();
      const auto m = small_matrix<MaxPlus>(rng, n, p);
      for (std::size_t j = 0; j < p; ++j) family.push_back(m.column(j));
    } while (!is_regular_family(family));
    const auto done = complete_to_tropical_basis(family, n);
    bool ok = done.size() == n && is_regular_family(done) && std::equal(family.begin(), family.end(), done.begin());
    for (std::size_t k = p; ok && k < n; ++k) {
      const auto& v = done[k];
      ok = std::count_if(v.begin(), v.end(), [](const MaxPlus& x) { return !x.is_zero(); }) == 1 &&
           std::count(v.begin(), v.end(), MaxPlus::one()) == 1;
    }
    t.check(ok, [&] { return "completion of a " + std::to_string(p) + "-family in dimension " + std::to_string(n); });
  }
  t.note(std::to_string(attempts) + " draws for the regular families");
  return t.finish(12, "completion to a tropical basis");
}

// ---------------------------------------------------------------------------
// 13. Rank theorem

inline CriterionResult rank_theorem(const Config&, const std::vector<Matrix<MaxPlus>>& suite) {
  Tally t;
  const MaxPlus o(0), z;
  struct Fixed {
    Matrix<MaxPlus> a;
    std::size_t rank, ker;
    const char* name;
  };
  const std::vector<Fixed> fixed = {{Matrix<MaxPlus>::identity(2), 2, 0, "I2"},
                                    {Matrix<MaxPlus>(2, 2, {o, o, o, o}), 1, 1, "[[0,0],[0,0]]"},
                                    {g3(), 2, 1, "G3"}};
  for (const auto& f : fixed) {
    const auto r = rank_theorem_check_detailed(f.a);
    t.check(r.status == RankTheoremStatus::confirmed && r.rank == f.rank && r.kernel_dimension == f.ker, [&] {
      return std::string(f.name) + ": " + to_string(r.status) + " rank " + std::to_string(r.rank) + " ker " +
             std::to_string(r.kernel_dimension);
    });
  }
  std::size_t exhausted = 0, refuted = 0, certified = 0;
  for (const auto& a : suite) {
    const auto r = rank_theorem_check_detailed(a);
    exhausted += r.status == RankTheoremStatus::exhausted;
    if (r.status == RankTheoremStatus::refuted) {
      ++refuted;
      // independent re-check of the counterexample family
      const bool in_kernel = std::all_of(r.kernel_basis.begin(), r.kernel_basis.end(),
                                         [&](const Vector<MaxPlus>& x) { return tker_membership(a, x); });
      certified += in_kernel && is_regular_family(r.kernel_basis) && r.kernel_basis.size() + r.rank > a.cols();
    }
    t.check(r.status == RankTheoremStatus::confirmed,
            [&] { return to_string(r.status) + " on " + show(a) + " rank " + std::to_string(r.rank); });
  }
  t.note(std::to_string(suite.size() - exhausted - refuted) + " confirmed, " + std::to_string(refuted) +
         " refuted (" + std::to_string(certified) + " with a re-verified regular family in Tker larger than n - rank), " +
         std::to_string(exhausted) + " exhausted");
  return t.finish(13, "rank theorem");
}

// ---------------------------------------------------------------------------
// 14. Kernel duality

/// A random member of Ker l, built by forcing a tie at the top (or l(x) = 0̄).
inline Vector<MaxPlus> plant_kernel_member(Rng& rng, const LinearForm<MaxPlus>& l) {
  const std::size_t n = l.size();
  Vector<MaxPlus> x(n);
  for (auto& c : x) c = random_element<MaxPlus>(rng, 0.2);
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < n; ++i)
    if (!l.coeffs[i].is_zero()) nz.push_back(i);
  if (nz.size() < 2 || std::bernoulli_distribution(0.1)(rng)) {
    for (std::size_t i : nz) x[i] = MaxPlus::zero();
    return x;
  }
  std::shuffle(nz.begin(), nz.end(), rng);
  MaxPlus top = l(x);
  const MaxPlus bump(random_rational(rng, 3, 2));
  top = add(top, bump);
  for (int k = 0; k < 2; ++k) x[nz[k]] = mul(top, inv(l.coeffs[nz[k]]));
  return x;
}

inline LinearForm<MaxPlus> random_form(Rng& rng, std::size_t n) {
  LinearForm<MaxPlus> l{Vector<MaxPlus>(n)};
  for (auto& c : l.coeffs) c = random_element<MaxPlus>(rng, 0.2);
  return l;
}

inline CriterionResult kernel_duality(const Config& cfg) {
  Rng rng(cfg.seed + 14);
  Tally t;
  for (std::size_t s = 0; s < cfg.count(10'000); ++s) {
    const auto l = random_form(rng, std::uniform_int_distribution<std::size_t>(2, 4)(rng));
    const auto x = plant_kernel_member(rng, l), y = plant_kernel_member(rng, l);
    const MaxPlus lambda = random_element<MaxPlus>(rng, 0.1);
    t.check(kernel_membership(l, x) && kernel_membership(l, y), [] { return std::string("planted member rejected"); });
    t.check(kernel_membership(l, vec_add<MaxPlus>(x, y)), [] { return std::string("Ker l not closed under +"); });
    t.check(kernel_membership(l, scale<MaxPlus>(lambda, x)), [] { return std::string("Ker l not closed under scaling"); });
  }
  for (std::size_t s = 0; s < cfg.count(1'000); ++s) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const auto l = random_form(rng, n);
    const auto gens = kernel_generators(l);
    for (const auto& g : gens) t.check(kernel_membership(l, g), [] { return std::string("generator outside kernel"); });
    const auto g = Matrix<MaxPlus>::from_columns(gens, n);
    const auto x = plant_kernel_member(rng, l);
    const auto cert = span_membership(g, x);
    t.check(cert.member && mat_vec(g, cert.lambda) == x, [&] { return "planted member outside generator span"; });
  }
  return t.finish(14, "kernel duality and generators");
}

// ---------------------------------------------------------------------------
// 15. Polynomial roots

inline CriterionResult polynomial_roots(const Config& cfg) {
  Rng rng(cfg.seed + 15);
  Tally t;
  const Rational lo(-24), hi(24), step(1, 4);
  std::size_t with_grid_roots = 0;
  for (std::size_t s = 0; s < cfg.count(1'000); ++s) {
    const std::size_t d = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    typename Polynomial<MaxPlus>::Coefficients c;
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == d || std::bernoulli_distribution(0.75)(rng))
        c[i] = MaxPlus(Rational(std::uniform_int_distribution<long>(-8, 8)(rng)));
    }
    const Polynomial<MaxPlus> p(c);
    const auto rs = roots(p);
    std::size_t total = 0;
    for (const auto& r : rs) {
      total += r.multiplicity;
      t.check(is_root(p, r.value), [&] { return "reported root fails is_root: " + format_value(r.value); });
      t.check(is_ghost_or_zero(std::vector<Cover<MaxPlus>>{eval_cover(p, r.value)}),
              [&] { return "cover evaluation not ghost at a root"; });
      if (!r.value.is_zero()) {
        const Rational q = r.value.magnitude() / step;
        if (q.get_den() == 1 && r.value.magnitude() >= lo && r.value.magnitude() <= hi) {
          const auto grid = oracle_roots(p, r.value.magnitude(), r.value.magnitude(), step);
          t.check(grid.size() == 1, [&] { return "grid misses root " + format_value(r.value); });
        }
      }
    }
    t.check(total <= p.degree(), [&] { return "multiplicities exceed the degree"; });
    const auto grid = oracle_roots(p, lo, hi, step);
    with_grid_roots += !grid.empty();
    for (const auto& g : grid)
      t.check(std::any_of(rs.begin(), rs.end(), [&](const Root<MaxPlus>& r) { return r.value == g; }),
              [&] { return "grid root " + format_value(g) + " not reported"; });
    for (Rational x = lo; x <= hi; x += 2) {
      const MaxPlus v(x);
      const auto cv = eval_cover(p, v);
      t.check((cv.is_ghost() || cv.is_zero()) == is_root(p, v), [&] { return "ghost detection vs is_root"; });
    }
  }
  t.note(std::to_string(with_grid_roots) + " polynomials with grid roots");
  return t.finish(15, "polynomial roots vs grid and cover");
}

// ---------------------------------------------------------------------------
// 16. Fast determinant

inline CriterionResult fast_determinant(const Config& cfg) {
  Rng rng(cfg.seed + 16);
  Tally t;
  for (std::size_t s = 0; s < cfg.count(500); ++s) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const RandomEntries entries{-9, 9, 0.25};
    if (s % 2 == 0) {
      const auto a = random_matrix<MaxPlus>(rng, n, n, entries);
      t.check(det_value_fast(a) == det_report(a).det, [&] { return "maxplus " + show(a); });
    } else {
      const auto a = random_matrix<MinPlus>(rng, n, n, entries);
      t.check(det_value_fast(a) == det_report(a).det, [&] { return "minplus " + show(a); });
    }
  }
  return t.finish(16, "fast determinant vs census");
}

// ---------------------------------------------------------------------------

/// Runs every criterion in order, calling report after each one.
inline std::vector<CriterionResult> run_all(const Config& cfg,
                                            const std::function<void(const CriterionResult&)>& report = {}) {
  const auto suite = random_suite(cfg);
  std::vector<std::function<CriterionResult()>> jobs = {
      [&] { return semifield_axioms(cfg); },
      [&] { return characteristics(cfg); },
      [&] { return frobenius(cfg); },
      [&] { return non_cancellation(cfg); },
      [&] { return supertropical(cfg); },
      [&] { return singularity_equivalences(cfg, suite); },
      [&] { return implication_chain(cfg, suite); },
      [&] { return transpose_invariance(cfg, suite); },
      [&] { return gl_n_f1(cfg); },
      [&] { return monomial_domination(cfg, suite); },
      [&] { return minor_lemma(cfg); },
      [&] { return basis_completion(cfg); },
      [&] { return rank_theorem(cfg, suite); },
      [&] { return kernel_duality(cfg); },
      [&] { return polynomial_roots(cfg); },
      [&] { return fast_determinant(cfg); },
  };
  std::vector<CriterionResult> out;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = jobs[k]();
    } catch (const std::exception& e) {
      r.id = static_cast<int>(k + 1);
      r.name = "criterion " + std::to_string(k + 1);
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tropical::agreement
