#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hhc/algebra.hpp"
#include "hhc/matrix.hpp"

namespace hhc {

/// f : A^{⊗n} -> A on basis tuples. values[t * dim + b] is the coefficient of φ_b in
/// f(tuple t), tuples ranked lexicographically. Degree 0 holds the single value f(1).
struct HochschildCochain {
  AlgebraPtr alg;
  std::size_t degree = 0;
  std::vector<Scalar> values;

  static HochschildCochain zero(AlgebraPtr alg, std::size_t degree);
  std::size_t tuples() const { return values.size() / alg->dim(); }
  /// Coefficient vector of f(tuple t).
  std::vector<Scalar> at(std::size_t t) const;
  Scalar& coeff(std::size_t t, std::size_t b) { return values[t * alg->dim() + b]; }
  const Scalar& coeff(std::size_t t, std::size_t b) const { return values[t * alg->dim() + b]; }
  bool is_zero() const;

  friend bool operator==(const HochschildCochain& a, const HochschildCochain& b) {
    return a.alg == b.alg && a.degree == b.degree && a.values == b.values;
  }
};

HochschildCochain operator+(const HochschildCochain& a, const HochschildCochain& b);
HochschildCochain operator-(const HochschildCochain& a, const HochschildCochain& b);
HochschildCochain scale(const Scalar& c, const HochschildCochain& f);

/// f(φ_1 ⊗ ... ⊗ φ_n) = λ · φ_1...φ_n. lambdas has one entry per tuple and is zero on
/// tuples whose product vanishes. Degree 0 is strict: f(1) = λ · 1.
struct APCochain {
  AlgebraPtr alg;
  std::size_t degree = 0;
  std::vector<Scalar> lambdas;

  static APCochain zero(AlgebraPtr alg, std::size_t degree);

  friend bool operator==(const APCochain& a, const APCochain& b) {
    return a.alg == b.alg && a.degree == b.degree && a.lambdas == b.lambdas;
  }
};

HochschildCochain embed(const APCochain& f);

/// Hochschild coboundary.
HochschildCochain delta(const HochschildCochain& f);

/// (f·g)(a_1..a_{p+q}) = f(a_1..a_p) g(a_{p+1}..a_{p+q}).
HochschildCochain gerstenhaber(const HochschildCochain& f, const HochschildCochain& g);

/// g substituted into slot j of f; needs deg f >= 1 and 0 <= j < deg f (IndexOutOfRange).
HochschildCochain partial_composition(const HochschildCochain& f, const HochschildCochain& g, std::size_t j);

/// Σ_j (-1)^{(p-1-j)(q-1)} f ∘_j g. Degree-0 f raises InvalidInput.
HochschildCochain pre_lie(const HochschildCochain& f, const HochschildCochain& g);

/// f = embed(ap) + np with np vanishing on the product's coefficient.
std::pair<APCochain, HochschildCochain> ap_split(const HochschildCochain& f);

bool is_autopoietic(const HochschildCochain& f);
bool is_non_autopoietic(const HochschildCochain& f);

enum class ComplexVariant { Full, AP, NP, RelativeE };

/// C^0..C^N and δ^n : C^n -> C^{n+1} for n < N, as integer matrices (rows = dim C^{n+1}).
struct CochainComplex {
  std::vector<std::size_t> dims;
  std::vector<IntegerMatrix> differentials;
};

/// Upper bound on the entries of a single differential matrix.
struct ResourceGuard {
  std::size_t max_matrix_entries = std::size_t{1} << 24;
};

/// Differentials of the chosen complex in the canonical bases:
///  - Full: (tuple, output basis element);
///  - AP: tuples with nonzero product, coordinate = coefficient on the product (degree 0: the unit);
///  - NP: (tuple, output) with output != product (group rings only, else NotGroupRing);
///  - RelativeE: see RelativeBasis (amalgam and poset algebras only, else NotAmalgam).
/// Requires integral structure constants.
CochainComplex build_complex(const AlgebraPtr& a, ComplexVariant variant, std::size_t max_degree,
                             const ResourceGuard& guard = {});

/// Number of basis cochains of the variant in degree n.
std::size_t complex_dimension(const AlgebraPtr& a, ComplexVariant variant, std::size_t n);

/// Checks b'φ + φb' = 1 on k[C]^{⊗_E (n+1)} as an exact matrix identity.
bool verify_contracting_homotopy(const AmalgamCategory& c, std::size_t n);

// ---- E-relative cochains ----------------------------------------------------

/// Basis of the relative complex in degree n. Degree 0: loop morphisms (⊕ k[G_i]).
/// Degree n >= 1: pairs (composable tuple α_1..α_n, output in Mor(dom α_1, cod α_n)).
class RelativeBasis {
 public:
  RelativeBasis(AlgebraPtr alg, std::size_t degree);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Composable tuples in lexicographic order.
  const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_; }
  /// (tuple index, output morphism); degree 0 uses tuple index 0.
  const std::pair<std::size_t, std::size_t>& entry(std::size_t i) const { return entries_[i]; }
  std::optional<std::size_t> find_tuple(const std::vector<std::size_t>& t) const;
  std::optional<std::size_t> find(std::size_t tuple, std::size_t output) const;

 private:
  AlgebraPtr alg_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::vector<std::pair<std::size_t, std::size_t>> entries_;
  std::vector<std::size_t> tuple_offset_;  // first entry of each tuple
};

struct RelativeCochain {
  AlgebraPtr alg;
  std::size_t degree = 0;
  std::vector<Scalar> values;  // indexed by RelativeBasis(alg, degree)

  static RelativeCochain zero(AlgebraPtr alg, std::size_t degree);
  friend bool operator==(const RelativeCochain& a, const RelativeCochain& b) {
    return a.alg == b.alg && a.degree == b.degree && a.values == b.values;
  }
};

/// The relative coboundary, degree 0 given by (δf)(α) = α f(e_jj) - f(e_ii) α.
RelativeCochain relative_delta(const RelativeCochain& f);

/// Extension by zero to a full Hochschild cochain; degree 0 sums the loop values.
HochschildCochain to_hochschild(const RelativeCochain& f);

/// Restriction of a full cochain that satisfies the relative support conditions
/// (InvalidInput otherwise).
RelativeCochain to_relative(const HochschildCochain& f);

}  // namespace hhc
