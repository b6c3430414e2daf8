#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhc/coeff.hpp"

namespace hhc {

/// Finite group given by its multiplication table. Elements are 0..order-1.
class FiniteGroup {
 public:
  /// Z/n with element k written x^k; 0 is the identity. n >= 1.
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }
  /// Pairs (a, b) indexed a * |H| + b.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  /// Validates closure, associativity, identity and inverses. Without an explicit
  /// identity the unique two-sided identity of the table is used.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                std::optional<std::size_t> identity = std::nullopt,
                                std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::string& label(std::size_t g) const { return labels_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

 private:
  FiniteGroup() = default;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

/// Partial order on 0..size-1.
class FinitePoset {
 public:
  /// Reflexive-transitive closure of the pairs (i <= j); rejects cycles.
  static FinitePoset from_relations(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& relations);
  /// 0 < 1 < ... < n-1.
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size_ + j]; }

 private:
  std::size_t size_ = 0;
  std::vector<bool> leq_;
};

/// Category with the poset's elements as objects, the group G_i as the loops at i,
/// and one morphism e_ij for each i < j. Composition is written left to right.
class AmalgamCategory {
 public:
  struct Morphism {
    std::size_t dom;
    std::size_t cod;
    std::size_t element;  // group element when dom == cod, otherwise 0
  };

  AmalgamCategory(FinitePoset poset, std::vector<FiniteGroup> groups);

  const FinitePoset& poset() const noexcept { return poset_; }
  const std::vector<FiniteGroup>& groups() const noexcept { return groups_; }
  std::size_t objects() const noexcept { return poset_.size(); }

  /// Morphisms sorted by (dom, cod, element).
  const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
  std::size_t morphism_count() const noexcept { return morphisms_.size(); }
  const Morphism& morphism(std::size_t m) const { return morphisms_[m]; }
  std::size_t identity(std::size_t object) const { return loops_begin_[object] + groups_[object].identity(); }
  std::size_t loop(std::size_t object, std::size_t element) const { return loops_begin_[object] + element; }
  /// Index of e_ij; requires i < j in the poset.
  std::size_t connecting(std::size_t i, std::size_t j) const;
  /// Morphism indices from i to j.
  std::vector<std::size_t> hom(std::size_t i, std::size_t j) const;
  /// a then b; nullopt unless cod(a) == dom(b).
  std::optional<std::size_t> compose(std::size_t a, std::size_t b) const;
  std::string label(std::size_t m) const;

 private:
  FinitePoset poset_;
  std::vector<FiniteGroup> groups_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> loops_begin_;
  std::vector<std::size_t> connecting_;  // objects x objects, SIZE_MAX when absent
};

/// φ_a φ_b = coeff · φ_index.
struct BasisProduct {
  std::size_t index;
  Scalar coeff;
};

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

/// Free k-module on 0..dim-1 with structure constants φ_a φ_b = μ φ_m or 0.
class BasedAlgebra {
 public:
  enum class Kind { Custom, GroupRing, PosetAlgebra, AmalgamAlgebra };

  /// Validates associativity and the unit. `products[a * dim + b]` is nullopt for a zero product.
  static AlgebraPtr custom(Ring ring, std::size_t dim, std::vector<std::optional<BasisProduct>> products,
                           std::vector<Scalar> unit, std::vector<std::string> labels = {});

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  Kind kind() const noexcept { return kind_; }
  const std::optional<BasisProduct>& product(std::size_t a, std::size_t b) const { return products_[a * dim_ + b]; }
  const std::vector<Scalar>& unit() const noexcept { return unit_; }
  /// First basis index in the support of the unit; the NP degree-0 condition reads this coefficient.
  std::size_t unit_pivot() const noexcept { return unit_pivot_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Every structure constant satisfies μ² = μ in the ring.
  bool idempotent() const noexcept { return idempotent_; }
  /// Every structure constant and unit coefficient is an integer.
  bool integral() const noexcept { return integral_; }

  /// Set for group rings.
  const FiniteGroup* group() const { return group_ ? &*group_ : nullptr; }
  /// Set for poset and amalgam algebras; basis index = morphism index.
  const AmalgamCategory* amalgam() const { return amalgam_ ? &*amalgam_ : nullptr; }

  /// Exhaustive check that (ab)c = a(bc) through the table, zero cases included.
  bool is_associative() const;
  /// The unit vector is a two-sided identity on every basis element.
  bool unit_is_identity() const;

  /// Product of two elements given as coefficient vectors.
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  friend AlgebraPtr group_ring(const FiniteGroup& g, const Ring& k);
  friend AlgebraPtr poset_algebra(const FinitePoset& p, const Ring& k);
  friend AlgebraPtr amalgam_algebra(const AmalgamCategory& c, const Ring& k);

 private:
  BasedAlgebra() = default;
  void finish();

  Ring ring_ = Ring::integers();
  std::size_t dim_ = 0;
  Kind kind_ = Kind::Custom;
  std::vector<std::optional<BasisProduct>> products_;
  std::vector<Scalar> unit_;
  std::size_t unit_pivot_ = 0;
  std::vector<std::string> labels_;
  bool idempotent_ = false;
  bool integral_ = false;
  std::optional<FiniteGroup> group_;
  std::optional<AmalgamCategory> amalgam_;
};

/// k[G] with basis the group elements.
AlgebraPtr group_ring(const FiniteGroup& g, const Ring& k);
/// Incidence algebra: basis e_ij for i <= j, e_ij e_jl = e_il. Basis order is that of the
/// amalgam with trivial groups, i.e. sorted by (i, j).
AlgebraPtr poset_algebra(const FinitePoset& p, const Ring& k);
/// Category algebra of an amalgam; basis = morphisms.
AlgebraPtr amalgam_algebra(const AmalgamCategory& c, const Ring& k);

/// φ_{i1} φ_{i2} ... folded left to right; nullopt if the product vanishes.
std::optional<BasisProduct> multiply_chain(const BasedAlgebra& a, const std::vector<std::size_t>& indices);

}  // namespace hhc
