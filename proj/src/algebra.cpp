#include "hhc/algebra.hpp"

#include <algorithm>
#include <limits>

#include "hhc/error.hpp"

namespace hhc {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string object_label(std::size_t i, std::size_t j, std::size_t objects) {
  if (objects <= 9) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

}  // namespace

// ---- FiniteGroup ----------------------------------------------------------

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclic group of order 0");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    labels[a] = a == 0 ? "e" : a == 1 ? "x" : "x^" + std::to_string(a);
  }
  return from_table(std::move(table), 0, std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), n = h.order();
  std::vector<std::vector<std::size_t>> table(m * n, std::vector<std::size_t>(m * n));
  std::vector<std::string> labels(m * n);
  for (std::size_t a = 0; a < m * n; ++a) {
    for (std::size_t b = 0; b < m * n; ++b) {
      table[a][b] = g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
    }
    labels[a] = "(" + g.label(a / n) + "," + h.label(a % n) + ")";
  }
  return from_table(std::move(table), g.identity() * n + h.identity(), std::move(labels));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table, std::optional<std::size_t> identity,
                                    std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "group table is not square");
    for (std::size_t x : row) {
      if (x >= n) throw Error(ErrorCode::InvalidInput, "group table entry " + std::to_string(x) + " out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::InvalidInput, "group table is not associative at (" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
  auto is_identity = [&](std::size_t e) {
    for (std::size_t a = 0; a < n; ++a) {
      if (table[e][a] != a || table[a][e] != a) return false;
    }
    return true;
  };
  if (identity) {
    if (*identity >= n || !is_identity(*identity)) {
      throw Error(ErrorCode::InvalidInput, "declared identity is not a two-sided identity");
    }
  } else {
    for (std::size_t e = 0; e < n && !identity; ++e) {
      if (is_identity(e)) identity = e;
    }
    if (!identity) throw Error(ErrorCode::InvalidInput, "group table has no identity");
  }
  FiniteGroup g;
  g.identity_ = *identity;
  g.inverse_.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == g.identity_ && table[b][a] == g.identity_) g.inverse_[a] = b;
    }
    if (g.inverse_[a] == kNone) throw Error(ErrorCode::InvalidInput, "element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) labels[a] = a == g.identity_ ? "e" : "g" + std::to_string(a);
  } else if (labels.size() != n) {
    throw Error(ErrorCode::InvalidInput, "label count does not match group order");
  }
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  return g;
}

// ---- FinitePoset ----------------------------------------------------------

FinitePoset FinitePoset::from_relations(std::size_t size,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  if (size == 0) throw Error(ErrorCode::InvalidInput, "poset must be nonempty");
  FinitePoset p;
  p.size_ = size;
  p.leq_.assign(size * size, false);
  for (std::size_t i = 0; i < size; ++i) p.leq_[i * size + i] = true;
  for (auto [i, j] : relations) {
    if (i >= size || j >= size) {
      throw Error(ErrorCode::InvalidInput,
                  "relation (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0.." + std::to_string(size - 1));
    }
    p.leq_[i * size + j] = true;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (p.leq_[i * size + k])
        for (std::size_t j = 0; j < size; ++j)
          if (p.leq_[k * size + j]) p.leq_[i * size + j] = true;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (p.leq_[i * size + j] && p.leq_[j * size + i]) {
        throw Error(ErrorCode::InvalidInput,
                    "relations contain a cycle through " + std::to_string(i) + " and " + std::to_string(j));
      }
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return from_relations(n, rel);
}

FinitePoset FinitePoset::antichain(std::size_t n) { return from_relations(n, {}); }

// ---- AmalgamCategory ------------------------------------------------------

AmalgamCategory::AmalgamCategory(FinitePoset poset, std::vector<FiniteGroup> groups)
    : poset_(std::move(poset)), groups_(std::move(groups)) {
  const std::size_t n = poset_.size();
  if (groups_.size() != n) {
    throw Error(ErrorCode::InvalidInput, "amalgam needs one group per object: " + std::to_string(n) + " objects, " +
                                             std::to_string(groups_.size()) + " groups");
  }
  loops_begin_.assign(n, 0);
  connecting_.assign(n * n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        loops_begin_[i] = morphisms_.size();
        for (std::size_t g = 0; g < groups_[i].order(); ++g) morphisms_.push_back({i, i, g});
      } else if (poset_.leq(i, j)) {
        connecting_[i * n + j] = morphisms_.size();
        morphisms_.push_back({i, j, 0});
      }
    }
  }
}

std::size_t AmalgamCategory::connecting(std::size_t i, std::size_t j) const {
  std::size_t m = connecting_[i * objects() + j];
  if (m == kNone) throw Error(ErrorCode::IndexOutOfRange, "no morphism e_ij for this pair");
  return m;
}

std::vector<std::size_t> AmalgamCategory::hom(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  if (i == j) {
    for (std::size_t g = 0; g < groups_[i].order(); ++g) out.push_back(loop(i, g));
  } else if (poset_.leq(i, j)) {
    out.push_back(connecting(i, j));
  }
  return out;
}

std::optional<std::size_t> AmalgamCategory::compose(std::size_t a, std::size_t b) const {
  const Morphism& x = morphisms_[a];
  const Morphism& y = morphisms_[b];
  if (x.cod != y.dom) return std::nullopt;
  if (x.dom == y.cod) {
    // Both are loops at one object (antisymmetry rules out i < j < i).
    return loop(x.dom, groups_[x.dom].mul(x.element, y.element));
  }
  return connecting(x.dom, y.cod);
}

std::string AmalgamCategory::label(std::size_t m) const {
  const Morphism& x = morphisms_[m];
  if (x.dom != x.cod || x.element == groups_[x.dom].identity()) return object_label(x.dom, x.cod, objects());
  return groups_[x.dom].label(x.element) + "_" + std::to_string(x.dom + 1);
}

// ---- BasedAlgebra ---------------------------------------------------------

void BasedAlgebra::finish() {
  for (auto& p : products_) {
    if (!p) continue;
    ring_.normalize_in_place(p->coeff);
    if (p->coeff == 0) p.reset();
  }
  for (auto& u : unit_) ring_.normalize_in_place(u);
  unit_pivot_ = dim_;
  for (std::size_t a = 0; a < dim_; ++a) {
    if (unit_[a] != 0) {
      unit_pivot_ = a;
      break;
    }
  }
  if (unit_pivot_ == dim_) throw Error(ErrorCode::InvalidInput, "unit vector is zero");
  idempotent_ = true;
  integral_ = true;
  for (const auto& p : products_) {
    if (!p) continue;
    if (!ring_.equal(p->coeff * p->coeff, p->coeff)) idempotent_ = false;
    if (p->coeff.get_den() != 1) integral_ = false;
  }
  for (const auto& u : unit_) {
    if (u.get_den() != 1) integral_ = false;
  }
  if (labels_.empty()) {
    for (std::size_t a = 0; a < dim_; ++a) labels_.push_back("b" + std::to_string(a));
  }
}

AlgebraPtr BasedAlgebra::custom(Ring ring, std::size_t dim, std::vector<std::optional<BasisProduct>> products,
                                std::vector<Scalar> unit, std::vector<std::string> labels) {
  if (dim == 0) throw Error(ErrorCode::InvalidInput, "algebra dimension must be positive");
  if (products.size() != dim * dim) throw Error(ErrorCode::InvalidInput, "product table must have dim^2 entries");
  if (unit.size() != dim) throw Error(ErrorCode::InvalidInput, "unit vector must have dim entries");
  if (!labels.empty() && labels.size() != dim) throw Error(ErrorCode::InvalidInput, "label count must equal dim");
  for (const auto& p : products) {
    if (p && p->index >= dim) throw Error(ErrorCode::InvalidInput, "product index out of range");
  }
  std::shared_ptr<BasedAlgebra> a(new BasedAlgebra());
  a->ring_ = std::move(ring);
  a->dim_ = dim;
  a->products_ = std::move(products);
  a->unit_ = std::move(unit);
  a->labels_ = std::move(labels);
  a->finish();
  if (!a->is_associative()) throw Error(ErrorCode::InvalidInput, "structure constants are not associative");
  if (!a->unit_is_identity()) throw Error(ErrorCode::InvalidInput, "unit vector is not a two-sided identity");
  return a;
}

bool BasedAlgebra::is_associative() const {
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t c = 0; c < dim_; ++c) {
        std::optional<BasisProduct> left, right;
        if (const auto& ab = product(a, b)) {
          if (const auto& abc = product(ab->index, c)) left = BasisProduct{abc->index, ab->coeff * abc->coeff};
        }
        if (const auto& bc = product(b, c)) {
          if (const auto& abc = product(a, bc->index)) right = BasisProduct{abc->index, bc->coeff * abc->coeff};
        }
        Scalar lv = left ? ring_.normalize(left->coeff) : Scalar(0);
        Scalar rv = right ? ring_.normalize(right->coeff) : Scalar(0);
        if (lv != rv) return false;
        if (lv != 0 && left->index != right->index) return false;
      }
  return true;
}

std::vector<Scalar> BasedAlgebra::multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  std::vector<Scalar> out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b] == 0) continue;
      if (const auto& p = product(a, b)) out[p->index] += x[a] * y[b] * p->coeff;
    }
  }
  for (auto& v : out) ring_.normalize_in_place(v);
  return out;
}

bool BasedAlgebra::unit_is_identity() const {
  for (std::size_t a = 0; a < dim_; ++a) {
    std::vector<Scalar> basis(dim_);
    basis[a] = 1;
    if (multiply(unit_, basis) != basis || multiply(basis, unit_) != basis) return false;
  }
  return true;
}

AlgebraPtr group_ring(const FiniteGroup& g, const Ring& k) {
  std::shared_ptr<BasedAlgebra> a(new BasedAlgebra());
  const std::size_t n = g.order();
  a->ring_ = k;
  a->dim_ = n;
  a->kind_ = BasedAlgebra::Kind::GroupRing;
  a->products_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a->products_[x * n + y] = BasisProduct{g.mul(x, y), 1};
  a->unit_.assign(n, 0);
  a->unit_[g.identity()] = 1;
  for (std::size_t x = 0; x < n; ++x) a->labels_.push_back(g.label(x));
  a->group_ = g;
  a->finish();
  return a;
}

AlgebraPtr amalgam_algebra(const AmalgamCategory& c, const Ring& k) {
  std::shared_ptr<BasedAlgebra> a(new BasedAlgebra());
  const std::size_t n = c.morphism_count();
  a->ring_ = k;
  a->dim_ = n;
  a->kind_ = BasedAlgebra::Kind::AmalgamAlgebra;
  a->products_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (auto m = c.compose(x, y)) a->products_[x * n + y] = BasisProduct{*m, 1};
    }
  a->unit_.assign(n, 0);
  for (std::size_t i = 0; i < c.objects(); ++i) a->unit_[c.identity(i)] = 1;
  for (std::size_t x = 0; x < n; ++x) a->labels_.push_back(c.label(x));
  a->amalgam_ = c;
  a->finish();
  return a;
}

AlgebraPtr poset_algebra(const FinitePoset& p, const Ring& k) {
  AmalgamCategory c(p, std::vector<FiniteGroup>(p.size(), FiniteGroup::trivial()));
  auto base = amalgam_algebra(c, k);
  auto a = std::const_pointer_cast<BasedAlgebra>(base);
  a->kind_ = BasedAlgebra::Kind::PosetAlgebra;
  return a;
}

std::optional<BasisProduct> multiply_chain(const BasedAlgebra& a, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw Error(ErrorCode::InvalidInput, "multiply_chain needs at least one factor");
  for (std::size_t i : indices) {
    if (i >= a.dim()) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i) + " out of range");
  }
  BasisProduct acc{indices[0], 1};
  for (std::size_t t = 1; t < indices.size(); ++t) {
    const auto& p = a.product(acc.index, indices[t]);
    if (!p) return std::nullopt;
    acc.index = p->index;
    acc.coeff *= p->coeff;
  }
  acc.coeff = a.ring().normalize(acc.coeff);
  if (acc.coeff == 0) return std::nullopt;
  return acc;
}

}  // namespace hhc
