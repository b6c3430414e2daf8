#include "hhc/simplicial.hpp"

#include <algorithm>
#include <functional>

#include "hhc/error.hpp"
#include "hhc/tuples.hpp"

namespace hhc {
namespace {

std::vector<std::vector<std::size_t>> all_tuples(std::size_t base, std::size_t len) {
  const std::size_t count = checked_power(base, len);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) out.push_back(decode_tuple(t, base, len));
  return out;
}

std::size_t chain_product(const FiniteGroup& g, const std::vector<std::size_t>& t) {
  std::size_t acc = g.identity();
  for (std::size_t x : t) acc = g.mul(acc, x);
  return acc;
}

bool compatible(const ModelPtr& a, const ModelPtr& b) {
  if (a == b) return true;
  auto ta = std::dynamic_pointer_cast<const TensorBar>(a);
  auto tb = std::dynamic_pointer_cast<const TensorBar>(b);
  return ta && tb && ta->algebra() == tb->algebra();
}

void require_compatible(const SimplicialCochain& a, const SimplicialCochain& b) {
  if (!compatible(a.model, b.model)) throw Error(ErrorCode::SliceMismatch, "cochains live on different models");
  if (!(a.ring == b.ring)) throw Error(ErrorCode::InvalidInput, "cochains have different coefficient rings");
}

void require_degree(const SimplicialModel& m, std::size_t n) {
  if (!m.has_degree(n)) {
    throw Error(ErrorCode::InvalidInput, "model stores degrees up to " + std::to_string(*m.max_degree()) +
                                             ", degree " + std::to_string(n) + " requested");
  }
}

int inversion_sign(const std::vector<std::size_t>& seq) {
  int s = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) s = -s;
  return s;
}

struct IntervalTerm {
  std::vector<std::size_t> alpha_vertices;
  std::vector<std::size_t> beta_vertices;
  int sign;
};

// Terms of the interval formula for ∪_i from degrees (p, q) into degree n = p + q - i.
std::vector<IntervalTerm> interval_terms(std::size_t p, std::size_t q, std::size_t i) {
  const std::size_t n = p + q - i;
  std::vector<IntervalTerm> terms;
  std::vector<std::size_t> cuts;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cuts.size() == i + 1) {
      std::vector<std::size_t> bounds{0};
      bounds.insert(bounds.end(), cuts.begin(), cuts.end());
      bounds.push_back(n);
      std::vector<std::size_t> av, bv;
      for (std::size_t t = 0; t + 1 < bounds.size(); ++t) {
        auto& dst = (t % 2 == 0) ? av : bv;
        for (std::size_t v = bounds[t]; v <= bounds[t + 1]; ++v) dst.push_back(v);
      }
      for (auto* v : {&av, &bv}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
      }
      if (av.size() != p + 1 || bv.size() != q + 1) return;
      std::vector<std::size_t> order;
      for (std::size_t v : av) {
        if (std::find(cuts.begin(), cuts.end(), v) == cuts.end()) order.push_back(v);
      }
      order.insert(order.end(), bv.begin(), bv.end());
      terms.push_back({std::move(av), std::move(bv), inversion_sign(order)});
      return;
    }
    for (std::size_t v = from; v <= n; ++v) {
      cuts.push_back(v);
      rec(v + 1);
      cuts.pop_back();
    }
  };
  rec(0);
  return terms;
}

}  // namespace

// ---- SimplicialSlice -----------------------------------------------------------

void SimplicialSlice::index_all() {
  lookup_.assign(simplices_.size(), {});
  for (std::size_t n = 0; n < simplices_.size(); ++n)
    for (std::size_t i = 0; i < simplices_[n].size(); ++i) lookup_[n].emplace(simplices_[n][i], i);
}

std::optional<std::size_t> SimplicialSlice::index_of(std::size_t n, const std::vector<std::size_t>& entries) const {
  if (n >= lookup_.size()) return std::nullopt;
  auto it = lookup_[n].find(entries);
  if (it == lookup_[n].end()) return std::nullopt;
  return it->second;
}

SlicePtr SimplicialSlice::bar(const FiniteGroup& g, std::size_t max_degree) {
  std::shared_ptr<SimplicialSlice> s(new SimplicialSlice());
  s->kind_ = Kind::Bar;
  s->max_degree_ = max_degree;
  s->group_ = g;
  for (std::size_t n = 0; n <= max_degree; ++n) s->simplices_.push_back(all_tuples(g.order(), n));
  s->index_all();
  s->faces_.resize(max_degree + 1);
  s->degeneracies_.resize(max_degree + 1);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    s->faces_[n].assign(n + 1, std::vector<std::size_t>(s->count(n)));
    for (std::size_t idx = 0; idx < s->count(n); ++idx) {
      const auto& t = s->simplices_[n][idx];
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> f;
        if (i == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          f.assign(t.begin(), t.begin() + (i - 1));
          f.push_back(g.mul(t[i - 1], t[i]));
          f.insert(f.end(), t.begin() + i + 1, t.end());
        }
        s->faces_[n][i][idx] = s->lookup_[n - 1].at(f);
      }
    }
  }
  for (std::size_t n = 0; n < max_degree; ++n) {
    s->degeneracies_[n].assign(n + 1, std::vector<std::size_t>(s->count(n)));
    for (std::size_t idx = 0; idx < s->count(n); ++idx) {
      for (std::size_t i = 0; i <= n; ++i) {
        auto t = s->simplices_[n][idx];
        t.insert(t.begin() + i, g.identity());
        s->degeneracies_[n][i][idx] = s->lookup_[n + 1].at(t);
      }
    }
  }
  return s;
}

SlicePtr SimplicialSlice::cyclic_bar(const FiniteGroup& g, std::size_t max_degree) {
  return cyclic_impl(g, max_degree, false);
}

SlicePtr SimplicialSlice::cyclic_bar_unit(const FiniteGroup& g, std::size_t max_degree) {
  return cyclic_impl(g, max_degree, true);
}

SlicePtr SimplicialSlice::cyclic_impl(const FiniteGroup& g, std::size_t max_degree, bool unit_only) {
  std::shared_ptr<SimplicialSlice> s(new SimplicialSlice());
  s->kind_ = unit_only ? Kind::CyclicBarUnit : Kind::CyclicBar;
  s->max_degree_ = max_degree;
  s->group_ = g;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto all = all_tuples(g.order(), n + 1);
    if (unit_only) {
      std::erase_if(all, [&](const std::vector<std::size_t>& t) { return chain_product(g, t) != g.identity(); });
    }
    s->simplices_.push_back(std::move(all));
  }
  s->index_all();
  auto locate = [&](std::size_t n, const std::vector<std::size_t>& t) {
    auto idx = s->index_of(n, t);
    // closure of the unit subcomplex under faces is checked here rather than assumed
    if (!idx) throw Error(ErrorCode::InvalidInput, "cyclic bar construction is not closed under faces");
    return *idx;
  };
  s->faces_.resize(max_degree + 1);
  s->degeneracies_.resize(max_degree + 1);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    s->faces_[n].assign(n + 1, std::vector<std::size_t>(s->count(n)));
    for (std::size_t idx = 0; idx < s->count(n); ++idx) {
      const auto& t = s->simplices_[n][idx];
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> f;
        if (i < n) {
          f.assign(t.begin(), t.begin() + i);
          f.push_back(g.mul(t[i], t[i + 1]));
          f.insert(f.end(), t.begin() + i + 2, t.end());
        } else {
          f.push_back(g.mul(t[n], t[0]));
          f.insert(f.end(), t.begin() + 1, t.end() - 1);
        }
        s->faces_[n][i][idx] = locate(n - 1, f);
      }
    }
  }
  for (std::size_t n = 0; n < max_degree; ++n) {
    s->degeneracies_[n].assign(n + 1, std::vector<std::size_t>(s->count(n)));
    for (std::size_t idx = 0; idx < s->count(n); ++idx) {
      for (std::size_t i = 0; i <= n; ++i) {
        auto t = s->simplices_[n][idx];
        t.insert(t.begin() + i + 1, g.identity());
        s->degeneracies_[n][i][idx] = locate(n + 1, t);
      }
    }
  }
  return s;
}

SlicePtr SimplicialSlice::nerve(const AmalgamCategory& c, std::size_t max_degree) {
  std::shared_ptr<SimplicialSlice> s(new SimplicialSlice());
  s->kind_ = Kind::Nerve;
  s->max_degree_ = max_degree;
  s->category_ = c;
  // degree 0: objects; degree n: composable strings, lexicographic
  std::vector<std::vector<std::size_t>> objects;
  for (std::size_t i = 0; i < c.objects(); ++i) objects.push_back({i});
  s->simplices_.push_back(std::move(objects));
  for (std::size_t n = 1; n <= max_degree; ++n) {
    std::vector<std::vector<std::size_t>> level;
    std::vector<std::size_t> cur;
    std::function<void()> rec = [&]() {
      if (cur.size() == n) {
        level.push_back(cur);
        return;
      }
      for (std::size_t x = 0; x < c.morphism_count(); ++x) {
        if (!cur.empty() && c.morphism(cur.back()).cod != c.morphism(x).dom) continue;
        cur.push_back(x);
        rec();
        cur.pop_back();
      }
    };
    rec();
    s->simplices_.push_back(std::move(level));
  }
  s->index_all();
  s->faces_.resize(max_degree + 1);
  s->degeneracies_.resize(max_degree + 1);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    s->faces_[n].assign(n + 1, std::vector<std::size_t>(s->count(n)));
    for (std::size_t idx = 0; idx < s->count(n); ++idx) {
      const auto& t = s->simplices_[n][idx];
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> f;
        if (n == 1) {
          f = {i == 0 ? c.morphism(t[0]).cod : c.morphism(t[0]).dom};
        } else if (i == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          f.assign(t.begin(), t.begin() + (i - 1));
          f.push_back(*c.compose(t[i - 1], t[i]));
          f.insert(f.end(), t.begin() + i + 1, t.end());
        }
        s->faces_[n][i][idx] = s->lookup_[n - 1].at(f);
      }
    }
  }
  for (std::size_t n = 0; n < max_degree; ++n) {
    s->degeneracies_[n].assign(n + 1, std::vector<std::size_t>(s->count(n)));
    for (std::size_t idx = 0; idx < s->count(n); ++idx) {
      const auto& t = s->simplices_[n][idx];
      for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::size_t> d;
        if (n == 0) {
          d = {c.identity(t[0])};
        } else {
          // vertex i of (α_1..α_n): dom α_1 for i = 0, cod α_i otherwise
          const std::size_t vertex = i == 0 ? c.morphism(t[0]).dom : c.morphism(t[i - 1]).cod;
          d = t;
          d.insert(d.begin() + i, c.identity(vertex));
        }
        s->degeneracies_[n][i][idx] = s->lookup_[n + 1].at(d);
      }
    }
  }
  return s;
}

std::string SimplicialSlice::describe(std::size_t n, std::size_t idx) const {
  const auto& t = simplex(n, idx);
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    if (kind_ == Kind::Nerve) {
      out += n == 0 ? std::to_string(t[k] + 1) : category_->label(t[k]);
    } else {
      out += group_->label(t[k]);
    }
  }
  return out + ")";
}

// ---- TensorBar ------------------------------------------------------------------

std::size_t TensorBar::count(std::size_t n) const { return checked_power(alg_->dim(), n); }

std::optional<Face> TensorBar::face(std::size_t n, std::size_t i, std::size_t idx) const {
  const std::size_t dim = alg_->dim();
  if (n == 0 || i > n) throw Error(ErrorCode::IndexOutOfRange, "face index out of range");
  if (n == 1) return Face{1, 0};  // ε
  if (i == 0) return Face{1, idx % checked_power(dim, n - 1)};
  if (i == n) return Face{1, idx / dim};
  const std::size_t low = checked_power(dim, n - i - 1);  // entries after position i
  const std::size_t after = idx % low;
  const std::size_t b = (idx / low) % dim;
  const std::size_t a = (idx / (low * dim)) % dim;
  const std::size_t before = idx / (low * dim * dim);
  const auto& p = alg_->product(a, b);
  if (!p) return std::nullopt;
  return Face{p->coeff, (before * dim + p->index) * low + after};
}

std::string TensorBar::describe(std::size_t n, std::size_t idx) const {
  auto t = decode_tuple(idx, alg_->dim(), n);
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "⊗" : "") + alg_->label(t[k]);
  return n == 0 ? "1" : out;
}

std::shared_ptr<const TensorBar> tensor_bar(const AlgebraPtr& alg) { return std::make_shared<const TensorBar>(alg); }

// ---- cochains ------------------------------------------------------------------

SimplicialCochain SimplicialCochain::zero(ModelPtr model, Ring ring, std::size_t degree) {
  require_degree(*model, degree);
  const std::size_t n = model->count(degree);
  return SimplicialCochain{std::move(model), std::move(ring), degree, std::vector<Scalar>(n)};
}

bool same_model(const ModelPtr& m1, const ModelPtr& m2) { return compatible(m1, m2); }

bool operator==(const SimplicialCochain& a, const SimplicialCochain& b) {
  return compatible(a.model, b.model) && a.ring == b.ring && a.degree == b.degree && a.values == b.values;
}

bool SimplicialCochain::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Scalar& v) { return v == 0; });
}

SimplicialCochain operator+(const SimplicialCochain& a, const SimplicialCochain& b) {
  require_compatible(a, b);
  if (a.degree != b.degree) throw Error(ErrorCode::InvalidInput, "adding cochains of different degrees");
  SimplicialCochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] += b.values[i];
    a.ring.normalize_in_place(out.values[i]);
  }
  return out;
}

SimplicialCochain operator-(const SimplicialCochain& a, const SimplicialCochain& b) { return a + scale(-1, b); }

SimplicialCochain scale(const Scalar& c, const SimplicialCochain& a) {
  SimplicialCochain out = a;
  for (auto& v : out.values) {
    v *= c;
    a.ring.normalize_in_place(v);
  }
  return out;
}

SimplicialCochain coboundary(const SimplicialCochain& a) {
  const SimplicialModel& m = *a.model;
  SimplicialCochain out = SimplicialCochain::zero(a.model, a.ring, a.degree + 1);
  const std::size_t n = a.degree + 1;
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    Scalar acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      auto f = m.face(n, i, idx);
      if (!f) continue;
      const Scalar& v = a.values[f->index];
      if (v == 0) continue;
      if (i % 2 == 0) {
        acc += f->coeff * v;
      } else {
        acc -= f->coeff * v;
      }
    }
    out.values[idx] = a.ring.normalize(acc);
  }
  return out;
}

std::optional<Face> restrict_to_vertices(const SimplicialModel& m, std::size_t n, std::size_t idx,
                                         const std::vector<std::size_t>& vertices) {
  Face cur{1, idx};
  std::size_t deg = n;
  for (std::size_t v = n + 1; v-- > 0;) {
    if (std::binary_search(vertices.begin(), vertices.end(), v)) continue;
    auto f = m.face(deg, v, cur.index);
    if (!f) return std::nullopt;
    cur.coeff *= f->coeff;
    cur.index = f->index;
    --deg;
  }
  return cur;
}

namespace {

SimplicialCochain evaluate_terms(const SimplicialCochain& a, const SimplicialCochain& b, std::size_t n,
                                 const std::vector<IntervalTerm>& terms) {
  SimplicialCochain out = SimplicialCochain::zero(a.model, a.ring, n);
  const SimplicialModel& m = *a.model;
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    Scalar acc = 0;
    for (const auto& term : terms) {
      auto fa = restrict_to_vertices(m, n, idx, term.alpha_vertices);
      if (!fa) continue;
      const Scalar& va = a.values[fa->index];
      if (va == 0) continue;
      auto fb = restrict_to_vertices(m, n, idx, term.beta_vertices);
      if (!fb) continue;
      const Scalar& vb = b.values[fb->index];
      if (vb == 0) continue;
      Scalar t = fa->coeff * fb->coeff * va * vb;
      if (term.sign > 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    out.values[idx] = a.ring.normalize(acc);
  }
  return out;
}

}  // namespace

SimplicialCochain cup(const SimplicialCochain& a, const SimplicialCochain& b) {
  require_compatible(a, b);
  const std::size_t p = a.degree, q = b.degree, n = p + q;
  std::vector<IntervalTerm> terms(1);
  for (std::size_t v = 0; v <= p; ++v) terms[0].alpha_vertices.push_back(v);
  for (std::size_t v = p; v <= n; ++v) terms[0].beta_vertices.push_back(v);
  terms[0].sign = 1;
  return evaluate_terms(a, b, n, terms);
}

SimplicialCochain cup_i_interval(const SimplicialCochain& a, const SimplicialCochain& b, std::size_t i) {
  require_compatible(a, b);
  const std::size_t p = a.degree, q = b.degree;
  if (p + q < i) {
    throw Error(ErrorCode::InvalidInput, "cup-" + std::to_string(i) + " of degrees " + std::to_string(p) + ", " +
                                             std::to_string(q) + " has negative degree");
  }
  if (i == 0) return cup(a, b);
  return evaluate_terms(a, b, p + q - i, interval_terms(p, q, i));
}

SimplicialCochain cup_i(const SimplicialCochain& a, const SimplicialCochain& b, std::size_t i) {
  if (i >= 2 && !a.ring.characteristic_two()) {
    throw Error(ErrorCode::UnsupportedArity, "cup-" + std::to_string(i) + " over " + a.ring.name() +
                                                 ": the prescribed coboundary identity has no sign solution; "
                                                 "available over Z/2 only");
  }
  return cup_i_interval(a, b, i);
}

bool check_simplicial_identities(const SimplicialSlice& s) {
  const std::size_t top = *s.max_degree();
  // d_i d_j = d_{j-1} d_i, i < j, on degree n >= 2
  for (std::size_t n = 2; n <= top; ++n)
    for (std::size_t idx = 0; idx < s.count(n); ++idx)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          if (s.face_index(n - 1, i, s.face_index(n, j, idx)) != s.face_index(n - 1, j - 1, s.face_index(n, i, idx))) {
            return false;
          }
        }
  // degeneracies: s_j : n -> n+1
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t idx = 0; idx < s.count(n); ++idx)
      for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t sj = s.degeneracy(n, j, idx);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          const std::size_t lhs = s.face_index(n + 1, i, sj);
          if (i == j || i == j + 1) {
            if (lhs != idx) return false;
          } else if (i < j) {
            // d_i s_j = s_{j-1} d_i
            if (lhs != s.degeneracy(n - 1, j - 1, s.face_index(n, i, idx))) return false;
          } else {
            // d_i s_j = s_j d_{i-1}
            if (lhs != s.degeneracy(n - 1, j, s.face_index(n, i - 1, idx))) return false;
          }
        }
        // s_i s_j = s_{j+1} s_i, i <= j
        if (n + 1 < top) {
          for (std::size_t i = 0; i <= j; ++i) {
            if (s.degeneracy(n + 1, i, sj) != s.degeneracy(n + 1, j + 1, s.degeneracy(n, i, idx))) return false;
          }
        }
      }
  return true;
}

std::size_t iota_map(const SimplicialSlice& bar, const SimplicialSlice& unit, std::size_t n, std::size_t idx) {
  if (bar.kind() != SimplicialSlice::Kind::Bar || unit.kind() != SimplicialSlice::Kind::CyclicBarUnit) {
    throw Error(ErrorCode::SliceMismatch, "iota maps bar(G) into the unit cyclic bar construction");
  }
  const FiniteGroup& g = *bar.group();
  const auto& t = bar.simplex(n, idx);
  std::vector<std::size_t> image{g.inverse(chain_product(g, t))};
  image.insert(image.end(), t.begin(), t.end());
  auto out = unit.index_of(n, image);
  if (!out) throw Error(ErrorCode::SliceMismatch, "slices were built from different groups");
  return *out;
}

std::size_t pi_map(const SimplicialSlice& unit, const SimplicialSlice& bar, std::size_t n, std::size_t idx) {
  if (bar.kind() != SimplicialSlice::Kind::Bar || unit.kind() != SimplicialSlice::Kind::CyclicBarUnit) {
    throw Error(ErrorCode::SliceMismatch, "pi maps the unit cyclic bar construction onto bar(G)");
  }
  const auto& t = unit.simplex(n, idx);
  auto out = bar.index_of(n, std::vector<std::size_t>(t.begin() + 1, t.end()));
  if (!out) throw Error(ErrorCode::SliceMismatch, "slices were built from different groups");
  return *out;
}

}  // namespace hhc
