#include "hhc/hochschild.hpp"

#include <functional>
#include <map>
#include <limits>
#include <unordered_map>

#include "hhc/error.hpp"
#include "hhc/tuples.hpp"

namespace hhc {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) throw Error(ErrorCode::InvalidInput, "cochains live on different algebras");
}

void normalize_all(const Ring& ring, std::vector<Scalar>& v) {
  for (auto& x : v) ring.normalize_in_place(x);
}

// Product of each basis n-tuple, built by extending prefixes.
std::vector<std::optional<BasisProduct>> tuple_products(const BasedAlgebra& a, std::size_t n) {
  const std::size_t dim = a.dim();
  std::vector<std::optional<BasisProduct>> cur;
  if (n == 0) return cur;
  for (std::size_t b = 0; b < dim; ++b) cur.push_back(BasisProduct{b, 1});
  for (std::size_t len = 2; len <= n; ++len) {
    std::vector<std::optional<BasisProduct>> next(cur.size() * dim);
    for (std::size_t t = 0; t < cur.size(); ++t) {
      if (!cur[t]) continue;
      for (std::size_t b = 0; b < dim; ++b) {
        if (const auto& p = a.product(cur[t]->index, b)) {
          Scalar c = a.ring().normalize(cur[t]->coeff * p->coeff);
          if (c != 0) next[t * dim + b] = BasisProduct{p->index, c};
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Scalar divide(const Ring& ring, const Scalar& c, const Scalar& mu) {
  if (mu == 1) return c;
  return ring.normalize(c / mu);
}

// Integer structure-constant tables for assembling differential matrices.
struct Tables {
  std::size_t dim;
  std::vector<std::size_t> index;  // product index or kNone
  std::vector<mpz_class> coeff;
  // (a, b) -> list of (c, μ) with φ_a φ_c = μ φ_b, resp. φ_c φ_a = μ φ_b
  std::vector<std::vector<std::pair<std::size_t, mpz_class>>> left, right;

  explicit Tables(const BasedAlgebra& a) : dim(a.dim()) {
    if (!a.integral()) {
      throw Error(ErrorCode::InvalidInput, "differential matrices need integral structure constants");
    }
    index.assign(dim * dim, kNone);
    coeff.resize(dim * dim);
    left.resize(dim * dim);
    right.resize(dim * dim);
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = 0; y < dim; ++y) {
        const auto& p = a.product(x, y);
        if (!p) continue;
        index[x * dim + y] = p->index;
        coeff[x * dim + y] = p->coeff.get_num();
        left[x * dim + p->index].emplace_back(y, p->coeff.get_num());
        right[y * dim + p->index].emplace_back(x, p->coeff.get_num());
      }
  }
};

// Emits the coefficients of the row (s, b) of the full coboundary from degree n:
// (δf)(s)_b = Σ coeff · f(tuple)_c, reported as emit(tuple, c, coeff).
// s has n + 1 entries.
template <class Emit>
void emit_row(const Tables& tb, std::size_t n, const std::vector<std::size_t>& s, std::size_t b,
              const std::vector<std::size_t>& pow, Emit&& emit) {
  const std::size_t dim = tb.dim;
  std::size_t s_index = 0;
  for (std::size_t x : s) s_index = s_index * dim + x;
  // a_1 f(a_2 .. a_{n+1})
  const std::size_t tail = s_index % pow[n];
  for (const auto& [c, mu] : tb.left[s[0] * dim + b]) emit(tail, c, mu);
  // Σ (-1)^i f(.. a_i a_{i+1} ..)
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t k = s[i - 1] * dim + s[i];
    if (tb.index[k] == kNone) continue;
    // entries before position i-1, merged entry, entries after position i
    const std::size_t after = s_index % pow[n - i];
    const std::size_t before = s_index / pow[n - i + 2];
    const std::size_t merged = (before * dim + tb.index[k]) * pow[n - i] + after;
    emit(merged, b, (i % 2 == 0) ? tb.coeff[k] : mpz_class(-tb.coeff[k]));
  }
  // (-1)^{n+1} f(a_1 .. a_n) a_{n+1}
  const std::size_t head = s_index / dim;
  const bool odd = (n + 1) % 2 == 1;
  for (const auto& [c, mu] : tb.right[s[n] * dim + b]) emit(head, c, odd ? mpz_class(-mu) : mu);
}

void guard_size(std::size_t rows, std::size_t cols, const ResourceGuard& guard) {
  if (rows != 0 && cols > guard.max_matrix_entries / rows) {
    throw Error(ErrorCode::ResourceLimit, "differential of size " + std::to_string(rows) + "x" + std::to_string(cols) +
                                              " exceeds the guard of " + std::to_string(guard.max_matrix_entries) +
                                              " entries");
  }
}

// Row and column selections of the full complex for the AP / NP / relative variants:
// each selected coordinate is a (tuple, output) pair of the full basis.
struct Selection {
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  std::unordered_map<std::size_t, std::size_t> position;  // tuple * dim + output -> coordinate

  void add(std::size_t tuple, std::size_t out, std::size_t dim) {
    position.emplace(tuple * dim + out, coords.size());
    coords.emplace_back(tuple, out);
  }
};

Selection select(const AlgebraPtr& a, ComplexVariant variant, std::size_t n) {
  const std::size_t dim = a->dim();
  Selection sel;
  switch (variant) {
    case ComplexVariant::Full: {
      const std::size_t count = checked_power(dim, n);
      for (std::size_t t = 0; t < count; ++t)
        for (std::size_t b = 0; b < dim; ++b) sel.add(t, b, dim);
      break;
    }
    case ComplexVariant::AP: {
      if (n == 0) {
        sel.add(0, a->unit_pivot(), dim);
        break;
      }
      auto prods = tuple_products(*a, n);
      for (std::size_t t = 0; t < prods.size(); ++t) {
        if (prods[t]) sel.add(t, prods[t]->index, dim);
      }
      break;
    }
    case ComplexVariant::NP: {
      if (a->kind() != BasedAlgebra::Kind::GroupRing) {
        throw Error(ErrorCode::NotGroupRing, "the NP complex is built for group rings only");
      }
      if (n == 0) {
        for (std::size_t b = 0; b < dim; ++b)
          if (b != a->unit_pivot()) sel.add(0, b, dim);
        break;
      }
      auto prods = tuple_products(*a, n);
      for (std::size_t t = 0; t < prods.size(); ++t)
        for (std::size_t b = 0; b < dim; ++b)
          if (b != prods[t]->index) sel.add(t, b, dim);
      break;
    }
    case ComplexVariant::RelativeE: {
      RelativeBasis basis(a, n);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& [ti, out] = basis.entry(i);
        sel.add(n == 0 ? 0 : encode_tuple(basis.tuples()[ti], dim), out, dim);
      }
      break;
    }
  }
  return sel;
}

}  // namespace

// ---- cochains ----------------------------------------------------------------

HochschildCochain HochschildCochain::zero(AlgebraPtr alg, std::size_t degree) {
  const std::size_t dim = alg->dim();
  HochschildCochain f{std::move(alg), degree, {}};
  f.values.assign(checked_power(dim, degree + 1), Scalar(0));
  return f;
}

std::vector<Scalar> HochschildCochain::at(std::size_t t) const {
  const std::size_t dim = alg->dim();
  return std::vector<Scalar>(values.begin() + t * dim, values.begin() + (t + 1) * dim);
}

bool HochschildCochain::is_zero() const {
  for (const auto& v : values) {
    if (v != 0) return false;
  }
  return true;
}

HochschildCochain operator+(const HochschildCochain& a, const HochschildCochain& b) {
  require_same_algebra(a.alg, b.alg);
  if (a.degree != b.degree) throw Error(ErrorCode::InvalidInput, "adding cochains of different degrees");
  HochschildCochain out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  normalize_all(a.alg->ring(), out.values);
  return out;
}

HochschildCochain operator-(const HochschildCochain& a, const HochschildCochain& b) {
  return a + scale(-1, b);
}

HochschildCochain scale(const Scalar& c, const HochschildCochain& f) {
  HochschildCochain out = f;
  for (auto& v : out.values) v *= c;
  normalize_all(f.alg->ring(), out.values);
  return out;
}

APCochain APCochain::zero(AlgebraPtr alg, std::size_t degree) {
  const std::size_t dim = alg->dim();
  APCochain f{std::move(alg), degree, {}};
  f.lambdas.assign(checked_power(dim, degree), Scalar(0));
  return f;
}

HochschildCochain embed(const APCochain& f) {
  HochschildCochain out = HochschildCochain::zero(f.alg, f.degree);
  const Ring& ring = f.alg->ring();
  if (f.degree == 0) {
    for (std::size_t b = 0; b < f.alg->dim(); ++b) out.values[b] = ring.normalize(f.lambdas[0] * f.alg->unit()[b]);
    return out;
  }
  auto prods = tuple_products(*f.alg, f.degree);
  for (std::size_t t = 0; t < prods.size(); ++t) {
    if (!prods[t] || f.lambdas[t] == 0) continue;
    out.coeff(t, prods[t]->index) = ring.normalize(f.lambdas[t] * prods[t]->coeff);
  }
  return out;
}

HochschildCochain delta(const HochschildCochain& f) {
  const BasedAlgebra& a = *f.alg;
  const std::size_t dim = a.dim();
  const std::size_t n = f.degree;
  HochschildCochain out = HochschildCochain::zero(f.alg, n + 1);
  const std::size_t pow_n = checked_power(dim, n);
  const std::size_t count = pow_n * dim;
  std::vector<std::size_t> s(n + 1);
  for (std::size_t t = 0; t < count; ++t) {
    decode_tuple(t, dim, s);
    Scalar* row = &out.values[t * dim];
    // a_1 f(a_2 .. a_{n+1})
    const std::size_t tail = t % pow_n;
    for (std::size_t c = 0; c < dim; ++c) {
      const Scalar& v = f.coeff(tail, c);
      if (v == 0) continue;
      if (const auto& p = a.product(s[0], c)) row[p->index] += p->coeff * v;
    }
    // inner merges
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& p = a.product(s[i - 1], s[i]);
      if (!p) continue;
      std::vector<std::size_t> merged;
      merged.reserve(n);
      for (std::size_t k = 0; k + 1 < i; ++k) merged.push_back(s[k]);
      merged.push_back(p->index);
      for (std::size_t k = i + 1; k <= n; ++k) merged.push_back(s[k]);
      const std::size_t m = encode_tuple(merged, dim);
      const Scalar sign = (i % 2 == 0) ? p->coeff : Scalar(-p->coeff);
      for (std::size_t c = 0; c < dim; ++c) {
        const Scalar& v = f.coeff(m, c);
        if (v != 0) row[c] += sign * v;
      }
    }
    // (-1)^{n+1} f(a_1 .. a_n) a_{n+1}
    const std::size_t head = t / dim;
    const int last_sign = (n + 1) % 2 == 0 ? 1 : -1;
    for (std::size_t c = 0; c < dim; ++c) {
      const Scalar& v = f.coeff(head, c);
      if (v == 0) continue;
      if (const auto& p = a.product(c, s[n])) row[p->index] += last_sign * p->coeff * v;
    }
  }
  normalize_all(a.ring(), out.values);
  return out;
}

HochschildCochain gerstenhaber(const HochschildCochain& f, const HochschildCochain& g) {
  require_same_algebra(f.alg, g.alg);
  const BasedAlgebra& a = *f.alg;
  const std::size_t dim = a.dim();
  HochschildCochain out = HochschildCochain::zero(f.alg, f.degree + g.degree);
  const std::size_t pow_q = checked_power(dim, g.degree);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    const std::size_t head = t / pow_q, tail = t % pow_q;
    Scalar* row = &out.values[t * dim];
    for (std::size_t x = 0; x < dim; ++x) {
      const Scalar& u = f.coeff(head, x);
      if (u == 0) continue;
      for (std::size_t y = 0; y < dim; ++y) {
        const Scalar& v = g.coeff(tail, y);
        if (v == 0) continue;
        if (const auto& p = a.product(x, y)) row[p->index] += p->coeff * u * v;
      }
    }
  }
  normalize_all(a.ring(), out.values);
  return out;
}

HochschildCochain partial_composition(const HochschildCochain& f, const HochschildCochain& g, std::size_t j) {
  require_same_algebra(f.alg, g.alg);
  const std::size_t p = f.degree, q = g.degree;
  if (p == 0 || j >= p) {
    throw Error(ErrorCode::IndexOutOfRange,
                "partial composition slot " + std::to_string(j) + " outside 0.." + (p == 0 ? "(none)" : std::to_string(p - 1)));
  }
  const std::size_t dim = f.alg->dim();
  HochschildCochain out = HochschildCochain::zero(f.alg, p + q - 1);
  const std::size_t pow_q = checked_power(dim, q);
  const std::size_t pow_after = checked_power(dim, p - 1 - j);  // entries of f after slot j
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    // t = (before: j entries)(inner: q entries)(after: p-1-j entries)
    const std::size_t after = t % pow_after;
    const std::size_t inner = (t / pow_after) % pow_q;
    const std::size_t before = t / (pow_after * pow_q);
    Scalar* row = &out.values[t * dim];
    for (std::size_t c = 0; c < dim; ++c) {
      const Scalar& w = g.coeff(inner, c);
      if (w == 0) continue;
      const std::size_t outer = (before * dim + c) * pow_after + after;
      for (std::size_t b = 0; b < dim; ++b) {
        const Scalar& v = f.coeff(outer, b);
        if (v != 0) row[b] += w * v;
      }
    }
  }
  normalize_all(f.alg->ring(), out.values);
  return out;
}

HochschildCochain pre_lie(const HochschildCochain& f, const HochschildCochain& g) {
  require_same_algebra(f.alg, g.alg);
  const std::size_t p = f.degree, q = g.degree;
  if (p == 0) throw Error(ErrorCode::InvalidInput, "pre-Lie product needs deg f >= 1");
  HochschildCochain out = HochschildCochain::zero(f.alg, p + q - 1);
  for (std::size_t j = 0; j < p; ++j) {
    const long long e = static_cast<long long>(p - 1 - j) * (static_cast<long long>(q) - 1);
    HochschildCochain term = partial_composition(f, g, j);
    out = (e % 2 == 0) ? out + term : out - term;
  }
  return out;
}

std::pair<APCochain, HochschildCochain> ap_split(const HochschildCochain& f) {
  const BasedAlgebra& a = *f.alg;
  const Ring& ring = a.ring();
  APCochain ap = APCochain::zero(f.alg, f.degree);
  if (f.degree == 0) {
    const std::size_t h = a.unit_pivot();
    ap.lambdas[0] = divide(ring, f.values[h], a.unit()[h]);
  } else {
    auto prods = tuple_products(a, f.degree);
    for (std::size_t t = 0; t < prods.size(); ++t) {
      if (prods[t]) ap.lambdas[t] = divide(ring, f.coeff(t, prods[t]->index), prods[t]->coeff);
    }
  }
  HochschildCochain np = f - embed(ap);
  return {std::move(ap), std::move(np)};
}

bool is_autopoietic(const HochschildCochain& f) {
  const BasedAlgebra& a = *f.alg;
  const Ring& ring = a.ring();
  const std::size_t dim = a.dim();
  try {
    if (f.degree == 0) {
      const std::size_t h = a.unit_pivot();
      const Scalar lambda = divide(ring, f.values[h], a.unit()[h]);
      for (std::size_t b = 0; b < dim; ++b) {
        if (!ring.equal(f.values[b], lambda * a.unit()[b])) return false;
      }
      return true;
    }
    auto prods = tuple_products(a, f.degree);
    for (std::size_t t = 0; t < prods.size(); ++t) {
      for (std::size_t b = 0; b < dim; ++b) {
        const Scalar& v = f.coeff(t, b);
        if (v == 0) continue;
        if (!prods[t] || prods[t]->index != b) return false;
        const Scalar lambda = divide(ring, v, prods[t]->coeff);
        if (!ring.equal(lambda * prods[t]->coeff, v)) return false;
      }
    }
    return true;
  } catch (const Error&) {
    return false;  // coefficient not a multiple of a non-invertible structure constant
  }
}

bool is_non_autopoietic(const HochschildCochain& f) {
  const BasedAlgebra& a = *f.alg;
  if (f.degree == 0) return f.values[a.unit_pivot()] == 0;
  auto prods = tuple_products(a, f.degree);
  for (std::size_t t = 0; t < prods.size(); ++t) {
    if (prods[t] && f.coeff(t, prods[t]->index) != 0) return false;
  }
  return true;
}

// ---- complexes ---------------------------------------------------------------

std::size_t complex_dimension(const AlgebraPtr& a, ComplexVariant variant, std::size_t n) {
  switch (variant) {
    case ComplexVariant::Full:
      return checked_power(a->dim(), n + 1);
    case ComplexVariant::RelativeE:
      return RelativeBasis(a, n).size();
    default:
      return select(a, variant, n).coords.size();
  }
}

CochainComplex build_complex(const AlgebraPtr& a, ComplexVariant variant, std::size_t max_degree,
                             const ResourceGuard& guard) {
  if (variant == ComplexVariant::RelativeE && !a->amalgam()) {
    throw Error(ErrorCode::NotAmalgam, "the relative complex needs a poset or amalgam algebra");
  }
  if (variant == ComplexVariant::NP && a->kind() != BasedAlgebra::Kind::GroupRing) {
    throw Error(ErrorCode::NotGroupRing, "the NP complex is built for group rings only");
  }
  const Tables tb(*a);
  const std::size_t dim = a->dim();
  std::vector<std::size_t> pow(max_degree + 3);
  pow[0] = 1;
  for (std::size_t k = 1; k < pow.size(); ++k) pow[k] = checked_power(dim, k);

  CochainComplex cx;
  std::vector<Selection> sels;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    if (variant == ComplexVariant::Full) {
      sels.emplace_back();  // unused: the full basis is implicit
      cx.dims.push_back(pow[n + 1]);
    } else {
      sels.push_back(select(a, variant, n));
      cx.dims.push_back(sels.back().coords.size());
    }
  }
  for (std::size_t n = 0; n < max_degree; ++n) {
    const std::size_t rows = cx.dims[n + 1], cols = cx.dims[n];
    guard_size(rows, cols, guard);
    IntegerMatrix d(rows, cols);
    std::vector<std::size_t> s(n + 1);
    auto fill_row = [&](std::size_t r, std::size_t s_index, std::size_t b) {
      decode_tuple(s_index, dim, s);
      if (variant == ComplexVariant::AP && n == 0) return;  // δ(1) = 0 for the strict unit
      emit_row(tb, n, s, b, pow, [&](std::size_t tuple, std::size_t c, const mpz_class& mu) {
        if (variant == ComplexVariant::Full) {
          d(r, tuple * dim + c) += mu;
          return;
        }
        auto it = sels[n].position.find(tuple * dim + c);
        if (it != sels[n].position.end()) d(r, it->second) += mu;
      });
    };
    if (variant == ComplexVariant::Full) {
      for (std::size_t t = 0; t < pow[n + 1]; ++t)
        for (std::size_t b = 0; b < dim; ++b) fill_row(t * dim + b, t, b);
    } else {
      const auto& coords = sels[n + 1].coords;
      for (std::size_t r = 0; r < coords.size(); ++r) fill_row(r, coords[r].first, coords[r].second);
    }
    cx.differentials.push_back(std::move(d));
  }
  return cx;
}

bool verify_contracting_homotopy(const AmalgamCategory& c, std::size_t n) {
  // Basis of k[C]^{⊗_E m}: composable m-tuples in lexicographic order.
  auto enumerate = [&](std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void()> rec = [&]() {
      if (cur.size() == m) {
        out.push_back(cur);
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
    return out;
  };
  std::vector<std::vector<std::vector<std::size_t>>> basis(n + 3);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n + 3);
  for (std::size_t m = (n == 0 ? 1 : n); m <= n + 2; ++m) {
    basis[m] = enumerate(m);
    for (std::size_t i = 0; i < basis[m].size(); ++i) index[m].emplace(basis[m][i], i);
  }
  // b' : m-fold -> (m-1)-fold, m >= 2
  auto bprime = [&](std::size_t m) {
    IntegerMatrix d(basis[m - 1].size(), basis[m].size());
    for (std::size_t col = 0; col < basis[m].size(); ++col) {
      const auto& a = basis[m][col];
      for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<std::size_t> merged(a.begin(), a.begin() + i);
        merged.push_back(*c.compose(a[i], a[i + 1]));
        merged.insert(merged.end(), a.begin() + i + 2, a.end());
        d(index[m - 1].at(merged), col) += (i % 2 == 0) ? 1 : -1;
      }
    }
    return d;
  };
  // φ : m-fold -> (m+1)-fold, a |-> e ⊗ a, where only e_{dom a_0} survives over E
  auto phi = [&](std::size_t m) {
    IntegerMatrix d(basis[m + 1].size(), basis[m].size());
    for (std::size_t col = 0; col < basis[m].size(); ++col) {
      std::vector<std::size_t> t{c.identity(c.morphism(basis[m][col][0]).dom)};
      t.insert(t.end(), basis[m][col].begin(), basis[m][col].end());
      d(index[m + 1].at(t), col) += 1;
    }
    return d;
  };
  IntegerMatrix total = bprime(n + 2) * phi(n + 1);
  if (n >= 1) {
    IntegerMatrix lower = phi(n) * bprime(n + 1);
    for (std::size_t r = 0; r < total.rows(); ++r)
      for (std::size_t col = 0; col < total.cols(); ++col) total(r, col) += lower(r, col);
  }
  return total == IntegerMatrix::identity(basis[n + 1].size());
}

}  // namespace hhc
