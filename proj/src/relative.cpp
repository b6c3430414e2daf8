#include <algorithm>

#include "hhc/error.hpp"
#include "hhc/hochschild.hpp"
#include "hhc/tuples.hpp"

namespace hhc {
namespace {

const AmalgamCategory& require_amalgam(const AlgebraPtr& a) {
  if (!a->amalgam()) throw Error(ErrorCode::NotAmalgam, "relative cochains need a poset or amalgam algebra");
  return *a->amalgam();
}

void composable_tuples(const AmalgamCategory& c, std::size_t n, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t x = 0; x < c.morphism_count(); ++x) {
    if (!cur.empty() && c.morphism(cur.back()).cod != c.morphism(x).dom) continue;
    cur.push_back(x);
    composable_tuples(c, n, cur, out);
    cur.pop_back();
  }
}

// Value of f on basis tuple ti as a coefficient vector over the algebra basis.
std::vector<Scalar> value_at(const RelativeBasis& basis, const RelativeCochain& f, std::size_t ti, std::size_t dim) {
  std::vector<Scalar> v(dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.entry(i).first == ti) v[basis.entry(i).second] += f.values[i];
  }
  return v;
}

}  // namespace

RelativeBasis::RelativeBasis(AlgebraPtr alg, std::size_t degree) : alg_(std::move(alg)), degree_(degree) {
  const AmalgamCategory& c = require_amalgam(alg_);
  if (degree_ == 0) {
    tuples_.emplace_back();
    tuple_offset_.push_back(0);
    for (std::size_t m = 0; m < c.morphism_count(); ++m) {
      if (c.morphism(m).dom == c.morphism(m).cod) entries_.emplace_back(0, m);
    }
    return;
  }
  std::vector<std::size_t> cur;
  composable_tuples(c, degree_, cur, tuples_);
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    tuple_offset_.push_back(entries_.size());
    const auto& tup = tuples_[t];
    for (std::size_t out : c.hom(c.morphism(tup.front()).dom, c.morphism(tup.back()).cod)) entries_.emplace_back(t, out);
  }
}

std::optional<std::size_t> RelativeBasis::find_tuple(const std::vector<std::size_t>& t) const {
  if (t.size() != degree_) return std::nullopt;
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
  if (it == tuples_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - tuples_.begin());
}

std::optional<std::size_t> RelativeBasis::find(std::size_t tuple, std::size_t output) const {
  if (tuple >= tuples_.size()) return std::nullopt;
  const std::size_t end = tuple + 1 < tuple_offset_.size() ? tuple_offset_[tuple + 1] : entries_.size();
  for (std::size_t i = tuple_offset_[tuple]; i < end; ++i) {
    if (entries_[i].second == output) return i;
  }
  return std::nullopt;
}

RelativeCochain RelativeCochain::zero(AlgebraPtr alg, std::size_t degree) {
  RelativeBasis basis(alg, degree);
  return RelativeCochain{std::move(alg), degree, std::vector<Scalar>(basis.size())};
}

RelativeCochain relative_delta(const RelativeCochain& f) {
  const BasedAlgebra& a = *f.alg;
  const AmalgamCategory& c = require_amalgam(f.alg);
  const std::size_t dim = a.dim();
  const std::size_t n = f.degree;
  RelativeBasis in(f.alg, n), out(f.alg, n + 1);
  RelativeCochain result{f.alg, n + 1, std::vector<Scalar>(out.size())};

  auto basis_vector = [dim](std::size_t m) {
    std::vector<Scalar> v(dim);
    v[m] = 1;
    return v;
  };
  std::vector<std::vector<Scalar>> f_vals(in.tuples().size());
  for (std::size_t t = 0; t < f_vals.size(); ++t) f_vals[t] = value_at(in, f, t, dim);

  for (std::size_t t = 0; t < out.tuples().size(); ++t) {
    const auto& s = out.tuples()[t];
    std::vector<Scalar> v(dim);
    auto add = [&](const std::vector<Scalar>& w, int sign) {
      for (std::size_t b = 0; b < dim; ++b) v[b] += sign * w[b];
    };
    if (n == 0) {
      // α f(e_jj) - f(e_ii) α with f(e_ii) the loop part at object i
      const auto& alpha = c.morphism(s[0]);
      std::vector<Scalar> at_cod(dim), at_dom(dim);
      for (std::size_t i = 0; i < in.size(); ++i) {
        const std::size_t m = in.entry(i).second;
        if (c.morphism(m).dom == alpha.cod) at_cod[m] = f.values[i];
        if (c.morphism(m).dom == alpha.dom) at_dom[m] = f.values[i];
      }
      add(a.multiply(basis_vector(s[0]), at_cod), 1);
      add(a.multiply(at_dom, basis_vector(s[0])), -1);
    } else {
      std::vector<std::size_t> tail(s.begin() + 1, s.end()), head(s.begin(), s.end() - 1);
      add(a.multiply(basis_vector(s[0]), f_vals[*in.find_tuple(tail)]), 1);
      for (std::size_t j = 1; j <= n; ++j) {
        std::vector<std::size_t> merged(s.begin(), s.begin() + (j - 1));
        merged.push_back(*c.compose(s[j - 1], s[j]));
        merged.insert(merged.end(), s.begin() + j + 1, s.end());
        add(f_vals[*in.find_tuple(merged)], j % 2 == 0 ? 1 : -1);
      }
      add(a.multiply(f_vals[*in.find_tuple(head)], basis_vector(s[n])), (n + 1) % 2 == 0 ? 1 : -1);
    }
    for (std::size_t b = 0; b < dim; ++b) {
      a.ring().normalize_in_place(v[b]);
      if (v[b] == 0) continue;
      auto idx = out.find(t, b);
      if (!idx) throw Error(ErrorCode::InvalidInput, "relative coboundary left Mor(i, j)");
      result.values[*idx] = v[b];
    }
  }
  return result;
}

HochschildCochain to_hochschild(const RelativeCochain& f) {
  RelativeBasis basis(f.alg, f.degree);
  HochschildCochain out = HochschildCochain::zero(f.alg, f.degree);
  const std::size_t dim = f.alg->dim();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& [ti, b] = basis.entry(i);
    const std::size_t t = f.degree == 0 ? 0 : encode_tuple(basis.tuples()[ti], dim);
    out.coeff(t, b) += f.values[i];
  }
  return out;
}

RelativeCochain to_relative(const HochschildCochain& f) {
  RelativeBasis basis(f.alg, f.degree);
  RelativeCochain out{f.alg, f.degree, std::vector<Scalar>(basis.size())};
  const std::size_t dim = f.alg->dim();
  std::vector<bool> covered(f.values.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& [ti, b] = basis.entry(i);
    const std::size_t t = f.degree == 0 ? 0 : encode_tuple(basis.tuples()[ti], dim);
    out.values[i] = f.coeff(t, b);
    covered[t * dim + b] = true;
  }
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (!covered[k] && f.values[k] != 0) {
      throw Error(ErrorCode::InvalidInput, "cochain is not E-relative: value outside Mor(i, j) on tuple " +
                                               std::to_string(k / dim));
    }
  }
  return out;
}

}  // namespace hhc
