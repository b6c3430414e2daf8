#include "hhc/bridge.hpp"

#include "hhc/error.hpp"
#include "hhc/tuples.hpp"

namespace hhc {
namespace {

const FiniteGroup& require_group(const BasedAlgebra& a) {
  if (!a.group()) throw Error(ErrorCode::NotGroupRing, "operation needs a group ring");
  return *a.group();
}

void require_idempotent(const BasedAlgebra& a) {
  if (!a.idempotent()) throw Error(ErrorCode::NotIdempotent, "structure constants are not idempotent");
}

// Product of every n-tuple, for λ bookkeeping.
std::vector<std::optional<BasisProduct>> products_of(const BasedAlgebra& a, std::size_t n) {
  std::vector<std::optional<BasisProduct>> out(checked_power(a.dim(), n));
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < out.size() && n > 0; ++i) {
    decode_tuple(i, a.dim(), t);
    out[i] = multiply_chain(a, t);
  }
  return out;
}

}  // namespace

Scalar frobenius(const BasedAlgebra& a, const std::vector<Scalar>& z, const std::vector<Scalar>& w) {
  const FiniteGroup& g = require_group(a);
  Scalar acc = 0;
  for (std::size_t x = 0; x < g.order(); ++x) acc += z[x] * w[g.inverse(x)];
  return a.ring().normalize(acc);
}

SimplicialCochain phi_n(const HochschildCochain& f, const SlicePtr& cyclic) {
  const FiniteGroup& g = require_group(*f.alg);
  if (cyclic->kind() != SimplicialSlice::Kind::CyclicBar || cyclic->group()->table() != g.table()) {
    throw Error(ErrorCode::SliceMismatch, "Φ_n lands on the cyclic bar construction of the same group");
  }
  SimplicialCochain out = SimplicialCochain::zero(cyclic, f.alg->ring(), f.degree);
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    const auto& s = cyclic->simplex(f.degree, idx);
    const std::size_t t = encode_tuple(std::span<const std::size_t>(s).subspan(1), g.order());
    out.values[idx] = f.coeff(t, g.inverse(s[0]));
  }
  return out;
}

APCochain psi(const SimplicialCochain& alpha, const AlgebraPtr& alg) {
  require_idempotent(*alg);
  if (!(alpha.ring == alg->ring())) throw Error(ErrorCode::InvalidInput, "coefficient rings differ");
  if (auto tb = std::dynamic_pointer_cast<const TensorBar>(alpha.model)) {
    if (tb->algebra() != alg) throw Error(ErrorCode::SliceMismatch, "cochain lives on another algebra");
  } else if (auto sl = std::dynamic_pointer_cast<const SimplicialSlice>(alpha.model)) {
    if (sl->kind() != SimplicialSlice::Kind::Bar || !alg->group() || sl->group()->table() != alg->group()->table()) {
      throw Error(ErrorCode::SliceMismatch, "Ψ takes cochains on A^{⊗*} or on bar(G) for A = k[G]");
    }
  } else {
    throw Error(ErrorCode::SliceMismatch, "unsupported model for Ψ");
  }
  APCochain out = APCochain::zero(alg, alpha.degree);
  if (alpha.degree == 0) {
    out.lambdas[0] = alpha.values[0];
    return out;
  }
  auto prods = products_of(*alg, alpha.degree);
  for (std::size_t t = 0; t < prods.size(); ++t) {
    if (prods[t]) out.lambdas[t] = alpha.values[t];
  }
  return out;
}

SimplicialCochain phi_general(const APCochain& f) {
  SimplicialCochain out = SimplicialCochain::zero(tensor_bar(f.alg), f.alg->ring(), f.degree);
  if (f.degree == 0) {
    out.values[0] = f.lambdas[0];
    return out;
  }
  auto prods = products_of(*f.alg, f.degree);
  for (std::size_t t = 0; t < prods.size(); ++t) {
    if (prods[t]) out.values[t] = f.lambdas[t];
  }
  return out;
}

APCochain cup_i_on_ap(const APCochain& f, const APCochain& g, std::size_t i) {
  if (f.alg != g.alg) throw Error(ErrorCode::InvalidInput, "cochains live on different algebras");
  require_idempotent(*f.alg);
  SimplicialCochain a = phi_general(f);
  SimplicialCochain b = phi_general(g);
  b.model = a.model;
  return psi(i == 0 ? cup(a, b) : cup_i(a, b, i), f.alg);
}

RelativeCochain psi_nerve(const SimplicialCochain& gamma, const AlgebraPtr& alg) {
  auto slice = std::dynamic_pointer_cast<const SimplicialSlice>(gamma.model);
  const AmalgamCategory* c = alg->amalgam();
  if (!slice || slice->kind() != SimplicialSlice::Kind::Nerve || !c) {
    throw Error(ErrorCode::SliceMismatch, "Ψ on the nerve needs a nerve slice and an amalgam algebra");
  }
  const AmalgamCategory& sc = *slice->category();
  bool same = sc.morphism_count() == c->morphism_count() && sc.objects() == c->objects();
  for (std::size_t m = 0; same && m < c->morphism_count(); ++m) {
    same = sc.morphism(m).dom == c->morphism(m).dom && sc.morphism(m).cod == c->morphism(m).cod &&
           sc.morphism(m).element == c->morphism(m).element;
  }
  if (!same) throw Error(ErrorCode::SliceMismatch, "nerve and algebra come from different categories");

  RelativeBasis basis(alg, gamma.degree);
  RelativeCochain out{alg, gamma.degree, std::vector<Scalar>(basis.size())};
  if (gamma.degree == 0) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& mor = c->morphism(basis.entry(i).second);
      if (basis.entry(i).second == c->identity(mor.dom)) out.values[i] = gamma.values[mor.dom];
    }
    return out;
  }
  for (std::size_t t = 0; t < basis.tuples().size(); ++t) {
    const auto& tup = basis.tuples()[t];
    auto prod = multiply_chain(*alg, tup);
    auto idx = slice->index_of(gamma.degree, tup);
    if (!prod || !idx) throw Error(ErrorCode::InvalidInput, "composable string missing from the nerve");
    out.values[*basis.find(t, prod->index)] = alg->ring().normalize(gamma.values[*idx] * prod->coeff);
  }
  return out;
}

RelativeCochain ap_restrict(const APCochain& f) {
  RelativeBasis basis(f.alg, f.degree);
  const BasedAlgebra& a = *f.alg;
  RelativeCochain out{f.alg, f.degree, std::vector<Scalar>(basis.size())};
  if (f.degree == 0) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      out.values[i] = a.ring().normalize(f.lambdas[0] * a.unit()[basis.entry(i).second]);
    }
    return out;
  }
  for (std::size_t t = 0; t < basis.tuples().size(); ++t) {
    const auto& tup = basis.tuples()[t];
    auto prod = multiply_chain(a, tup);
    if (!prod) continue;
    out.values[*basis.find(t, prod->index)] =
        a.ring().normalize(f.lambdas[encode_tuple(tup, a.dim())] * prod->coeff);
  }
  return out;
}

APCochain ap_extend(const RelativeCochain& f) {
  HochschildCochain full = to_hochschild(f);
  if (!is_autopoietic(full)) throw Error(ErrorCode::InvalidInput, "relative cochain is not autopoietic");
  return ap_split(full).first;
}

}  // namespace hhc
