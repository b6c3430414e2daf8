#pragma once

#include <vector>

#include "hhc/hochschild.hpp"
#include "hhc/simplicial.hpp"

namespace hhc {

/// <g, h> = 1 if h = g^{-1}, else 0, extended bilinearly. Group rings only (NotGroupRing).
Scalar frobenius(const BasedAlgebra& a, const std::vector<Scalar>& z, const std::vector<Scalar>& w);

/// Φ_n(f)(g_0, .., g_n) = <g_0, f(g_1 ⊗ .. ⊗ g_n)> on a cyclic_bar slice of the same group.
SimplicialCochain phi_n(const HochschildCochain& f, const SlicePtr& cyclic);

/// Ψ(α)(φ_1 ⊗ .. ⊗ φ_n) = α(φ_1 ⊗ .. ⊗ φ_n) φ_1 .. φ_n. α lives on tensor_bar(alg), or on
/// bar(G) when alg = k[G]. Requires idempotent structure constants (NotIdempotent).
APCochain psi(const SimplicialCochain& alpha, const AlgebraPtr& alg);

/// λ on tuples with nonzero product, 0 elsewhere; a cochain on tensor_bar(f.alg).
SimplicialCochain phi_general(const APCochain& f);

/// Ψ(Φf ∪_i Φg); ∪_0 is the cup product.
APCochain cup_i_on_ap(const APCochain& f, const APCochain& g, std::size_t i);

/// Ψ on the nerve: γ(i) e_ii in degree 0, γ(α_1..α_n) α_1..α_n in degree n.
RelativeCochain psi_nerve(const SimplicialCochain& gamma, const AlgebraPtr& alg);

/// AP cochain on k[C]^{⊗n} restricted to composable tuples (the ⊗_E picture).
RelativeCochain ap_restrict(const APCochain& f);
/// Inverse of ap_restrict: extension by zero. InvalidInput if f is not autopoietic.
APCochain ap_extend(const RelativeCochain& f);

}  // namespace hhc
