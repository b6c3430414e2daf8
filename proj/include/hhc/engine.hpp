#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhc/cohomology.hpp"
#include "hhc/hochschild.hpp"
#include "hhc/simplicial.hpp"

namespace hhc {

/// H^0..H^{N-1} of a complex carrying C^0..C^N.
std::vector<CohomologyGroup> complex_cohomology(const CochainComplex& cx, const Ring& ring);

/// HH^0..HH^{N-1} of the chosen variant over the algebra's own ring.
std::vector<CohomologyGroup> hochschild_cohomology(const AlgebraPtr& a, ComplexVariant variant, std::size_t max_degree,
                                                   const ResourceGuard& guard = {});

/// Coboundary matrices of the cochain complex Hom_k(k[B_*], k), degrees 0..N.
CochainComplex simplicial_complex(const SimplicialModel& m, std::size_t max_degree, const ResourceGuard& guard = {});

/// H^0..H^{N-1}; the model must provide degree N.
std::vector<CohomologyGroup> simplicial_cohomology(const SimplicialModel& m, const Ring& ring, std::size_t max_degree,
                                                   const ResourceGuard& guard = {});

/// Degree cap used when none is given: 4 for dim <= 4, 3 for dim <= 8, else 2.
std::size_t default_max_degree(std::size_t dim);

nlohmann::json to_json(const CohomologyGroup& g);

struct DegreeComparison {
  std::size_t degree;
  CohomologyGroup lhs;
  CohomologyGroup rhs;
  bool match;
};

struct NamedTable {
  std::string name;
  std::vector<CohomologyGroup> groups;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  std::string detail;  // first counterexample or skip reason
};

/// Outcome of a verification run; serializes to the report JSON.
struct Report {
  std::string check;
  nlohmann::json inputs;
  Ring ring = Ring::integers();
  std::vector<DegreeComparison> per_degree;
  std::vector<NamedTable> tables;
  std::vector<CheckResult> checks;
  bool pass = true;

  nlohmann::json to_json() const;
};

/// AP(k[G]^{⊗*}) against the bar complex of G.
Report verify_ap_iso(const FiniteGroup& g, const Ring& ring, std::size_t max_degree, const ResourceGuard& guard = {});

/// Full against AP ⊕ NP, plus cochain-level dimension checks.
Report verify_splitting(const FiniteGroup& g, const Ring& ring, std::size_t max_degree,
                        const ResourceGuard& guard = {});

/// Relative complex of k[C] against H*(nerve) ⊕ ⨁_i H*(NP(k[G_i])).
Report verify_amalgam_theorem(const AmalgamCategory& c, const Ring& ring, std::size_t max_degree,
                              const ResourceGuard& guard = {});

struct IdentityCaps {
  std::size_t max_degree = 3;  // p, q
  std::size_t max_cup_index = 3;
};

/// Randomized exact checks of the cochain-level product identities.
Report verify_einfty_identities(const AlgebraPtr& a, std::size_t trials, std::uint64_t seed,
                                const IdentityCaps& caps = {});

}  // namespace hhc
