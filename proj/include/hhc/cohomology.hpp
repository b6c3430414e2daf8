#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "hhc/coeff.hpp"
#include "hhc/matrix.hpp"

namespace hhc {

/// A finitely generated module over the coefficient ring, as k^free ⊕ ⨁ Z/t.
/// Over Z/m the free part counts copies of Z/m and the torsion entries are proper divisors of m.
struct CohomologyGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // divisibility chain, entries >= 2

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const CohomologyGroup& a, const CohomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// ker(d_out) / im(d_in) at the middle of C^{n-1} -> C^n -> C^{n+1}.
/// d_in is dim C^n x dim C^{n-1}; d_out is dim C^{n+1} x dim C^n.
/// Throws CompositionNonzero if d_out * d_in is not zero in the ring.
CohomologyGroup cohomology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out, const Ring& ring);

/// Rank over Q (fraction-free elimination).
std::size_t rational_rank(const IntegerMatrix& a);

/// Rank of the matrix over a field ring (Q or Z/p).
std::size_t field_rank(const IntegerMatrix& a, const Ring& ring);

/// Invariant-factor form of a ⊕ b.
CohomologyGroup direct_sum(const CohomologyGroup& a, const CohomologyGroup& b, const Ring& ring);

/// "Z/2 ⊕ Z^3", "0", "Q^2", "(Z/4)^2".
std::string render(const CohomologyGroup& g, const Ring& ring);

}  // namespace hhc
