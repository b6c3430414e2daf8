#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "hhc/matrix.hpp"

namespace hhc {

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... >= 0, zeros last.
struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;

  std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Nonzero diagonal of the Smith form (a divisibility chain); `rank` is its length.
struct InvariantFactors {
  std::size_t rank = 0;
  std::vector<mpz_class> factors;
};

/// Same diagonal as smith_normal_form without accumulating the transforms.
InvariantFactors invariant_factors(const IntegerMatrix& a);

/// Rank over Z/p, p prime.
std::size_t rank_mod_prime(const IntegerMatrix& a, const mpz_class& p);

/// Replaces the entries with the invariant factors of diag(entries): gcd/lcm
/// normalization into a divisibility chain. Zeros are dropped.
std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> entries);

}  // namespace hhc
