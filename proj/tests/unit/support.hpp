#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hhc/algebra.hpp"
#include "hhc/cohomology.hpp"
#include "hhc/hochschild.hpp"
#include "hhc/simplicial.hpp"
#include "hhc/smith.hpp"

namespace testing {

using namespace hhc;

inline Scalar small(std::mt19937_64& rng, const Ring& r) {
  return r.normalize(Scalar(std::uniform_int_distribution<int>(-3, 3)(rng)));
}

inline HochschildCochain random_cochain(const AlgebraPtr& a, std::size_t n, std::mt19937_64& rng) {
  auto f = HochschildCochain::zero(a, n);
  for (auto& v : f.values) v = small(rng, a->ring());
  return f;
}

inline SimplicialCochain random_cochain(const ModelPtr& m, const Ring& r, std::size_t n, std::mt19937_64& rng) {
  auto c = SimplicialCochain::zero(m, r, n);
  for (auto& v : c.values) v = small(rng, r);
  return c;
}

/// Group from a list of cyclic orders: "Z/a" means order a, "Z" means free, "0" drops out.
/// Over Z/m an order equal to m is a free summand; over Q only free summands survive.
inline CohomologyGroup from_orders(std::vector<long> orders, const Ring& ring) {
  CohomologyGroup g;
  std::vector<mpz_class> t;
  for (long o : orders) {
    if (o == 1) continue;
    if (o == 0) {
      ++g.free_rank;
    } else if (ring.kind() != Ring::Kind::Rationals) {
      t.push_back(o);
    }
  }
  for (auto& x : normalize_diagonal(t)) {
    if (ring.kind() == Ring::Kind::IntegersModM && x == ring.modulus()) {
      ++g.free_rank;
    } else {
      g.torsion.push_back(x);
    }
  }
  return g;
}

/// Integral homology of BZ/m: Z, Z/m, 0, Z/m, 0, ... (0 encodes Z, 1 the trivial group).
inline long cyclic_homology(long m, std::size_t n) {
  if (n == 0) return 0;
  return n % 2 == 1 ? m : 1;
}

/// Hom(Z/a, R) ⊕ Ext(Z/b, R) for cyclic a, b (0 = Z) and R = Z, Q or Z/r (r given, 0 for Z).
/// Returns the cyclic orders of the summands.
inline std::vector<long> uct(long hn, long hn1, long r, bool rational) {
  std::vector<long> out;
  auto hom = [&](long a) -> long {
    if (rational) return a == 0 ? 0 : 1;
    if (a == 0) return r;  // Hom(Z, R) = R
    if (r == 0) return 1;  // Hom(Z/a, Z) = 0
    return std::gcd(a, r);
  };
  auto ext = [&](long b) -> long {
    if (rational || b == 0) return 1;  // Ext(Z, -) = 0, Ext(-, Q) = 0
    if (r == 0) return b;             // Ext(Z/b, Z) = Z/b
    return std::gcd(b, r);
  };
  out.push_back(hom(hn));
  out.push_back(ext(hn1));
  return out;
}

/// H^n(BZ/m; ring) from the universal coefficient theorem.
inline CohomologyGroup cyclic_cohomology(long m, std::size_t n, const Ring& ring) {
  const bool q = ring.kind() == Ring::Kind::Rationals;
  const long r = ring.kind() == Ring::Kind::IntegersModM ? ring.modulus().get_si() : 0;
  const long hn1 = n == 0 ? 1 : cyclic_homology(m, n - 1);
  return from_orders(uct(cyclic_homology(m, n), hn1, r, q), ring);
}

}  // namespace testing
