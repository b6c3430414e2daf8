#include <doctest.h>

#include <random>
#include <set>

#include "hhc/cohomology.hpp"
#include "hhc/error.hpp"
#include "support.hpp"

using namespace hhc;

namespace {

CohomologyGroup group(std::size_t free, std::vector<long> torsion) {
  CohomologyGroup g;
  g.free_rank = free;
  for (long t : torsion) g.torsion.push_back(t);
  return g;
}

std::vector<long> apply(const IntegerMatrix& a, const std::vector<long>& x, long m) {
  std::vector<long> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j).get_si() * x[j];
    y[i] = ((s % m) + m) % m;
  }
  return y;
}

std::vector<std::vector<long>> all_vectors(std::size_t n, long m) {
  std::vector<std::vector<long>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<long>> next;
    for (const auto& v : out)
      for (long c = 0; c < m; ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

// |{x in H : d x = 0}| for each d | m, by enumerating ker(d_out) modulo im(d_in).
std::vector<std::size_t> torsion_counts_brute(const IntegerMatrix& d_in, const IntegerMatrix& d_out, long m) {
  const std::size_t n = d_out.cols();
  std::set<std::vector<long>> image;
  for (const auto& x : all_vectors(d_in.cols(), m)) image.insert(apply(d_in, x, m));
  std::vector<std::vector<long>> kernel;
  for (const auto& x : all_vectors(n, m))
    if (apply(d_out, x, m) == std::vector<long>(d_out.rows(), 0)) kernel.push_back(x);
  std::vector<std::size_t> counts;
  for (long d = 1; d <= m; ++d) {
    if (m % d) continue;
    std::size_t c = 0;
    for (const auto& x : kernel) {
      std::vector<long> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = (d * x[i]) % m;
      c += image.count(y);
    }
    counts.push_back(c / image.size());
  }
  return counts;
}

std::vector<std::size_t> torsion_counts(const CohomologyGroup& g, long m) {
  std::vector<std::size_t> counts;
  for (long d = 1; d <= m; ++d) {
    if (m % d) continue;
    std::size_t c = 1;
    for (std::size_t i = 0; i < g.free_rank; ++i) c *= std::gcd(d, m);
    for (const auto& t : g.torsion) c *= std::gcd(d, t.get_si());
    counts.push_back(c);
  }
  return counts;
}

}  // namespace

TEST_CASE("cohomology of small complexes") {
  IntegerMatrix d_in{{2}}, d_out(0, 1);
  CHECK(cohomology_at(d_in, d_out, Ring::integers()) == group(0, {2}));
  CHECK(cohomology_at(d_in, d_out, Ring::rationals()).is_zero());
  CHECK(cohomology_at(d_in, d_out, Ring::modulo(2)) == group(1, {}));
  CHECK(cohomology_at(d_in, d_out, Ring::modulo(4)) == group(0, {2}));
  CHECK(cohomology_at(d_in, d_out, Ring::modulo(3)).is_zero());

  IntegerMatrix none(1, 0), zero{{0}};
  CHECK(cohomology_at(none, zero, Ring::integers()) == group(1, {}));
}

TEST_CASE("composition check") {
  IntegerMatrix one{{1}};
  CHECK_THROWS_AS(cohomology_at(one, one, Ring::integers()), Error);
  IntegerMatrix two{{2}};
  CHECK_NOTHROW(cohomology_at(two, two, Ring::modulo(4)));
  CHECK_THROWS_AS(cohomology_at(IntegerMatrix(2, 1), IntegerMatrix(1, 3), Ring::integers()), Error);
}

TEST_CASE("composite moduli agree with brute-force enumeration") {
  std::mt19937_64 rng(5);
  for (long m : {4L, 6L, 8L, 9L}) {
    for (int trial = 0; trial < 25; ++trial) {
      // d_out * d_in = 0 by construction: d_in = K * X where d_out * K = 0 mod m.
      const std::size_t n = 2 + rng() % 2;
      IntegerMatrix x(1 + rng() % 2, 1 + rng() % 2);
      IntegerMatrix d_out(1, n);
      for (std::size_t j = 0; j < n; ++j) d_out(0, j) = static_cast<long>(rng() % m);
      IntegerMatrix k(n, x.rows());
      // columns of K: random vectors v with d_out v = 0 mod m (found by search)
      auto candidates = all_vectors(n, m);
      std::vector<std::vector<long>> ker;
      for (const auto& v : candidates)
        if (apply(d_out, v, m)[0] == 0) ker.push_back(v);
      for (std::size_t c = 0; c < k.cols(); ++c) {
        const auto& v = ker[rng() % ker.size()];
        for (std::size_t r = 0; r < n; ++r) k(r, c) = v[r];
      }
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = static_cast<long>(rng() % 5) - 2;
      IntegerMatrix d_in = k * x;
      auto h = cohomology_at(d_in, d_out, Ring::modulo(m));
      CHECK(torsion_counts(h, m) == torsion_counts_brute(d_in, d_out, m));
      for (const auto& t : h.torsion) {
        CHECK(t > 1);
        CHECK(t < m);
        CHECK(m % t.get_si() == 0);
      }
    }
  }
}

TEST_CASE("integral complexes reduced mod m agree with brute-force enumeration") {
  std::mt19937_64 rng(6);
  for (long m : {4L, 6L, 12L}) {
    for (int trial = 0; trial < 25; ++trial) {
      // d_out = [a b 0], d_in spans a multiple of its integer kernel, so d_out * d_in = 0 over Z.
      const long a = static_cast<long>(rng() % 5) - 2, b = static_cast<long>(rng() % 5) - 2;
      IntegerMatrix d_out{{a, b, 0}};
      const long s = 1 + static_cast<long>(rng() % 4), t = static_cast<long>(rng() % 4);
      IntegerMatrix d_in{{b * s, 0}, {-a * s, 0}, {0, t}};
      REQUIRE((d_out * d_in).is_zero());
      auto h = cohomology_at(d_in, d_out, Ring::modulo(m));
      CHECK(torsion_counts(h, m) == torsion_counts_brute(d_in, d_out, m));
    }
  }
}

TEST_CASE("prime fields agree with brute-force enumeration") {
  std::mt19937_64 rng(9);
  for (long p : {2L, 3L, 5L}) {
    for (int trial = 0; trial < 15; ++trial) {
      IntegerMatrix d_out(1, 3);
      for (std::size_t j = 0; j < 3; ++j) d_out(0, j) = static_cast<long>(rng() % p);
      IntegerMatrix d_in(3, 1);
      // (a, b, c) with d_out . v = 0 mod p: search
      for (const auto& v : all_vectors(3, p)) {
        if (apply(d_out, v, p)[0] == 0 && rng() % 3 == 0) {
          for (std::size_t r = 0; r < 3; ++r) d_in(r, 0) = v[r];
          break;
        }
      }
      auto h = cohomology_at(d_in, d_out, Ring::modulo(p));
      CHECK(h.torsion.empty());
      CHECK(torsion_counts(h, p) == torsion_counts_brute(d_in, d_out, p));
    }
  }
}

TEST_CASE("direct sums and rendering") {
  const Ring z = Ring::integers();
  CHECK(direct_sum(group(1, {2}), group(0, {3}), z) == group(1, {6}));
  CHECK(direct_sum(group(0, {2}), group(0, {2}), z) == group(0, {2, 2}));
  const Ring z6 = Ring::modulo(6);
  CHECK(direct_sum(group(0, {2}), group(0, {3}), z6) == group(1, {}));
  CHECK(direct_sum(group(1, {}), group(0, {2}), z6) == group(1, {2}));

  CHECK(render(group(0, {}), z) == "0");
  CHECK(render(group(3, {2}), z) == "Z/2 ⊕ Z^3");
  CHECK(render(group(2, {}), Ring::rationals()) == "Q^2");
  CHECK(render(group(2, {}), Ring::modulo(4)) == "(Z/4)^2");
  CHECK(render(group(1, {}), Ring::modulo(4)) == "Z/4");
}

TEST_CASE("ranks over fields") {
  IntegerMatrix a{{1, 2}, {2, 4}, {0, 3}};
  CHECK(rational_rank(a) == 2);
  CHECK(field_rank(a, Ring::modulo(3)) == 1);
  CHECK(field_rank(a, Ring::rationals()) == 2);
}
