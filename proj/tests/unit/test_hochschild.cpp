#include <doctest.h>

#include <random>

#include "hhc/engine.hpp"
#include "hhc/error.hpp"
#include "hhc/hochschild.hpp"
#include "hhc/tuples.hpp"
#include "support.hpp"

using namespace hhc;
using testing::random_cochain;

namespace {

std::vector<Scalar> basis_vector(const BasedAlgebra& a, std::size_t i) {
  std::vector<Scalar> v(a.dim(), 0);
  v[i] = 1;
  return v;
}

// f evaluated on an arbitrary tensor of basis elements given as a list of coefficient vectors.
std::vector<Scalar> evaluate(const HochschildCochain& f, const std::vector<std::vector<Scalar>>& args) {
  const auto& a = *f.alg;
  std::vector<Scalar> out(a.dim(), 0);
  const std::size_t n = args.size();
  const std::size_t count = checked_power(a.dim(), n);
  for (std::size_t t = 0; t < count; ++t) {
    auto idx = decode_tuple(t, a.dim(), n);
    Scalar c = 1;
    for (std::size_t k = 0; k < n && c != 0; ++k) c *= args[k][idx[k]];
    if (c == 0) continue;
    for (std::size_t b = 0; b < a.dim(); ++b) out[b] += c * f.coeff(t, b);
  }
  for (auto& x : out) a.ring().normalize_in_place(x);
  return out;
}

// Coboundary written directly from a_1 f(a_2..) + Σ (-1)^i f(..a_i a_{i+1}..) + (-1)^{n+1} f(..) a_{n+1}.
HochschildCochain naive_delta(const HochschildCochain& f) {
  const auto& a = *f.alg;
  const std::size_t n = f.degree, d = a.dim();
  auto out = HochschildCochain::zero(f.alg, n + 1);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    auto idx = decode_tuple(t, d, n + 1);
    std::vector<std::vector<Scalar>> args;
    for (auto i : idx) args.push_back(basis_vector(a, i));
    std::vector<Scalar> total(d, 0);
    auto add = [&](const std::vector<Scalar>& v, int sign) {
      for (std::size_t b = 0; b < d; ++b) total[b] += sign * v[b];
    };
    add(a.multiply(args[0], evaluate(f, {args.begin() + 1, args.end()})), 1);
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<std::vector<Scalar>> merged(args.begin(), args.begin() + i - 1);
      merged.push_back(a.multiply(args[i - 1], args[i]));
      merged.insert(merged.end(), args.begin() + i + 1, args.end());
      add(evaluate(f, merged), i % 2 ? -1 : 1);
    }
    add(a.multiply(evaluate(f, {args.begin(), args.end() - 1}), args[n]), (n + 1) % 2 ? -1 : 1);
    for (std::size_t b = 0; b < d; ++b) out.coeff(t, b) = a.ring().normalize(total[b]);
  }
  return out;
}

std::vector<AlgebraPtr> sample_algebras() {
  std::vector<std::optional<BasisProduct>> dual{BasisProduct{0, 1}, BasisProduct{1, 1}, BasisProduct{1, 1},
                                                std::nullopt};
  return {
      group_ring(FiniteGroup::cyclic(2), Ring::integers()),
      group_ring(FiniteGroup::cyclic(3), Ring::modulo(3)),
      poset_algebra(FinitePoset::chain(3), Ring::integers()),
      amalgam_algebra(AmalgamCategory(FinitePoset::chain(2), {FiniteGroup::cyclic(2), FiniteGroup::trivial()}),
                      Ring::modulo(4)),
      BasedAlgebra::custom(Ring::integers(), 2, dual, {1, 0}, {"1", "x"}),
  };
}

IntegerMatrix column_of(const HochschildCochain& f) {
  IntegerMatrix c(f.values.size(), 1);
  for (std::size_t i = 0; i < f.values.size(); ++i) c(i, 0) = f.values[i].get_num();
  return c;
}

}  // namespace

TEST_CASE("coboundary agrees with a direct evaluation of the defining formula") {
  std::mt19937_64 rng(1);
  for (const auto& a : sample_algebras()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      auto f = random_cochain(a, n, rng);
      CHECK(delta(f) == naive_delta(f));
    }
  }
}

TEST_CASE("coboundary: hand-computed values") {
  auto a = group_ring(FiniteGroup::cyclic(2), Ring::integers());
  auto f = HochschildCochain::zero(a, 1);
  f.coeff(1, 1) = 1;  // f(e) = 0, f(x) = x
  auto df = delta(f);
  // δf(x, x) = x f(x) - f(x x) + f(x) x = 2e
  CHECK(df.coeff(3, 0) == 2);
  CHECK(df.coeff(3, 1) == 0);

  auto p = poset_algebra(FinitePoset::chain(2), Ring::integers());
  const auto& c = *p->amalgam();
  auto g = HochschildCochain::zero(p, 0);
  g.coeff(0, c.connecting(0, 1)) = 1;  // g(1) = e12
  auto dg = delta(g);
  // δg(e11) = e11 e12 - e12 e11 = e12, δg(e22) = -e12
  CHECK(dg.coeff(c.identity(0), c.connecting(0, 1)) == 1);
  CHECK(dg.coeff(c.identity(1), c.connecting(0, 1)) == -1);
}

TEST_CASE("coboundary squares to zero") {
  std::mt19937_64 rng(2);
  for (const auto& a : sample_algebras())
    for (std::size_t n = 0; n <= 2; ++n) CHECK(delta(delta(random_cochain(a, n, rng))).is_zero());
}

TEST_CASE("Gerstenhaber product satisfies the Leibniz rule") {
  std::mt19937_64 rng(3);
  for (const auto& a : sample_algebras()) {
    for (std::size_t p = 0; p <= 1; ++p)
      for (std::size_t q = 0; q <= 1; ++q) {
        auto f = random_cochain(a, p, rng), g = random_cochain(a, q, rng);
        auto lhs = delta(gerstenhaber(f, g));
        auto rhs = gerstenhaber(delta(f), g) + scale(p % 2 ? -1 : 1, gerstenhaber(f, delta(g)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("partial composition and the pre-Lie product") {
  auto a = group_ring(FiniteGroup::cyclic(3), Ring::integers());
  std::mt19937_64 rng(4);
  auto f = random_cochain(a, 2, rng), g = random_cochain(a, 1, rng);
  // (f ∘_0 g)(x, y) = f(g(x), y)
  auto c0 = partial_composition(f, g, 0);
  auto c1 = partial_composition(f, g, 1);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      auto gx = g.at(x);
      auto fy = evaluate(f, {gx, basis_vector(*a, y)});
      CHECK(c0.at(x * 3 + y) == fy);
      auto gy = g.at(y);
      CHECK(c1.at(x * 3 + y) == evaluate(f, {basis_vector(*a, x), gy}));
    }
  // q = 1: all signs (-1)^{(p-1-j)·0} = +1
  CHECK(pre_lie(f, g) == c0 + c1);
  auto h = random_cochain(a, 2, rng);
  // q = 2, p = 2: signs (-1)^{(1-j)}: j = 0 negative, j = 1 positive
  CHECK(pre_lie(f, h) == partial_composition(f, h, 1) - partial_composition(f, h, 0));
  CHECK_THROWS_AS(partial_composition(f, g, 2), Error);
  CHECK_THROWS_AS(pre_lie(HochschildCochain::zero(a, 0), g), Error);
}

TEST_CASE("AP/NP splitting at cochain level") {
  std::mt19937_64 rng(5);
  for (const auto& a : sample_algebras()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      auto f = random_cochain(a, n, rng);
      auto [ap, np] = ap_split(f);
      CHECK(embed(ap) + np == f);
      CHECK(is_autopoietic(embed(ap)));
      if (a->group()) {
        CHECK(is_non_autopoietic(np));
      }
    }
  }
  auto g = group_ring(FiniteGroup::cyclic(2), Ring::integers());
  auto f = HochschildCochain::zero(g, 1);
  f.coeff(1, 0) = 1;  // f(x) = e, not a multiple of x
  CHECK_FALSE(is_autopoietic(f));
  CHECK(is_non_autopoietic(f));
}

TEST_CASE("complex matrices agree with the coboundary on basis cochains") {
  for (const auto& a : sample_algebras()) {
    auto cx = build_complex(a, ComplexVariant::Full, 2);
    for (std::size_t n = 0; n < 2; ++n) {
      REQUIRE(cx.differentials[n].cols() == cx.dims[n]);
      for (std::size_t k = 0; k < cx.dims[n]; ++k) {
        auto e = HochschildCochain::zero(a, n);
        e.values[k] = 1;
        auto col = column_of(delta(e));
        for (std::size_t r = 0; r < cx.dims[n + 1]; ++r) {
          mpz_class want = col(r, 0);
          mpz_class got = cx.differentials[n](r, k);
          if (a->ring().kind() == Ring::Kind::IntegersModM) {
            want %= a->ring().modulus();
            got = ((got % a->ring().modulus()) + a->ring().modulus()) % a->ring().modulus();
          }
          CHECK(got == want);
        }
      }
    }
    for (std::size_t n = 0; n <= 2; ++n) CHECK(complex_dimension(a, ComplexVariant::Full, n) == cx.dims[n]);
  }
}

TEST_CASE("AP and NP complexes split the full one") {
  for (std::size_t order : {1, 2, 3}) {
    auto a = group_ring(FiniteGroup::cyclic(order), Ring::integers());
    for (std::size_t n = 0; n <= 3; ++n) {
      CHECK(complex_dimension(a, ComplexVariant::AP, n) + complex_dimension(a, ComplexVariant::NP, n) ==
            complex_dimension(a, ComplexVariant::Full, n));
    }
  }
  auto p = poset_algebra(FinitePoset::chain(2), Ring::integers());
  CHECK_THROWS_AS(build_complex(p, ComplexVariant::NP, 2), Error);
  auto g = group_ring(FiniteGroup::cyclic(2), Ring::integers());
  CHECK_THROWS_AS(build_complex(g, ComplexVariant::RelativeE, 2), Error);
}

TEST_CASE("AP cohomology of group rings matches the universal coefficient oracle") {
  for (long m : {1L, 2L, 3L, 4L}) {
    for (const Ring& r : {Ring::integers(), Ring::modulo(2), Ring::modulo(3), Ring::modulo(4), Ring::rationals()}) {
      auto a = group_ring(FiniteGroup::cyclic(m), r);
      const std::size_t N = m >= 3 ? 4 : 5;
      auto h = hochschild_cohomology(a, ComplexVariant::AP, N);
      REQUIRE(h.size() == N);
      for (std::size_t n = 0; n < N; ++n) {
        INFO("m=", m, " ring=", r.name(), " n=", n);
        CHECK(h[n] == testing::cyclic_cohomology(m, n, r));
      }
    }
  }
}

TEST_CASE("full Hochschild cohomology of abelian group rings is |G| copies of H*(BG)") {
  for (long m : {2L, 3L}) {
    for (const Ring& r : {Ring::integers(), Ring::modulo(2), Ring::modulo(4), Ring::rationals()}) {
      auto a = group_ring(FiniteGroup::cyclic(m), r);
      auto h = hochschild_cohomology(a, ComplexVariant::Full, 4);
      for (std::size_t n = 0; n < 4; ++n) {
        CohomologyGroup want;
        for (long k = 0; k < m; ++k) want = direct_sum(want, testing::cyclic_cohomology(m, n, r), r);
        INFO("m=", m, " ring=", r.name(), " n=", n);
        CHECK(h[n] == want);
      }
    }
  }
}

TEST_CASE("resource guard") {
  auto a = group_ring(FiniteGroup::cyclic(3), Ring::integers());
  CHECK_THROWS_AS(build_complex(a, ComplexVariant::Full, 3, ResourceGuard{100}), Error);
  try {
    build_complex(a, ComplexVariant::Full, 3, ResourceGuard{100});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResourceLimit);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
}

TEST_CASE("contracting homotopy on the relative bar resolution") {
  std::vector<AmalgamCategory> cats = {
      AmalgamCategory(FinitePoset::chain(2), {FiniteGroup::cyclic(2), FiniteGroup::trivial()}),
      AmalgamCategory(FinitePoset::chain(3), {FiniteGroup::trivial(), FiniteGroup::trivial(), FiniteGroup::trivial()}),
      AmalgamCategory(FinitePoset::antichain(2), {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}),
      AmalgamCategory(FinitePoset::chain(1), {FiniteGroup::cyclic(2)}),
  };
  for (const auto& c : cats)
    for (std::size_t n = 0; n <= 3; ++n) CHECK(verify_contracting_homotopy(c, n));
}
