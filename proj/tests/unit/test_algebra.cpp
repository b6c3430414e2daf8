#include <doctest.h>

#include <random>

#include "hhc/algebra.hpp"
#include "hhc/error.hpp"

using namespace hhc;

namespace {

AmalgamCategory chain_amalgam(std::vector<FiniteGroup> groups) {
  const std::size_t n = groups.size();
  return AmalgamCategory(FinitePoset::chain(n), std::move(groups));
}

// Random composable string of morphisms from object i to object j (i <= j).
std::vector<std::size_t> random_path(const AmalgamCategory& c, std::size_t i, std::size_t j, std::mt19937_64& rng) {
  std::vector<std::size_t> path;
  std::size_t at = i;
  while (true) {
    std::vector<std::size_t> next;
    for (std::size_t m = 0; m < c.morphism_count(); ++m) {
      const auto& x = c.morphism(m);
      if (x.dom == at && c.poset().leq(x.cod, j)) next.push_back(m);
    }
    const std::size_t m = next[rng() % next.size()];
    path.push_back(m);
    at = c.morphism(m).cod;
    if (at == j && rng() % 3 == 0) break;
  }
  return path;
}

}  // namespace

TEST_CASE("cyclic groups and products") {
  auto g = FiniteGroup::cyclic(4);
  CHECK(g.order() == 4);
  CHECK(g.identity() == 0);
  CHECK(g.mul(3, 2) == 1);
  CHECK(g.inverse(1) == 3);
  CHECK(g.label(0) == "e");
  CHECK(g.label(1) == "x");
  CHECK(g.label(2) == "x^2");

  auto v = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(v.order() == 4);
  for (std::size_t a = 0; a < 4; ++a) CHECK(v.mul(a, a) == v.identity());
  CHECK(v.label(3) == "(x,x)");
  CHECK(FiniteGroup::trivial().order() == 1);
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), Error);
}

TEST_CASE("group tables are validated") {
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  CHECK(FiniteGroup::from_table({{1, 0}, {0, 1}}).identity() == 1);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);       // no inverse
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}}, 1), Error);    // wrong identity
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0}}), Error);    // ragged
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 5}, {5, 0}}), Error);       // out of range
  // identity and inverses present, associativity fails
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}), Error);
}

TEST_CASE("posets: closure and cycles") {
  auto p = FinitePoset::from_relations(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(2, 0));
  CHECK_THROWS_AS(FinitePoset::from_relations(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(FinitePoset::from_relations(2, {{0, 2}}), Error);
  auto a = FinitePoset::antichain(2);
  CHECK_FALSE(a.leq(0, 1));
  CHECK_FALSE(a.leq(1, 0));
}

TEST_CASE("amalgam categories: composition") {
  auto c = chain_amalgam({FiniteGroup::cyclic(2), FiniteGroup::trivial()});
  CHECK(c.morphism_count() == 4);  // e11, x_1, e12, e22
  const std::size_t e11 = c.identity(0), x = c.loop(0, 1), e12 = c.connecting(0, 1), e22 = c.identity(1);
  CHECK(c.label(e11) == "e11");
  CHECK(c.label(x) == "x_1");
  CHECK(c.label(e12) == "e12");
  CHECK(c.compose(x, x) == e11);
  CHECK(c.compose(x, e12) == e12);
  CHECK(c.compose(e12, e22) == e12);
  CHECK_FALSE(c.compose(e12, x).has_value());
  CHECK_FALSE(c.compose(e12, e12).has_value());
  CHECK_THROWS_AS(c.connecting(1, 0), Error);
  CHECK(c.hom(0, 1) == std::vector<std::size_t>{e12});
  CHECK(c.hom(0, 0).size() == 2);
  CHECK_THROWS_AS(AmalgamCategory(FinitePoset::chain(2), {FiniteGroup::trivial()}), Error);
}

TEST_CASE("poset algebra products") {
  auto a = poset_algebra(FinitePoset::chain(3), Ring::integers());
  const auto& c = *a->amalgam();
  const std::size_t e12 = c.connecting(0, 1), e23 = c.connecting(1, 2), e13 = c.connecting(0, 2);
  auto p = multiply_chain(*a, {e12, e23});
  REQUIRE(p);
  CHECK(p->index == e13);
  CHECK(p->coeff == 1);
  auto two = poset_algebra(FinitePoset::chain(2), Ring::integers());
  const std::size_t f12 = two->amalgam()->connecting(0, 1);
  CHECK_FALSE(multiply_chain(*two, {f12, f12}).has_value());
  CHECK_THROWS_AS(multiply_chain(*two, {}), Error);
  CHECK_THROWS_AS(multiply_chain(*two, {9}), Error);
  CHECK(a->kind() == BasedAlgebra::Kind::PosetAlgebra);
}

TEST_CASE("group ring products are total; category products vanish exactly off composable pairs") {
  auto g = group_ring(FiniteGroup::cyclic(3), Ring::integers());
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      REQUIRE(g->product(x, y));
      CHECK(g->product(x, y)->index == (x + y) % 3);
    }
  auto c = AmalgamCategory(FinitePoset::from_relations(3, {{0, 1}, {0, 2}}),
                           {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::trivial()});
  auto a = amalgam_algebra(c, Ring::integers());
  for (std::size_t x = 0; x < a->dim(); ++x)
    for (std::size_t y = 0; y < a->dim(); ++y)
      CHECK(a->product(x, y).has_value() == (c.morphism(x).cod == c.morphism(y).dom));
}

TEST_CASE("every constructed algebra is associative with a two-sided unit") {
  std::vector<AlgebraPtr> algebras;
  for (const Ring& r : {Ring::integers(), Ring::modulo(2), Ring::rationals()}) {
    algebras.push_back(group_ring(FiniteGroup::cyclic(4), r));
    algebras.push_back(group_ring(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)), r));
    algebras.push_back(poset_algebra(FinitePoset::chain(3), r));
    algebras.push_back(poset_algebra(FinitePoset::antichain(2), r));
    algebras.push_back(amalgam_algebra(chain_amalgam({FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}), r));
  }
  for (const auto& a : algebras) {
    CHECK(a->is_associative());
    CHECK(a->unit_is_identity());
    CHECK(a->idempotent());
  }
}

TEST_CASE("custom algebras are validated") {
  // k[x]/(x^2) with basis 1, x: x*x = 0.
  std::vector<std::optional<BasisProduct>> p{BasisProduct{0, 1}, BasisProduct{1, 1}, BasisProduct{1, 1}, std::nullopt};
  auto a = BasedAlgebra::custom(Ring::integers(), 2, p, {1, 0}, {"1", "x"});
  CHECK(a->dim() == 2);
  CHECK(a->label(1) == "x");
  CHECK(a->multiply({0, 1}, {0, 1}) == std::vector<Scalar>{0, 0});
  CHECK(a->multiply({1, 2}, {3, 1}) == std::vector<Scalar>{3, 7});
  CHECK_THROWS_AS(BasedAlgebra::custom(Ring::integers(), 2, p, {0, 1}), Error);  // unit fails
  auto bad = p;
  bad[3] = BasisProduct{5, 1};
  CHECK_THROWS_AS(BasedAlgebra::custom(Ring::integers(), 2, bad, {1, 0}), Error);
}

TEST_CASE("unique morphism: random chains from i to j collapse to e_ij with coefficient 1") {
  std::mt19937_64 rng(3);
  std::vector<AmalgamCategory> cats = {
      chain_amalgam({FiniteGroup::cyclic(2), FiniteGroup::trivial()}),
      chain_amalgam({FiniteGroup::cyclic(3), FiniteGroup::cyclic(2), FiniteGroup::trivial()}),
      AmalgamCategory(FinitePoset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                      {FiniteGroup::cyclic(2), FiniteGroup::trivial(), FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)}),
  };
  for (const auto& c : cats) {
    auto a = amalgam_algebra(c, Ring::integers());
    for (std::size_t i = 0; i < c.objects(); ++i)
      for (std::size_t j = 0; j < c.objects(); ++j) {
        if (i == j || !c.poset().leq(i, j)) continue;
        for (int trial = 0; trial < 30; ++trial) {
          auto path = random_path(c, i, j, rng);
          auto p = multiply_chain(*a, path);
          REQUIRE(p);
          CHECK(p->index == c.connecting(i, j));
          CHECK(p->coeff == 1);
        }
      }
  }
}
