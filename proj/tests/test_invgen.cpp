#include "mxinv/invgen.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace mxinv;

namespace {

Poly x(const GFPtr& f, size_t i) { return Poly::variable(f, i - 1); }

}  // namespace

TEST_CASE("orbits under the shear group") {
  auto f3 = GF::make(3, 1);
  auto u2 = GroupSpec::make(GroupName::U2, f3);

  auto orb = orbit(x(f3, 3), u2);
  REQUIRE(orb.size() == 3);
  std::set<Poly, PolyLess> want;
  for (uint32_t c = 0; c < 3; ++c) want.insert(x(f3, 3) - x(f3, 1).scaled(c));
  for (const Poly& p : orb) CHECK(want.count(p) == 1);

  Poly det = x(f3, 1) * x(f3, 4) - x(f3, 2) * x(f3, 3);
  CHECK(orbit(det, u2).size() == 1);

  auto f5 = GF::make(5, 1);
  auto u2_5 = GroupSpec::make(GroupName::U2, f5);
  CHECK(orbit(x(f5, 4), u2_5).size() == 5);
}

TEST_CASE("orbit products expand to the closed formulas") {
  for (uint32_t q : {3u, 5u}) {
    auto f = GF::make(q, 1);
    auto u2 = GroupSpec::make(GroupName::U2, f);

    // prod_c (x3 - c x1) = x3^q - x1^{q-1} x3
    Poly zeta = orbit_product(x(f, 3), u2);
    CHECK(zeta == x(f, 3).pow(q) - x(f, 1).pow(q - 1) * x(f, 3));
    CHECK(zeta == build_named("zeta", f).poly);

    // prod over the orbit of x2+x3 = (x2+x3)^q - (x2+x3) x1^{q-1}
    Poly f0 = orbit_product(x(f, 2) + x(f, 3), u2);
    CHECK(f0 == build_named("f0", f).poly);

    // an invariant is its own orbit product
    Poly det = build_named("f3", f).poly;
    CHECK(orbit_product(det, u2) == det);

    // f4 is the orbit product of x4
    CHECK(orbit_product(x(f, 4), u2) == build_named("f4", f).poly);
  }
}

TEST_CASE("named invariant bookkeeping") {
  auto f5 = GF::make(5, 1);

  // h(0) = f4
  CHECK(build_named("h", f5, f5->elem(0)).poly == build_named("f4", f5).poly);

  // g1 over GF(5) = h(2) h(3), of degree 10
  auto g1 = build_named("g1", f5);
  CHECK(g1.degree == 10);
  CHECK(g1.poly == build_named("h", f5, f5->elem(2)).poly * build_named("h", f5, f5->elem(3)).poly);

  auto f7 = GF::make(7, 1);
  CHECK(build_named("g2", f7).degree == 28);  // q(q+1)/2

  for (uint32_t q : {3u, 5u, 7u, 9u, 4u, 8u}) {
    auto [p, s] = factor_prime_power(q);
    auto f = GF::make(p, s);
    CHECK(build_named("f1", f).degree == 1);
    CHECK(build_named("f2", f).degree == 1);
    CHECK(build_named("f3", f).degree == 2);
    CHECK(build_named("f4", f).degree == q);
    CHECK(build_named("zeta", f).degree == q);
    CHECK(build_named("f0", f).degree == q);
    CHECK(build_named("g0", f).degree == q + 1);
    CHECK(build_named("k1", f).degree == q * (q - 1));
    if (p != 2) {
      CHECK(build_named("g1", f).degree == q * (q - 1) / 2);
      CHECK(build_named("g2", f).degree == q * (q + 1) / 2);
    } else {
      CHECK_THROWS_AS(build_named("g1", f), std::invalid_argument);
      CHECK_THROWS_AS(build_named("g2", f), std::invalid_argument);
    }
  }

  CHECK_THROWS_AS(build_named("nope", f5), std::invalid_argument);
  CHECK_THROWS_AS(build_named("h", f5), std::invalid_argument);
  CHECK_THROWS_AS(build_named("f4", f5, f5->elem(1)), std::invalid_argument);
}

TEST_CASE("degree-q invariants factor into q distinct shear-orbit forms") {
  for (uint32_t q : {3u, 5u, 9u}) {
    auto [p, s] = factor_prime_power(q);
    auto f = GF::make(p, s);
    // re-expand from the stated linear factors and compare
    for (uint32_t a : {0u, 1u}) {
      Poly prod = Poly::constant(f, 1);
      std::set<Poly, PolyLess> factors;
      for (uint32_t c = 0; c < q; ++c) {
        Poly l = shear_orbit_form(f, c, a);
        factors.insert(l);
        prod = prod * l;
      }
      CHECK(factors.size() == q);
      CHECK(prod == build_named("h", f, f->elem(a)).poly);
    }
  }
}

TEST_CASE("invariance verdicts") {
  auto f5 = GF::make(5, 1);
  auto sl2_5 = GroupSpec::make(GroupName::SL2, f5);
  CHECK(verify_invariant(build_named("f2", f5).poly, sl2_5).invariant);

  auto f3 = GF::make(3, 1);
  auto u2t_3 = GroupSpec::make(GroupName::U2Tilde, f3);
  auto zeta_check = verify_invariant(build_named("zeta", f3).poly, u2t_3);
  CHECK(!zeta_check.invariant);
  CHECK(zeta_check.witness == "alpha");
  CHECK(!zeta_check.difference.is_zero());

  CHECK(verify_invariant(Poly::constant(f5, 1), sl2_5).invariant);
}

TEST_CASE("declared invariants verify under their groups") {
  for (uint32_t q : {3u, 5u, 9u}) {
    auto [p, s] = factor_prime_power(q);
    auto f = GF::make(p, s);
    auto u2 = GroupSpec::make(GroupName::U2, f);
    for (const char* n : {"f1", "f2", "f3", "f4", "zeta", "f0"})
      CHECK(verify_invariant(build_named(n, f).poly, u2).invariant);
    for (uint32_t v = 0; v < q; ++v)
      CHECK(verify_invariant(build_named("h", f, f->elem(v)).poly, u2).invariant);
  }
  for (uint32_t q : {5u, 9u}) {
    auto [p, s] = factor_prime_power(q);
    auto f = GF::make(p, s);
    auto sl2 = GroupSpec::make(GroupName::SL2, f);
    for (const char* n : {"f2", "f3", "g0", "g1", "g2"})
      CHECK(verify_invariant(build_named(n, f).poly, sl2).invariant);
  }
  for (uint32_t q : {4u}) {
    auto [p, s] = factor_prime_power(q);
    auto f = GF::make(p, s);
    auto sl2 = GroupSpec::make(GroupName::SL2, f);
    for (const char* n : {"f2", "f3", "g0", "k1"})
      CHECK(verify_invariant(build_named(n, f).poly, sl2).invariant);
  }
}

TEST_CASE("g1 g2 = f0 k1 over odd fields") {
  for (uint32_t q : {3u, 5u}) {
    auto f = GF::make(q, 1);
    Poly lhs = build_named("g1", f).poly * build_named("g2", f).poly;
    Poly rhs = build_named("f0", f).poly * build_named("k1", f).poly;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("group listing contents") {
  auto f5 = GF::make(5, 1);
  auto named = named_for_group(GroupName::SL2, f5);
  REQUIRE(named.size() == 6);
  CHECK(named[0].name == "f2");
  CHECK(named[5].name == "k1");

  auto f4 = GF::make(2, 2);
  auto named4 = named_for_group(GroupName::SL2, f4);
  REQUIRE(named4.size() == 4);  // no g1, g2 in characteristic 2

  auto u2named = named_for_group(GroupName::U2, f5);
  CHECK(u2named.size() == 6 + 5);  // f1..f4, zeta, f0 and the h(a) family
}
