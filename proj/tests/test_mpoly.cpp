#include "mxinv/mpoly.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace mxinv;

namespace {

Poly x(const GFPtr& f, size_t i) { return Poly::variable(f, i - 1); }

// independent brute-force product: term-by-term into an exponent map,
// no use of Poly::operator*
Poly slow_mul(const Poly& a, const Poly& b) {
  const GFPtr& f = a.field();
  std::map<std::array<uint16_t, 4>, uint32_t> acc;
  for (auto& ta : a.terms())
    for (auto& tb : b.terms()) {
      std::array<uint16_t, 4> e;
      for (size_t i = 0; i < 4; ++i) e[i] = uint16_t(ta.m.e[i] + tb.m.e[i]);
      acc[e] = f->add(acc[e], f->mul(ta.c, tb.c));
    }
  std::vector<Term> ts;
  for (auto& [e, c] : acc)
    if (c) ts.push_back({Monomial{e}, c});
  return Poly::from_terms(f, std::move(ts));
}

Poly random_poly(const GFPtr& f, std::mt19937& rng, int max_terms = 6, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<uint32_t> coef(0, f->q() - 1);
  std::vector<Term> ts;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m{{uint16_t(exp(rng)), uint16_t(exp(rng)), uint16_t(exp(rng)), uint16_t(exp(rng))}};
    ts.push_back({m, coef(rng) % f->q()});
  }
  return Poly::from_terms(f, std::move(ts));
}

LinearSub random_sub(const GFPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<uint32_t> coef(0, f->q() - 1);
  LinearSub s{f, {}};
  for (auto& row : s.m)
    for (auto& v : row) v = coef(rng);
  return s;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  auto f5 = GF::make(5, 1);
  CHECK((x(f5, 1) + x(f5, 2)) + (-x(f5, 2)) == x(f5, 1));

  // over GF(3): (x3 - x1)(x3 - 2x1) x3 = x3^3 - x1^2 x3
  auto f3 = GF::make(3, 1);
  Poly lhs = (x(f3, 3) - x(f3, 1)) * (x(f3, 3) - x(f3, 1).scaled(2)) * x(f3, 3);
  Poly zeta = Poly::parse(f3, "x3^3 + 2*x1^2*x3");
  CHECK(lhs == zeta);

  // (x1 x4 - x2 x3)^2 over GF(5): three monomials survive collection
  Poly f3det = x(f5, 1) * x(f5, 4) - x(f5, 2) * x(f5, 3);
  Poly sq = f3det * f3det;
  CHECK(sq == slow_mul(f3det, f3det));
  CHECK(sq.term_count() == 3);

  CHECK_THROWS_AS(x(f5, 1) + x(f3, 1), std::invalid_argument);
}

TEST_CASE("substitution formulas") {
  auto f5 = GF::make(5, 1);
  // delta_c with c=2: x2 |-> x2 - 2 x1
  LinearSub s = LinearSub::identity(f5);
  s.m[0][1] = f5->neg(2);
  s.m[0][2] = f5->neg(2);
  s.m[0][3] = f5->mul(2, 2);
  s.m[2][3] = f5->neg(2);
  s.m[1][3] = f5->neg(2);
  CHECK(x(f5, 2).substituted(s) == x(f5, 2) - x(f5, 1).scaled(2));

  // identity substitution fixes everything
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    Poly p = random_poly(f5, rng);
    CHECK(p.substituted(LinearSub::identity(f5)) == p);
  }

  // tau: x1<->x4, x2 |-> -x3, x3 |-> -x2 fixes the determinant
  LinearSub tau{f5, {}};
  tau.m[3][0] = 1;
  tau.m[2][1] = f5->neg(1);
  tau.m[1][2] = f5->neg(1);
  tau.m[0][3] = 1;
  Poly det = x(f5, 1) * x(f5, 4) - x(f5, 2) * x(f5, 3);
  CHECK(det.substituted(tau) == det);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(42);
  for (uint32_t q : {3u, 5u, 9u}) {
    auto [p, s] = factor_prime_power(q);
    auto f = GF::make(p, s);
    for (int it = 0; it < 30; ++it) {
      Poly a = random_poly(f, rng), b = random_poly(f, rng);
      LinearSub sub = random_sub(f, rng);
      CHECK((a + b).substituted(sub) == a.substituted(sub) + b.substituted(sub));
      CHECK((a * b).substituted(sub) == a.substituted(sub) * b.substituted(sub));
      CHECK(slow_mul(a, b) == a * b);
    }
  }
}

TEST_CASE("substitution composes via matrix product") {
  // fixed convention: substituting A then B equals substituting B*A
  std::mt19937 rng(11);
  auto f = GF::make(5, 1);
  for (int it = 0; it < 25; ++it) {
    Poly p = random_poly(f, rng);
    LinearSub a = random_sub(f, rng), b = random_sub(f, rng);
    LinearSub ba{f, {}};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        uint32_t acc = 0;
        for (size_t k = 0; k < 4; ++k) acc = f->add(acc, f->mul(b.m[i][k], a.m[k][j]));
        ba.m[i][j] = acc;
      }
    CHECK(p.substituted(a).substituted(b) == p.substituted(ba));
  }
}

TEST_CASE("homogeneity is preserved by linear substitution") {
  std::mt19937 rng(3);
  auto f = GF::make(3, 1);
  for (int it = 0; it < 30; ++it) {
    std::uniform_int_distribution<uint32_t> dd(0, 4);
    uint32_t d = dd(rng);
    auto basis = monomials_of_degree(d);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<uint32_t> coef(1, f->q() - 1);
    std::vector<Term> ts;
    for (int k = 0; k < 4; ++k) ts.push_back({basis[pick(rng)], coef(rng)});
    Poly p = Poly::from_terms(f, std::move(ts));
    Poly q = p.substituted(random_sub(f, rng));
    CHECK(q.homogeneous_of(d));
  }
}

TEST_CASE("graded monomial enumeration") {
  auto d0 = monomials_of_degree(0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0] == Monomial::one());

  auto d1 = monomials_of_degree(1);
  REQUIRE(d1.size() == 4);
  for (size_t i = 0; i < 4; ++i) CHECK(d1[i] == Monomial::variable(i));

  CHECK(monomials_of_degree(3).size() == 20);

  for (uint32_t d = 0; d <= 10; ++d) {
    auto ms = monomials_of_degree(d);
    CHECK(ms.size() == (d + 1) * (d + 2) * (d + 3) / 6);
    std::set<uint64_t> keys;
    for (auto& m : ms) {
      CHECK(m.degree() == d);
      keys.insert(m.key());
    }
    CHECK(keys.size() == ms.size());
    // descending lex
    for (size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1].key() > ms[i].key());
  }
}

TEST_CASE("coefficient vectors") {
  auto f5 = GF::make(5, 1);
  Poly f2 = x(f5, 2) - x(f5, 3);
  auto v = coefficient_vector(f2, 1);
  CHECK(v == std::vector<uint32_t>{0, 1, 4, 0});

  CHECK(coefficient_vector(Poly::zero(f5), 2) == std::vector<uint32_t>(10, 0));

  // g0 at degree q+1 over GF(3) has exactly 4 nonzero coordinates
  auto f3 = GF::make(3, 1);
  Poly g0 = Poly::parse(f3, "x1^3*x4 + x1*x4^3 + 2*x2^3*x3 + 2*x2*x3^3");
  auto w = coefficient_vector(g0, 4);
  int nonzero = 0;
  for (uint32_t c : w) nonzero += (c != 0);
  CHECK(nonzero == 4);

  CHECK_THROWS_AS(coefficient_vector(f2 + Poly::constant(f5, 1), 1), std::invalid_argument);

  DegreeBasis basis(1);
  CHECK(poly_from_vector(f5, v, basis) == f2);
}

TEST_CASE("parse and format") {
  auto f5 = GF::make(5, 1);
  CHECK(Poly::parse(f5, "x2 - x3") == x(f5, 2) - x(f5, 3));
  CHECK(Poly::parse(f5, " x2   -x3 ") == x(f5, 2) - x(f5, 3));

  CHECK_THROWS_AS(Poly::parse(f5, "x1^70000"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse(f5, "x5"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse(f5, "7*x1"), std::invalid_argument);  // coefficient outside field
  CHECK_THROWS_AS(Poly::parse(f5, "x1 + + x2"), std::invalid_argument);
  CHECK_THROWS_AS(Poly::parse(f5, ""), std::invalid_argument);

  CHECK(Poly::zero(f5).str() == "0");
  CHECK(Poly::parse(f5, "0") == Poly::zero(f5));
  CHECK((x(f5, 1) * x(f5, 1).scaled(3)).str() == "3*x1^2");

  // extension-field coefficients use bracket syntax
  auto f9 = GF::make(3, 2);
  Poly p9 = Poly::parse(f9, "[0,1]*x1^2 + [1,2]*x4 + 2");
  CHECK(p9.coeff(Monomial{{2, 0, 0, 0}}) == f9->from_coeffs({0, 1}));
  CHECK(Poly::parse(f9, p9.str()) == p9);

  // round-trip property over several fields
  std::mt19937 rng(99);
  for (uint32_t q : {3u, 5u, 9u, 4u}) {
    auto [pp, ss] = factor_prime_power(q);
    auto f = GF::make(pp, ss);
    for (int it = 0; it < 40; ++it) {
      Poly p = random_poly(f, rng);
      CHECK(Poly::parse(f, p.str()) == p);
    }
  }
}

TEST_CASE("monomial overflow is a hard error") {
  Monomial big{{60000, 0, 0, 0}};
  CHECK_THROWS_AS(big.times(big), std::overflow_error);
}
