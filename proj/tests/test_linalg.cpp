#include "mxinv/linalg.hpp"

#include <omp.h>

#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace mxinv;

namespace {

Mat random_mat(const GFPtr& f, size_t r, size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<uint32_t> d(0, f->q() - 1);
  Mat m(f, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  auto f3 = GF::make(3, 1);
  Mat id = Mat::identity(f3, 4);
  auto r = rref(id);
  CHECK(r.m == id);
  CHECK(r.pivots == std::vector<size_t>{0, 1, 2, 3});

  // the 4x4 matrix of the shear action for c=1 over GF(3), minus identity
  Mat d1 = Mat::from_rows(f3, {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}});
  Mat diff(f3, 4, 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) diff.at(i, j) = f3->sub(d1.at(i, j), i == j ? 1 : 0);
  CHECK(rank(diff) == 2);

  Mat zero(f3, 3, 5);
  auto rz = rref(zero);
  CHECK(rz.m == zero);
  CHECK(rz.rank() == 0);
}

TEST_CASE("nullspace") {
  auto f5 = GF::make(5, 1);
  CHECK(nullspace_basis(Mat::identity(f5, 4)).empty());

  auto f2 = GF::make(2, 1);
  Mat ones = Mat::from_rows(f2, {{1, 1, 1, 1}});
  auto ns = nullspace_basis(ones);
  CHECK(ns.size() == 3);

  std::mt19937 rng(5);
  for (int it = 0; it < 30; ++it) {
    Mat m = random_mat(f5, 6, 8, rng);
    auto basis = nullspace_basis(m);
    CHECK(rank(m) + basis.size() == m.cols());  // rank-nullity
    for (auto& v : basis)
      for (uint32_t x : mat_vec(m, v)) CHECK(x == 0);
  }
}

TEST_CASE("rref idempotence and serial agreement") {
  std::mt19937 rng(17);
  for (uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    auto [p, s] = factor_prime_power(q);
    auto f = GF::make(p, s);
    for (int it = 0; it < 20; ++it) {
      Mat m = random_mat(f, 5 + it % 4, 7, rng);
      auto r1 = rref(m);
      auto r2 = rref(r1.m);
      CHECK(r1.m == r2.m);
      CHECK(r1.pivots == r2.pivots);
      auto rs = rref_serial(m);
      CHECK(r1.m == rs.m);
      CHECK(r1.pivots == rs.pivots);
    }
  }
}

TEST_CASE("parallel elimination is deterministic across thread counts") {
  std::mt19937 rng(23);
  auto f = GF::make(7, 1);
  Mat m = random_mat(f, 120, 90, rng);
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  auto r1 = rref(m);
  omp_set_num_threads(2);
  auto r2 = rref(m);
  omp_set_num_threads(saved);
  CHECK(r1.m == r2.m);
  CHECK(r1.pivots == r2.pivots);
}

TEST_CASE("solve") {
  auto f5 = GF::make(5, 1);
  Mat id = Mat::identity(f5, 3);
  std::vector<uint32_t> b{1, 2, 3};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Mat bad = Mat::from_rows(f5, {{0, 0}, {0, 0}});
  CHECK(!solve(bad, std::vector<uint32_t>{1, 0}).has_value());
  CHECK_THROWS_AS(solve(bad, std::vector<uint32_t>{1, 0, 0}), std::invalid_argument);

  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    Mat m = random_mat(f5, 6, 4, rng);
    std::vector<uint32_t> want(4);
    std::uniform_int_distribution<uint32_t> d(0, 4);
    for (auto& v : want) v = d(rng);
    auto rhs = mat_vec(m, want);
    auto got = solve(m, rhs);
    REQUIRE(got.has_value());
    CHECK(mat_vec(m, *got) == rhs);  // some solution, verified
  }
}

TEST_CASE("stacking") {
  auto f3 = GF::make(3, 1);
  std::mt19937 rng(41);
  Mat m = random_mat(f3, 4, 6, rng);
  CHECK(stack_rows({m}) == m);

  Mat mm = stack_rows({m, m});
  CHECK(mm.rows() == 8);
  CHECK(nullspace_basis(mm).size() == nullspace_basis(m).size());

  Mat other = random_mat(f3, 3, 6, rng);
  Mat st = stack_rows({m, other});
  // nullspace of the stack = intersection of nullspaces
  auto ns = nullspace_basis(st);
  for (auto& v : ns) {
    for (uint32_t x : mat_vec(m, v)) CHECK(x == 0);
    for (uint32_t x : mat_vec(other, v)) CHECK(x == 0);
  }
  CHECK_THROWS_AS(stack_rows({m, random_mat(f3, 2, 5, rng)}), std::invalid_argument);
}

TEST_CASE("inverse") {
  auto f7 = GF::make(7, 1);
  std::mt19937 rng(53);
  int found = 0;
  while (found < 10) {
    Mat m = random_mat(f7, 4, 4, rng);
    if (rank(m) < 4) continue;
    ++found;
    Mat inv = inverse(m);
    CHECK(mat_mul(m, inv) == Mat::identity(f7, 4));
    CHECK(mat_mul(inv, m) == Mat::identity(f7, 4));
  }
  Mat sing(f7, 2, 2);
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}
