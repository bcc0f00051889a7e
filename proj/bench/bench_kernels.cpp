// Compares the OpenMP kernels against their serial references:
//   - reduced row echelon form over GF(q)
//   - induced graded-action matrix construction
// Usage: bench_kernels [q] [max_degree]

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <random>

#include "mxinv/groups.hpp"
#include "mxinv/structure.hpp"

using namespace mxinv;

namespace {

Mat random_mat(const GFPtr& f, size_t r, size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<uint32_t> d(0, f->q() - 1);
  Mat m(f, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

template <typename F>
double time_once(F&& fn) {
  double t0 = omp_get_wtime();
  fn();
  return omp_get_wtime() - t0;
}

}  // namespace

int main(int argc, char** argv) {
  const uint32_t q = argc > 1 ? uint32_t(std::atoi(argv[1])) : 5;
  const uint32_t max_degree = argc > 2 ? uint32_t(std::atoi(argv[2])) : 14;
  auto [p, s] = factor_prime_power(q);
  auto f = GF::make(p, s);
  std::mt19937 rng(12345);

  std::printf("kernel benchmarks over GF(%u), %d threads\n", q, omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "case", "serial[s]", "openmp[s]", "speedup");

  for (size_t n : {256, 512, 1024}) {
    Mat m = random_mat(f, n + n / 2, n, rng);
    RrefResult a = rref_serial(m);
    double ts = time_once([&] { a = rref_serial(m); });
    RrefResult b = rref(m);
    double tp = time_once([&] { b = rref(m); });
    if (!(a.m == b.m)) {
      std::fprintf(stderr, "kernel mismatch!\n");
      return 1;
    }
    std::printf("rref %4zux%-4zu                     %10.4f %10.4f %7.2fx\n", n + n / 2, n, ts, tp,
                ts / tp);
  }

  auto spec = GroupSpec::make(GroupName::SL2, f);
  for (uint32_t d = max_degree / 2; d <= max_degree; d += (max_degree + 1) / 2) {
    LinearSub sub = dual_action(spec.generators().back());
    Mat a = induced_degree_matrix_ref(sub, d);
    double ts = time_once([&] { a = induced_degree_matrix_ref(sub, d); });
    Mat b = induced_degree_matrix(sub, d);
    double tp = time_once([&] { b = induced_degree_matrix(sub, d); });
    if (!(a == b)) {
      std::fprintf(stderr, "kernel mismatch!\n");
      return 1;
    }
    std::printf("induced matrix d=%-2u (%5zu cols)   %10.4f %10.4f %7.2fx\n", d, a.cols(), ts, tp,
                ts / tp);
  }

  // one end-to-end graded dimension, dominated by the elimination kernel
  double tg = time_once([&] { graded_invariant_dimension(spec, max_degree); });
  std::printf("graded dimension d=%-2u              %10s %10.4f\n", max_degree, "-", tg);
  return 0;
}
