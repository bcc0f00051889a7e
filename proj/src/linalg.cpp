#include "mxinv/linalg.hpp"

#include <stdexcept>

namespace mxinv {

Mat Mat::identity(const GFPtr& f, size_t n) {
  Mat m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const GFPtr& f, const std::vector<std::vector<uint32_t>>& rows) {
  if (rows.empty()) return Mat(f, 0, 0);
  Mat m(f, rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged row lengths");
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

namespace {

// scale row r so the pivot becomes 1, then clear the pivot column from every
// other row; marked parallel when wide enough to pay off
template <bool Parallel>
void eliminate(Mat& m, size_t prow, size_t pcol) {
  const GF& F = *m.field();
  const size_t cols = m.cols(), rows = m.rows();
  uint32_t* pivot = m.row(prow);
  const uint32_t inv = F.inv(pivot[pcol]);
  if (inv != 1)
    for (size_t j = pcol; j < cols; ++j) pivot[j] = F.mul(pivot[j], inv);

#pragma omp parallel for schedule(static) if (Parallel && rows * cols > 4096)
  for (size_t i = 0; i < rows; ++i) {
    if (i == prow) continue;
    uint32_t* ri = m.row(i);
    const uint32_t factor = ri[pcol];
    if (factor == 0) continue;
    for (size_t j = pcol; j < cols; ++j)
      if (pivot[j] != 0) ri[j] = F.sub(ri[j], F.mul(factor, pivot[j]));
  }
}

template <bool Parallel>
RrefResult rref_impl(const Mat& input) {
  RrefResult r{input, {}};
  Mat& m = r.m;
  size_t prow = 0;
  for (size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    size_t found = m.rows();
    for (size_t i = prow; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        found = i;
        break;
      }
    if (found == m.rows()) continue;
    if (found != prow)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(prow, j), m.at(found, j));
    eliminate<Parallel>(m, prow, col);
    r.pivots.push_back(col);
    ++prow;
  }
  return r;
}

}  // namespace

RrefResult rref(const Mat& m) { return rref_impl<true>(m); }
RrefResult rref_serial(const Mat& m) { return rref_impl<false>(m); }

size_t rank(const Mat& m) { return rref(m).rank(); }

std::vector<std::vector<uint32_t>> nullspace_basis(const Mat& m) {
  const GF& F = *m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivots) is_pivot[c] = true;

  std::vector<std::vector<uint32_t>> basis;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<uint32_t> v(m.cols(), 0);
    v[free_col] = 1;
    for (size_t prow = 0; prow < r.pivots.size(); ++prow)
      v[r.pivots[prow]] = F.neg(r.m.at(prow, free_col));
    basis.push_back(std::move(v));
  }
  for (auto& v : basis) {
    auto residual = mat_vec(m, v);
    for (uint32_t x : residual)
      if (x != 0) throw std::logic_error("nullspace vector not annihilated");
  }
  return basis;
}

std::optional<std::vector<uint32_t>> solve(const Mat& m, std::span<const uint32_t> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  std::vector<uint32_t> x(m.cols(), 0);
  for (size_t prow = 0; prow < r.pivots.size(); ++prow)
    x[r.pivots[prow]] = r.m.at(prow, m.cols());
  auto check = mat_vec(m, x);
  for (size_t i = 0; i < b.size(); ++i)
    if (check[i] != b[i]) throw std::logic_error("solve verification failed");
  return x;
}

Mat stack_rows(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("nothing to stack");
  size_t cols = blocks[0].cols(), rows = 0;
  for (auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("stacked blocks have mismatched widths");
    rows += b.rows();
  }
  Mat m(blocks[0].field(), rows, cols);
  size_t r = 0;
  for (auto& b : blocks)
    for (size_t i = 0; i < b.rows(); ++i, ++r)
      for (size_t j = 0; j < cols; ++j) m.at(r, j) = b.at(i, j);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  check_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  const GF& F = *a.field();
  Mat r(a.field(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) r.at(i, j) = F.add(r.at(i, j), F.mul(aik, b.at(k, j)));
    }
  return r;
}

std::vector<uint32_t> mat_vec(const Mat& m, std::span<const uint32_t> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
  const GF& F = *m.field();
  std::vector<uint32_t> r(m.rows(), 0);
  for (size_t i = 0; i < m.rows(); ++i) {
    uint32_t acc = 0;
    const uint32_t* ri = m.row(i);
    for (size_t j = 0; j < m.cols(); ++j)
      if (ri[j] != 0 && v[j] != 0) acc = F.add(acc, F.mul(ri[j], v[j]));
    r[i] = acc;
  }
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.field(), m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
  return r;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Mat inv(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

}  // namespace mxinv
