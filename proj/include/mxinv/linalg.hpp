#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mxinv/gf.hpp"

namespace mxinv {

/// Dense matrix over GF(q). Entries are packed field values; the field
/// handle is carried once per matrix.
class Mat {
public:
  Mat(GFPtr f, size_t rows, size_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(const GFPtr& f, size_t n);
  static Mat from_rows(const GFPtr& f, const std::vector<std::vector<uint32_t>>& rows);

  const GFPtr& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  uint32_t* row(size_t i) { return a_.data() + i * cols_; }
  const uint32_t* row(size_t i) const { return a_.data() + i * cols_; }
  const std::vector<uint32_t>& data() const { return a_; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  GFPtr f_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

struct RrefResult {
  Mat m;
  std::vector<size_t> pivots;  // pivot column per pivot row, ascending
  size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. Deterministic: the pivot for each column is the
/// first nonzero entry in row-scan order. The elimination loop over rows is
/// OpenMP-parallel; results are identical for any thread count because row
/// updates are disjoint.
RrefResult rref(const Mat& m);

/// Textbook serial elimination, kept as an independent reference for tests
/// and benchmarks.
RrefResult rref_serial(const Mat& m);

size_t rank(const Mat& m);

/// Basis of the right nullspace {v : m v = 0}, one vector per free column in
/// ascending column order. Every returned vector is checked to be
/// annihilated by m.
std::vector<std::vector<uint32_t>> nullspace_basis(const Mat& m);

/// Some x with m x = b, or nullopt when the system is inconsistent. The
/// returned x is verified by multiplication.
std::optional<std::vector<uint32_t>> solve(const Mat& m, std::span<const uint32_t> b);

/// Vertical concatenation; all blocks must share the column count.
Mat stack_rows(const std::vector<Mat>& blocks);

Mat mat_mul(const Mat& a, const Mat& b);
std::vector<uint32_t> mat_vec(const Mat& m, std::span<const uint32_t> v);
Mat transpose(const Mat& m);
/// Inverse of a square matrix; throws std::domain_error when singular.
Mat inverse(const Mat& m);

}  // namespace mxinv
