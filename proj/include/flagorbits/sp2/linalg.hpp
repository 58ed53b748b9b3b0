#pragma once

#include <complex>
#include <vector>

#include "flagorbits/errors.hpp"

namespace flagorbits::sp2 {

using cplx = std::complex<double>;

/// Small dense complex matrix, row-major. Everything here is at most 8x8.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat eye(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int r, int c) { return a_[r * cols_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[r * cols_ + c]; }

  Mat col(int c) const;
  Mat cols_range(int c0, int c1) const;  // [c0, c1)
  void set_col(int c, const Mat& v);

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(cplx s, const Mat& a);

  Mat transpose() const;
  Mat dagger() const;  // conjugate transpose
  Mat conj() const;

  double frobenius() const;
  double max_abs() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

/// Horizontal concatenation [a | b].
Mat hcat(const Mat& a, const Mat& b);

/// Gauss-Jordan inverse with partial pivoting; throws on singular input.
Mat inverse(const Mat& m);

/// Scaling-and-squaring Taylor exponential.
Mat expm(const Mat& m);

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi, ascending.
std::vector<double> hermitian_eigenvalues(Mat a);

/// Singular values, descending (via the Gram matrix of the smaller side).
std::vector<double> singular_values(const Mat& m);

/// Number of singular values at or above rel_cutoff * sigma_max. Requires
/// the retained/discarded groups to be separated by at least `min_gap`,
/// otherwise throws DegenerateError.
int rank_with_gap(const Mat& m, double rel_cutoff = 1e-8,
                  double min_gap = 1e3);

/// Modified Gram-Schmidt orthonormalization of the columns (assumed
/// independent).
Mat orthonormal_columns(const Mat& m);

/// An orthonormal basis of the orthogonal complement of the column span,
/// as columns.
Mat orthonormal_complement(const Mat& m);

}  // namespace flagorbits::sp2
