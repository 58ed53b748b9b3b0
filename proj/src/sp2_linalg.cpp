#include "flagorbits/sp2/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace flagorbits::sp2 {

Mat Mat::eye(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::col(int c) const {
  Mat v(rows_, 1);
  for (int r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

Mat Mat::cols_range(int c0, int c1) const {
  Mat v(rows_, c1 - c0);
  for (int r = 0; r < rows_; ++r)
    for (int c = c0; c < c1; ++c) v(r, c - c0) = (*this)(r, c);
  return v;
}

void Mat::set_col(int c, const Mat& v) {
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = v(r, 0);
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      cplx f = a(i, k);
      if (f == cplx{}) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += f * b(k, j);
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat out = a;
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat out = a;
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

Mat operator*(cplx s, const Mat& a) {
  Mat out = a;
  for (auto& x : out.a_) x *= s;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Mat Mat::dagger() const {
  Mat out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Mat Mat::conj() const {
  Mat out = *this;
  for (auto& x : out.a_) x = std::conj(x);
  return out;
}

double Mat::frobenius() const {
  double s = 0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double s = 0;
  for (const auto& x : a_) s = std::max(s, std::abs(x));
  return s;
}

Mat hcat(const Mat& a, const Mat& b) {
  Mat out(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Mat inverse(const Mat& m) {
  const int n = m.rows();
  Mat a = m, inv = Mat::eye(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
    if (std::abs(a(p, c)) < 1e-14)
      throw std::invalid_argument("inverse: singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    cplx d = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      cplx f = a(r, c);
      if (f == cplx{}) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Mat expm(const Mat& m) {
  int squarings = 0;
  double norm = m.max_abs() * m.rows();
  while (norm > 0.5 && squarings < 40) {
    norm *= 0.5;
    ++squarings;
  }
  Mat x = std::pow(0.5, squarings) * m;
  Mat term = Mat::eye(m.rows());
  Mat sum = term;
  for (int k = 1; k <= 20; ++k) {
    term = (cplx{1.0 / k, 0.0}) * (term * x);
    sum = sum + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

std::vector<double> hermitian_eigenvalues(Mat a) {
  const int n = a.rows();
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        cplx apq = a(p, q);
        double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        double app = a(p, p).real(), aqq = a(q, q).real();
        // Unitary rotation in the (p,q) plane annihilating a(p,q).
        double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
        cplx phase = apq / mag;
        double c = std::cos(theta), s = std::sin(theta);
        // Columns: new_p = c*e_p + s*conj(phase)... apply G^H A G with
        // G(p,p)=c, G(q,p)=s*conj(phase), G(p,q)=-s*phase, G(q,q)=c.
        for (int k = 0; k < n; ++k) {
          cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + s * std::conj(phase) * akq;
          a(k, q) = -s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + s * phase * aqk;
          a(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> singular_values(const Mat& m) {
  // One-sided Jacobi on columns: keeps high relative accuracy for tiny
  // singular values, which the Gram-matrix shortcut floors at
  // sqrt(machine eps) * sigma_max.
  Mat a = m.rows() >= m.cols() ? m : m.dagger();
  const int n = a.cols();
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool converged = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double aii = 0, ajj = 0;
        cplx aij{};
        for (int r = 0; r < a.rows(); ++r) {
          aii += std::norm(a(r, i));
          ajj += std::norm(a(r, j));
          aij += std::conj(a(r, i)) * a(r, j);
        }
        double mag = std::abs(aij);
        if (mag <= 1e-290 || mag <= 1e-15 * std::sqrt(aii * ajj)) continue;
        converged = false;
        double theta = 0.5 * std::atan2(2.0 * mag, aii - ajj);
        cplx phase = aij / mag;
        double c = std::cos(theta), s = std::sin(theta);
        for (int r = 0; r < a.rows(); ++r) {
          cplx ari = a(r, i), arj = a(r, j);
          a(r, i) = c * ari + s * std::conj(phase) * arj;
          a(r, j) = -s * phase * ari + c * arj;
        }
      }
    if (converged) break;
  }
  std::vector<double> sv(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double nrm = 0;
    for (int r = 0; r < a.rows(); ++r) nrm += std::norm(a(r, j));
    sv[j] = std::sqrt(nrm);
  }
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

int rank_with_gap(const Mat& m, double rel_cutoff, double min_gap) {
  std::vector<double> sv = singular_values(m);
  if (sv.empty() || sv[0] == 0.0) return 0;
  double cutoff = rel_cutoff * sv[0];
  int rank = 0;
  while (rank < static_cast<int>(sv.size()) && sv[rank] >= cutoff) ++rank;
  if (rank < static_cast<int>(sv.size())) {
    double largest_discarded = sv[rank];
    double smallest_retained = rank > 0 ? sv[rank - 1] : sv[0];
    if (largest_discarded > 0.0 &&
        smallest_retained / largest_discarded < min_gap)
      throw DegenerateError("rank decision is unstable: gap " +
                            std::to_string(smallest_retained /
                                           largest_discarded));
  }
  return rank;
}

Mat orthonormal_columns(const Mat& m) {
  Mat q = m;
  for (int c = 0; c < q.cols(); ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cplx proj{};
      for (int r = 0; r < q.rows(); ++r)
        proj += std::conj(q(r, prev)) * q(r, c);
      for (int r = 0; r < q.rows(); ++r) q(r, c) -= proj * q(r, prev);
    }
    double nrm = 0;
    for (int r = 0; r < q.rows(); ++r) nrm += std::norm(q(r, c));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12)
      throw std::invalid_argument("orthonormal_columns: dependent columns");
    for (int r = 0; r < q.rows(); ++r) q(r, c) /= nrm;
  }
  return q;
}

Mat orthonormal_complement(const Mat& m) {
  const int n = m.rows();
  Mat q = orthonormal_columns(m);
  Mat out(n, n - m.cols());
  int found = 0;
  for (int trial = 0; trial < n && found < out.cols(); ++trial) {
    Mat v(n, 1);
    v(trial, 0) = 1.0;
    for (int c = 0; c < q.cols(); ++c) {
      cplx proj{};
      for (int r = 0; r < n; ++r) proj += std::conj(q(r, c)) * v(r, 0);
      for (int r = 0; r < n; ++r) v(r, 0) -= proj * q(r, c);
    }
    for (int c = 0; c < found; ++c) {
      cplx proj{};
      for (int r = 0; r < n; ++r) proj += std::conj(out(r, c)) * v(r, 0);
      for (int r = 0; r < n; ++r) v(r, 0) -= proj * out(r, c);
    }
    double nrm = 0;
    for (int r = 0; r < n; ++r) nrm += std::norm(v(r, 0));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-6) continue;
    for (int r = 0; r < n; ++r) v(r, 0) /= nrm;
    out.set_col(found++, v);
  }
  if (found != out.cols())
    throw std::logic_error("orthonormal_complement: failed to complete basis");
  return out;
}

}  // namespace flagorbits::sp2
