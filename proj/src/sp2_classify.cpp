#include "flagorbits/sp2/classify.hpp"

#include <cmath>

namespace flagorbits::sp2 {

namespace {

cplx herm(const Mat& u, const Mat& v) {
  // (u, v) = conj(u1)v1 + conj(u2)v2 - conj(u3)v3 - conj(u4)v4.
  cplx s{};
  for (int i = 0; i < 4; ++i) {
    double sign = i < 2 ? 1.0 : -1.0;
    s += sign * std::conj(u(i, 0)) * v(i, 0);
  }
  return s;
}

Mat normalized(const Mat& v) {
  double n = v.frobenius();
  if (n < 1e-300) throw std::invalid_argument("zero vector");
  return cplx{1.0 / n, 0.0} * v;
}

Mat u_plus_basis() {
  Mat m(4, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  return m;
}

Mat u_minus_basis() {
  Mat m(4, 2);
  m(2, 0) = 1.0;
  m(3, 1) = 1.0;
  return m;
}

/// dim of the intersection of two column spans (columns orthonormalized).
int intersection_dim(const Mat& a, const Mat& b, const ClassifierParams& p) {
  Mat stacked = hcat(orthonormal_columns(a), orthonormal_columns(b));
  int rank = rank_with_gap(stacked, p.tol, p.gap);
  return a.cols() + b.cols() - rank;
}

/// Three-way zero test for a scalar that is O(1) at generic points:
/// 0 below tol, 1 above tol*gap, Degenerate in between.
int nonzero_with_gap(double value, const ClassifierParams& p,
                     const char* what) {
  if (value < p.tol) return 0;
  if (value >= p.tol * p.gap) return 1;
  throw DegenerateError(std::string(what) + " ambiguous: " +
                        std::to_string(value));
}

enum class LineClass { Pos, Neg, NullSpecial, NullGeneric };

/// Classifies a line against the Hermitian form: definite sign, or null
/// with the v^J = v^perp test (stacked covectors have rank 1 exactly on
/// C0^s).
LineClass classify_line(const Mat& v_raw, const ClassifierParams& p) {
  Mat v = normalized(v_raw);
  double form_value = herm(v, v).real();
  if (nonzero_with_gap(std::abs(form_value), p, "line form value")) {
    return form_value > 0 ? LineClass::Pos : LineClass::Neg;
  }
  // Null line: compare the symplectic and Hermitian orthogonal hyperplanes.
  // Rows: (v^T J) and (v^dagger H).
  Mat rows(2, 4);
  rows(0, 0) = v(2, 0);
  rows(0, 1) = v(3, 0);
  rows(0, 2) = -v(0, 0);
  rows(0, 3) = -v(1, 0);
  for (int i = 0; i < 4; ++i) {
    double sign = i < 2 ? 1.0 : -1.0;
    rows(1, i) = sign * std::conj(v(i, 0));
  }
  std::vector<double> sv = singular_values(rows);
  int rank = nonzero_with_gap(sv[1] / sv[0], p, "hyperplane coincidence") + 1;
  return rank == 1 ? LineClass::NullSpecial : LineClass::NullGeneric;
}

}  // namespace

Flag4 Flag4::make(Mat v1, Mat v2, double tol) {
  if (v1.rows() != 4 || v1.cols() != 1 || v2.rows() != 4 || v2.cols() != 2)
    throw std::invalid_argument("Flag4: expected 4x1 and 4x2");
  if (v1.frobenius() < tol) throw std::invalid_argument("Flag4: zero V1");
  Mat j = symplectic_form();
  Mat iso = v2.transpose() * j * v2;
  if (iso.max_abs() > tol * std::max(1.0, v2.frobenius() * v2.frobenius()))
    throw std::invalid_argument("Flag4: V2 is not isotropic");
  Mat q = orthonormal_columns(v2);  // also certifies rank 2
  // v1 must lie in the span of V2.
  Mat res = normalized(v1);
  for (int c = 0; c < 2; ++c) {
    cplx proj{};
    for (int r = 0; r < 4; ++r) proj += std::conj(q(r, c)) * res(r, 0);
    for (int r = 0; r < 4; ++r) res(r, 0) -= proj * q(r, c);
  }
  if (res.frobenius() > 1e-8)
    throw std::invalid_argument("Flag4: V1 is not contained in V2");
  Flag4 f;
  f.v1 = std::move(v1);
  f.v2 = std::move(v2);
  return f;
}

Flag4 flag_of(const Mat& g) {
  return Flag4::make(g.col(0), g.cols_range(0, 2));
}

GramSignature gram_signature(const Mat& basis, double tol, double gap,
                             int form_sign) {
  Mat q = orthonormal_columns(basis);
  const int k = q.cols();
  Mat gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      gram(i, j) = static_cast<double>(form_sign) * herm(q.col(i), q.col(j));
  std::vector<double> eig = hermitian_eigenvalues(gram);
  GramSignature sig;
  double scale = 0;
  for (double e : eig) scale = std::max(scale, std::abs(e));
  if (scale == 0) {
    sig.z = k;
    return sig;
  }
  double cutoff = tol;  // eigenvalues are O(1) for orthonormal bases
  double smallest_kept = 0, largest_zeroed = 0;
  for (double e : eig) {
    if (std::abs(e) < cutoff) {
      ++sig.z;
      largest_zeroed = std::max(largest_zeroed, std::abs(e));
    } else {
      e > 0 ? ++sig.p : ++sig.q;
      smallest_kept = smallest_kept == 0
                          ? std::abs(e)
                          : std::min(smallest_kept, std::abs(e));
    }
  }
  if (sig.z > 0 && sig.z < k && largest_zeroed > 0 &&
      smallest_kept / largest_zeroed < gap)
    throw DegenerateError("Gram signature ambiguous near zero");
  return sig;
}

OrbitIndex classify_kc(const Flag4& f, const ClassifierParams& p) {
  Mat up = u_plus_basis(), um = u_minus_basis();
  int d2p = intersection_dim(f.v2, up, p);
  int d2m = intersection_dim(f.v2, um, p);
  if (d2p == 2) return OrbitIndex::S1;
  if (d2m == 2) return OrbitIndex::S2;
  int d1p = 3 - rank_with_gap(hcat(normalized(f.v1), up), p.tol, p.gap);
  int d1m = 3 - rank_with_gap(hcat(normalized(f.v1), um), p.tol, p.gap);
  if (d2p == 1 && d2m == 1) {
    if (d1p == 1) return OrbitIndex::S3;
    if (d1m == 1) return OrbitIndex::S4;
    return OrbitIndex::S7;
  }
  if (d2p == 1 && d2m == 0)
    return d1p == 1 ? OrbitIndex::S5 : OrbitIndex::S8;
  if (d2p == 0 && d2m == 1)
    return d1m == 1 ? OrbitIndex::S6 : OrbitIndex::S9;
  // V2 meets neither U+ nor U-: S10 vs Sop via t(v) = v^T J tau(v).
  Mat v = normalized(f.v1);
  cplx tv = 2.0 * (v(0, 0) * v(2, 0) + v(1, 0) * v(3, 0));
  return nonzero_with_gap(std::abs(tv), p, "S10/Sop invariant")
             ? OrbitIndex::Sop
             : OrbitIndex::S10;
}

OrbitIndex classify_gr(const Flag4& f, const ClassifierParams& p) {
  LineClass line = classify_line(f.v1, p);
  GramSignature sig = gram_signature(f.v2, p.tol, p.gap);
  switch (line) {
    case LineClass::Pos:
      if (sig.p == 2 && sig.q == 0 && sig.z == 0) return OrbitIndex::S1;
      if (sig.p == 1 && sig.q == 1) return OrbitIndex::S3;
      if (sig.p == 1 && sig.z == 1) return OrbitIndex::S5;
      break;
    case LineClass::Neg:
      if (sig.q == 2 && sig.p == 0 && sig.z == 0) return OrbitIndex::S2;
      if (sig.p == 1 && sig.q == 1) return OrbitIndex::S4;
      if (sig.q == 1 && sig.z == 1) return OrbitIndex::S6;
      break;
    case LineClass::NullSpecial:
      if (sig.p == 1 && sig.z == 1) return OrbitIndex::S8;
      if (sig.q == 1 && sig.z == 1) return OrbitIndex::S9;
      if (sig.z == 2) return OrbitIndex::Sop;
      break;
    case LineClass::NullGeneric:
      if (sig.p == 1 && sig.q == 1) return OrbitIndex::S7;
      if (sig.z == 2) return OrbitIndex::S10;
      break;
  }
  throw DegenerateError("G_R classification: inconsistent line/plane data");
}

std::optional<int> stratum_of_plane(const Mat& plane, int form_sign,
                                    const ClassifierParams& p) {
  GramSignature sig = gram_signature(plane, p.tol, p.gap, form_sign);
  if (sig.p == 2) return 0;
  if (sig.p == 1 && sig.z == 1) return 1;
  if (sig.z == 2) return 2;
  return std::nullopt;
}

DualityReport verify_duality_table() {
  DualityReport report;
  for (OrbitIndex s : kAllOrbits) {
    Flag4 f = flag_of(representative(s));
    DualityEntry e;
    e.expected = s;
    e.got_kc = classify_kc(f);
    e.got_gr = classify_gr(f);
    e.ok = e.got_kc == s && e.got_gr == s;
    report.all_ok = report.all_ok && e.ok;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace flagorbits::sp2
