#pragma once

#include <optional>
#include <vector>

#include "flagorbits/rational.hpp"

namespace flagorbits {

using RatMat = std::vector<RatVec>;  // row-major

/// Row-reduces a copy of m (Gauss-Jordan, exact pivots). Returns the rank;
/// if `reduced` is non-null the RREF is written there together with the
/// pivot column of each nonzero row.
inline int row_reduce(RatMat m, RatMat* reduced = nullptr,
                      std::vector<int>* pivots = nullptr) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  std::vector<int> piv;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    Rat inv = Rat(1) / m[rank][c];
    for (int j = 0; j < cols; ++j) m[rank][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (int j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    piv.push_back(c);
    ++rank;
  }
  if (reduced) *reduced = std::move(m);
  if (pivots) *pivots = std::move(piv);
  return rank;
}

inline int rat_rank(const RatMat& m) { return row_reduce(m); }

/// Coefficients c with sum_i c[i]*basis[i] == target, if target lies in the
/// span of `basis` (basis need not be independent; any representation is
/// returned with free coefficients zero).
inline std::optional<RatVec> coords_in_span(const std::vector<RatVec>& basis,
                                            const RatVec& target) {
  if (basis.empty())
    return std::all_of(target.begin(), target.end(),
                       [](const Rat& x) { return x.is_zero(); })
               ? std::optional<RatVec>(RatVec{})
               : std::nullopt;
  const size_t dim = target.size();
  const size_t k = basis.size();
  // Augmented system: columns are the basis vectors, last column the target.
  RatMat aug(dim, RatVec(k + 1));
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = target[i];
  }
  RatMat rref;
  std::vector<int> piv;
  row_reduce(aug, &rref, &piv);
  RatVec c(k, Rat(0));
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == static_cast<int>(k)) return std::nullopt;  // inconsistent
    c[piv[r]] = rref[r][k];
  }
  return c;
}

inline bool in_span(const std::vector<RatVec>& basis, const RatVec& target) {
  return coords_in_span(basis, target).has_value();
}

/// Solves the square system A x = b exactly; throws if A is singular.
inline RatVec solve_square(const RatMat& a, const RatVec& b) {
  const size_t n = a.size();
  RatMat aug(n, RatVec(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  RatMat rref;
  std::vector<int> piv;
  int rank = row_reduce(aug, &rref, &piv);
  if (rank < static_cast<int>(n) || (rank && piv.back() == static_cast<int>(n)))
    throw std::invalid_argument("solve_square: singular system");
  RatVec x(n, Rat(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = rref[r][n];
  return x;
}

}  // namespace flagorbits
