#pragma once

#include <optional>
#include <string>

#include "flagorbits/sp2/elements.hpp"
#include "flagorbits/sp2/linalg.hpp"

namespace flagorbits::sp2 {

/// A point of the full flag manifold of Sp(2,C): a line inside a
/// symplectically isotropic plane in C^4.
struct Flag4 {
  Mat v1;  // 4x1, nonzero
  Mat v2;  // 4x2, rank 2, isotropic, v1 in the column span

  static Flag4 make(Mat v1, Mat v2, double tol = 1e-10);
};

/// gB -> (g C e1, g U+): first column and first two columns.
Flag4 flag_of(const Mat& g);

/// Signature (positive, negative, zero eigenvalue counts) of the U(2,2)
/// Hermitian form compressed to a subspace.
struct GramSignature {
  int p = 0, q = 0, z = 0;
};

/// Signature of the form restricted to the column span (columns are
/// orthonormalized first, so eigenvalue scales are O(1)). `form_sign`
/// flips the Hermitian form for the U_- side strata.
GramSignature gram_signature(const Mat& basis, double tol = 1e-8,
                             double gap = 1e3, int form_sign = +1);

struct ClassifierParams {
  double tol = 1e-8;  // relative singular-value / eigenvalue cutoff
  double gap = 1e3;   // required separation between retained and discarded
};

/// The K_C-orbit of a flag, decided from dim(V_i ∩ U_+-), plus the scalar
/// t(v) = v^T J tau(v) separating S10 from Sop. Throws DegenerateError in
/// ambiguity bands.
OrbitIndex classify_kc(const Flag4& f, const ClassifierParams& p = {});

/// The G_R-orbit of a flag, decided from the class of V_1 in
/// {C+, C-, C0^s, C0^r} and the Gram signature of V_2.
OrbitIndex classify_gr(const Flag4& f, const ClassifierParams& p = {});

/// Stratum of an isotropic plane inside (G_R Q)^cl: signature (2,0,0) -> 0,
/// (1,0,1) -> 1, (0,0,2) -> 2; anything else -> nullopt (outside). Only
/// meaningful for planes constructed inside the closure of G_R Q (resp. its
/// U_- mirror with form_sign = -1).
std::optional<int> stratum_of_plane(const Mat& plane, int form_sign = +1,
                                    const ClassifierParams& p = {});

struct DualityEntry {
  OrbitIndex expected;
  OrbitIndex got_kc;
  OrbitIndex got_gr;
  bool ok;
};

struct DualityReport {
  std::vector<DualityEntry> entries;
  bool all_ok = true;
};

/// Classifies the eleven table representatives on both sides and compares
/// with the table.
DualityReport verify_duality_table();

}  // namespace flagorbits::sp2
