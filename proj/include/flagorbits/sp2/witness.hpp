#pragma once

#include <string>
#include <vector>

#include "flagorbits/sp2/classify.hpp"

namespace flagorbits::sp2 {

/// Which codimension-one stratum pair of the boundary of the
/// Akhiezer-Gindikin domain the base point sits on: Plus means
/// (c_beta1-stratum, interior), Minus the conjugate-mirrored pair.
enum class BoundarySide { Plus, Minus };

/// Canonical representative of the stratum pair at parameter s2 in
/// (-pi/4, pi/4). The representative is taken inside N-bar (the unipotent
/// radical opposite to Q), so that the U_- side plane stays interior:
/// Plus gives I + E31 + tan(s2) E42 (the N-bar factors of c_beta1 and
/// t2(s2)); Minus its conjugate with respect to the real form. Asserts the
/// stratum pair (1, interior) resp. (interior, 1).
Mat boundary_point(BoundarySide side, double s2);

/// The intersection claims of the Sp(2,R) worked example. Sources are
/// K_C-orbits; targets are either a single G_R-orbit or the closure set
/// {V1 in C0} / {V2 in C0}.
enum class ClaimTarget { OrbitS8, OrbitS9, OrbitSop, ClosureS7, ClosureS10 };

struct Claim {
  std::string name;        // "3.1" ... "3.5", "r3.1a..c", "p3.2a", "p3.2b"
  OrbitIndex source;       // K_C-orbit moved by x
  ClaimTarget target;
  BoundarySide side;
  /// G_R-orbits a successful witness may classify to.
  std::vector<OrbitIndex> allowed_gr;
};

const std::vector<Claim>& all_claims();
const Claim& claim_by_name(const std::string& name);

struct SearchOptions {
  std::uint64_t seed = 12345;
  double s2 = 0.0;
  int starts = 32;
  int budget = 2000;       // function evaluations per start
  double tol = 1e-6;       // success: violation below this
  double margin_floor = 1e-3;
};

struct Witness {
  Mat k;                          // 2x2 GL(2,C) parameter
  double violation = 0.0;         // sum of squared residuals
  std::vector<double> margins;    // strict inequalities of the target
  int start_index = -1;
  long long evaluations = 0;
  /// Classification of the witness flag; empty when the witness sits too
  /// close to an orbit boundary inside a closure target (e.g. between
  /// S'10 and S'op) for the classifier's ambiguity band.
  std::optional<OrbitIndex> classified_gr;
  Flag4 flag;
};

/// Multi-start Nelder-Mead over the 8 real parameters of M (k = exp M)
/// minimizing the target's equality residuals on the flag of
/// x . khat . g_source. Deterministic for a fixed seed: the reported
/// witness is the best feasible start (ties by start index). Throws
/// NotFoundError when no start meets the thresholds.
Witness intersection_search(const Claim& claim, const SearchOptions& opt = {});

/// Violation and margins of a specific k for a claim (used by tests and by
/// the analytic-witness cross-checks).
std::pair<double, std::vector<double>> claim_violation(const Claim& claim,
                                                       double s2,
                                                       const Mat& k);

}  // namespace flagorbits::sp2
