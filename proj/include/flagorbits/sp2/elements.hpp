#pragma once

#include <array>
#include <string>

#include "flagorbits/orbit_calculus.hpp"
#include "flagorbits/rng.hpp"
#include "flagorbits/sp2/linalg.hpp"

namespace flagorbits::sp2 {

/// The eleven K_C-orbit identities (dually the G_R-orbits).
enum class OrbitIndex {
  S1,
  S2,
  S3,
  S4,
  S5,
  S6,
  S7,
  S8,
  S9,
  S10,
  Sop
};

constexpr std::array<OrbitIndex, 11> kAllOrbits = {
    OrbitIndex::S1, OrbitIndex::S2, OrbitIndex::S3,  OrbitIndex::S4,
    OrbitIndex::S5, OrbitIndex::S6, OrbitIndex::S7,  OrbitIndex::S8,
    OrbitIndex::S9, OrbitIndex::S10, OrbitIndex::Sop};

std::string kc_name(OrbitIndex s);          // "S1" .. "S10", "Sop"
std::string gr_name(OrbitIndex s);          // "S'1" .. "S'op"
OrbitIndex orbit_from_string(std::string s);  // accepts "S1", "s10", "Sop"

/// The symplectic form matrix [[0, -I2], [I2, 0]].
Mat symplectic_form();
/// diag(1, 1, -1, -1): the Hermitian form of U(2,2).
Mat hermitian_form();

Mat t1(double s);
Mat t2(double s);
Mat c_beta1();
Mat c_beta2();
Mat w_beta1();
Mat w_beta2();
Mat c_delta();

/// Table representative of the orbit: e, w1w2, w2, w1, c2, c2w1, c_d w2, c1,
/// c1w2, c_d, c1c2.
Mat representative(OrbitIndex s);

bool is_symplectic(const Mat& g, double tol = 1e-10);
bool is_in_u22(const Mat& g, double tol = 1e-10);

/// Block-diagonal embedding diag(k, k^-T) of GL(2,C) into Sp(2,C).
Mat embed_gl2(const Mat& k);

/// exp of a random 2x2 complex matrix, embedded; covers the identity
/// component of K_C.
Mat random_kc(Rng& rng, double scale = 1.0);
/// Random element of the Borel of upper-triangular symplectic matrices.
Mat random_borel(Rng& rng, double scale = 0.5);
/// Random element of Sp(2,R) = Sp(2,C) ∩ U(2,2), via the real-form algebra.
Mat random_sp2r(Rng& rng, double scale = 0.5);
/// Random element of the parabolic P_1 (stabilizer of U+) or P_2
/// (stabilizer of C e_1).
Mat random_parabolic(Rng& rng, int index, double scale = 0.5);

/// Cayley transform matrix of a noncompact positive root of C_2
/// (2e1 -> t1(pi/4), 2e2 -> t2(pi/4), e1+e2 -> c_delta).
Mat cayley(const Root& gamma);

/// Torus-consistent matrix lift of a Weyl element of C_2, built from
/// generator words (t_j(pi/2) for the sign flips, the GL(2) swap for
/// e1-e2, c_delta^2 for e1+e2). Any representative differs by a torus
/// factor, which does not move the flag.
Mat lift_weyl(const WeylElement& w);

/// c_Gamma * w-hat for a C_2 orbit descriptor (prefix included).
Mat descriptor_matrix(const RootSystem& rs, const OrbitDescriptor& d);

}  // namespace flagorbits::sp2
