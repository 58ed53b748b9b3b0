#pragma once

#include <optional>
#include <vector>

#include "flagorbits/errors.hpp"
#include "flagorbits/root_system.hpp"
#include "flagorbits/weyl.hpp"

namespace flagorbits {

/// Which case analysis applies when building beta-systems: sp(l,R) (type C
/// with Z = (1,...,1)), so(2,2p-1) (type B with Z = (z,0,...,0)), or an
/// equal-root-length form where every root counts as long.
enum class RealForm { Sp, So2Odd, EqualLength };

std::string real_form_name(RealForm f);
RealForm real_form_from_string(const std::string& s);

/// Ordered strongly orthogonal system of noncompact positive roots; indexes
/// the Cayley-transform prefix of an orbit descriptor.
struct GammaSystem {
  std::vector<Root> gammas;

  /// Validates membership in Delta_n+ and pairwise strong orthogonality.
  static GammaSystem make(const RootSystem& rs, std::vector<Root> gammas);
  size_t size() const { return gammas.size(); }
};

/// Combinatorial descriptor of the double coset S0 = K_C c_{gamma_1} ...
/// c_{gamma_k} w B and its saturation S = S0 P_Theta. A boundary descriptor
/// produced by the short non-simple case additionally carries a c_beta
/// prefix, stored as a distinguished leading entry rather than multiplied
/// out.
struct OrbitDescriptor {
  GammaSystem gamma;
  std::optional<Root> beta_prefix;
  WeylElement w;
  std::vector<Root> theta;  // subset of the simple roots

  /// Prefix (if any) followed by the gammas; this is the Cayley word the
  /// descriptor denotes.
  std::vector<Root> effective_gammas() const;
  /// Re-reads the prefix as an ordinary leading gamma entry. Valid because
  /// the prefix is always a noncompact positive root strongly orthogonal to
  /// the remaining gammas; asserted here.
  OrbitDescriptor absorb_prefix(const RootSystem& rs) const;

  friend bool operator==(const OrbitDescriptor& a, const OrbitDescriptor& b) {
    return a.gamma.gammas == b.gamma.gammas && a.beta_prefix == b.beta_prefix &&
           a.w == b.w && a.theta == b.theta;
  }
};

OrbitDescriptor make_descriptor(const RootSystem& rs, std::vector<Root> gammas,
                                WeylElement w, std::vector<Root> theta);

/// Maximal strongly orthogonal system compatible with a gamma-system
/// (conditions (i)/(ii) of choose_beta_system).
struct BetaSystem {
  std::vector<Root> betas;
};

struct DeltaSplit {
  RootSubset delta1;
  RootSubset delta2;
  bool gamma1_is_long = true;
};

struct SeparationCertificate {
  Rat lhs;              // B(Z, sigma~ Z)
  Rat max_rhs;          // max over W_Theta x W_Theta of B(Z, w1 sigma w2 Z)
  Rat gap;              // lhs - max_rhs; positive iff the certificate holds
  Rat closed_form_gap;  // the predicted value of the gap
};

/// Smallest j (1-based) with gamma_j outside w Delta_Theta, or nullopt when
/// every gamma_j lies inside. The "all inside" direction forces the
/// saturation to be closed; the converse is taken as an axiom of the orbit
/// parametrization (it is how the parametrization is used, not re-proved
/// here).
std::optional<size_t> certify_nonclosed(const RootSystem& rs,
                                        const OrbitDescriptor& d);

/// Moves the first gamma outside w Delta_Theta to the front and, if needed,
/// replaces w by w_{gamma_1} w so that gamma_1 lands in w Delta+. Both moves
/// preserve the double coset. Throws NotNonClosedError when no gamma
/// qualifies (the coset is closed). Idempotent.
OrbitDescriptor normalize_descriptor(const RootSystem& rs,
                                     const OrbitDescriptor& d);

bool is_normalized(const RootSystem& rs, const OrbitDescriptor& d);

/// Maximal strongly orthogonal system satisfying condition (i) for long
/// gamma_1 (beta_1 = gamma_1, remaining gammas inside span(beta_2..)) or
/// (ii) for short gamma_1 (gamma_1 inside span(beta_1, beta_2), remaining
/// gammas inside span(beta_3..)). The gamma-system must be normalized
/// (gamma_1 first); an empty system yields the standard maximal completion.
BetaSystem choose_beta_system(const RootSystem& rs, const GammaSystem& g,
                              RealForm form);

/// Delta_1 = {+-gamma_1} (long case) or Delta ∩ (R beta_1 + R beta_2)
/// (short case, verified to be an 8-root two-length system); Delta_2 = the
/// roots orthogonal to Delta_1. Also asserts gamma_2.. lie in span(Delta_2).
DeltaSplit split_delta12(const RootSystem& rs, const BetaSystem& b,
                         const GammaSystem& g);

/// The boundary double coset S~1: drops gamma_1 when it is long or is the
/// simple short root of Delta_1+ = Delta_1 ∩ w Delta+; otherwise records the
/// long simple root of Delta_1+ as a c_beta prefix on the shortened gamma
/// list. Requires a normalized, certified non-closed descriptor.
OrbitDescriptor boundary_orbit_s1(const RootSystem& rs,
                                  const OrbitDescriptor& d, RealForm form);

/// The mirror boundary coset S~2, built by conjugating with respect to the
/// real form: bar(Gamma, w, Theta) = (Gamma, w w0, Theta) up to
/// normalization, then S~1, then bar again. The combinatorial normal form
/// of the conjugation is provisional; it is validated numerically against
/// the Sp(2,R) mirror claims.
OrbitDescriptor boundary_orbit_s2(const RootSystem& rs,
                                  const OrbitDescriptor& d, RealForm form);

/// w^-1 w_beta? w_{gamma_1} ... w_{gamma_k} w, the Weyl element whose
/// B-double coset is the image of the descriptor under the
/// involution-twisted map K_C g B -> B theta(g)^-1 g B; the prefix
/// contributes the w_beta factor right after w^-1.
WeylElement phi_image(const RootSystem& rs, const OrbitDescriptor& d);

/// Certifies the Weyl-group separation inequality for the pair (S, S~):
/// evaluates
/// B(Z, phi(S~) Z) against the brute-force maximum of B(Z, w1 phi(S) w2 Z)
/// over W_Theta x W_Theta, and the closed-form prediction
///   2 B(Y_g1, wZ)^2 / B(Y_g1, Y_g1)                   (no prefix)
///   minus 2 B(Y_beta, wZ)^2 / B(Y_beta, Y_beta)       (prefixed)
/// Z must be dominant and vanish on exactly Theta. Throws
/// CertificateFailure if the gap fails to be positive.
SeparationCertificate separation_inequality(const RootSystem& rs,
                                            const OrbitDescriptor& d,
                                            const OrbitDescriptor& d_tilde,
                                            const RatVec& z,
                                            const ParabolicSubgroup& w_theta);

/// All ordered strongly orthogonal tuples in Delta_n+ (nonempty), for
/// exhaustive sweeps at small rank.
std::vector<std::vector<Root>> enumerate_gamma_tuples(const RootSystem& rs,
                                                      size_t max_len);

}  // namespace flagorbits
