#pragma once

#include <string>
#include <vector>

#include "flagorbits/rational.hpp"

namespace flagorbits {

enum class Family { B, C };

std::string family_name(Family f);
Family family_from_string(const std::string& s);

/// A root in the orthonormal e-basis of the dual Cartan, exact coordinates.
struct Root {
  RatVec coords;

  friend bool operator==(const Root&, const Root&) = default;
  friend std::strong_ordering operator<=>(const Root& a, const Root& b) {
    size_t n = std::min(a.coords.size(), b.coords.size());
    for (size_t i = 0; i < n; ++i) {
      auto c = a.coords[i] <=> b.coords[i];
      if (c != 0) return c;
    }
    return a.coords.size() <=> b.coords.size();
  }
  Root operator-() const {
    Root r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
  }
  std::string str() const;  // "2e1", "e1-e2", ...
};

/// Parses root strings like "2e1", "e1+e2", "e1-e2", "-e1", "e2".
Root parse_root(const std::string& s, int rank);

enum class SubsetTag { NoncompactPositive, DeltaTheta, Delta1, Delta2, Custom };

struct RootSubset {
  std::vector<Root> members;  // sorted, unique
  SubsetTag tag = SubsetTag::Custom;

  bool contains(const Root& r) const;
};

/// Finite root system of type B_p or C_l in e-coordinates, with the standard
/// positive system, its simple roots, and the central element Z of the
/// Hermitian structure (pairing alpha(Z) is the dot product).
class RootSystem {
 public:
  /// Standard tables. Z must be dominant for the standard positive system
  /// (z1 >= z2 >= ... >= 0); rejected otherwise.
  static RootSystem build(Family family, int rank, RatVec z);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive() const { return positive_; }
  const std::vector<Root>& simple() const { return simple_; }
  const RatVec& z() const { return z_; }

  bool contains(const Root& r) const;
  bool is_positive(const Root& r) const;
  Rat pairing_with_z(const Root& r) const { return dot(r.coords, z_); }
  /// Long means maximal squared length in this system. Under the
  /// "equal length" convention every root of an ADE-type system is long;
  /// for the concrete B/C tables this distinguishes the two lengths.
  bool is_long(const Root& r) const;
  Rat max_norm_sq() const { return max_norm_sq_; }

 private:
  Family family_ = Family::C;
  int rank_ = 0;
  std::vector<Root> roots_;     // sorted
  std::vector<Root> positive_;  // sorted
  std::vector<Root> simple_;    // standard order
  RatVec z_;
  Rat max_norm_sq_;
};

/// Exact dot product of rational vectors; Y_gamma is represented by gamma's
/// own coordinate vector, so B(Y_a, Y_b) = a . b.
Rat root_inner_product(const RatVec& a, const RatVec& b);

/// { alpha in Delta | alpha(Z) > 0 }.
RootSubset noncompact_positive_roots(const RootSystem& rs);

/// Neither a+b nor a-b is a root.
bool is_strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b);

/// All roots that are integer combinations of Theta (a subset of the simple
/// roots).
RootSubset delta_theta(const RootSystem& rs, const std::vector<Root>& theta);

/// Indecomposable elements of a positive system P+ of the root subsystem it
/// spans. P+ is validated: exactly one of each +/- pair of
/// Delta ∩ span(P+), and closed under root sums.
std::vector<Root> simple_roots_of_positive_system(const RootSystem& rs,
                                                  std::vector<Root> pos);

/// Sum of the fundamental coweights of Psi \ Theta in e-coordinates:
/// dominant, vanishing exactly on Theta.
RatVec z_for_theta(const RootSystem& rs, const std::vector<Root>& theta);

}  // namespace flagorbits
