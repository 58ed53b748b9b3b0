#pragma once

#include <vector>

#include "flagorbits/root_system.hpp"

namespace flagorbits {

/// Weyl group element of type B/C as a signed permutation of the coordinate
/// axes: e_i maps to sign(i) * e_{perm(i)}. Canonical representation, O(n)
/// composition.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> perm, std::vector<int> signs);

  static WeylElement identity(int n);
  /// Orthogonal reflection fixing the hyperplane of gamma; gamma must be a
  /// root of rs (the image of every axis is checked to be a signed axis).
  static WeylElement reflection(const RootSystem& rs, const Root& gamma);
  /// The longest element; acts as -1 on every coordinate in types B and C.
  static WeylElement longest(int n);

  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }    // 0-based targets
  const std::vector<int>& signs() const { return signs_; }  // +1 / -1

  RatVec apply(const RatVec& v) const;
  Root apply(const Root& r) const { return Root{apply(r.coords)}; }

  /// (this o other): apply `other` first.
  WeylElement compose(const WeylElement& other) const;
  WeylElement inverse() const;

  bool is_identity() const;
  bool permutes_roots(const RootSystem& rs) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend std::strong_ordering operator<=>(const WeylElement&,
                                          const WeylElement&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

inline WeylElement compose(const WeylElement& u, const WeylElement& v) {
  return u.compose(v);
}
inline WeylElement inverse(const WeylElement& u) { return u.inverse(); }

struct ParabolicSubgroup {
  std::vector<Root> theta;
  std::vector<WeylElement> elements;
};

/// W_Theta, the subgroup generated by the reflections of Theta (a subset of
/// the simple roots), enumerated by breadth-first closure. Throws if the
/// enumeration exceeds `cap` elements.
ParabolicSubgroup enumerate_parabolic(const RootSystem& rs,
                                      const std::vector<Root>& theta,
                                      size_t cap = 10000);

/// { w(alpha) | alpha in Delta+ }, sorted.
std::vector<Root> act_on_positive_system(const WeylElement& w,
                                         const RootSystem& rs);

}  // namespace flagorbits
