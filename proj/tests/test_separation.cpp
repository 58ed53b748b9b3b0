#include <doctest.h>

#include "flagorbits/orbit_calculus.hpp"

using namespace flagorbits;

namespace {

RootSystem c2() { return RootSystem::build(Family::C, 2, {Rat(1), Rat(1)}); }

Root rt(const RootSystem& rs, const std::string& s) {
  return parse_root(s, rs.rank());
}

/// Runs the separation certificate for every normalized non-closed
/// descriptor (all gamma tuples x all w x all proper Theta) of rs and
/// checks positivity plus exact agreement with the closed form.
void exhaustive_separation(const RootSystem& rs, RealForm form,
                           size_t max_gammas, int* checked) {
  auto weyl = enumerate_parabolic(rs, rs.simple()).elements;
  std::vector<std::vector<Root>> thetas{{}};
  for (int mask = 1; mask < (1 << rs.rank()) - 1; ++mask) {
    std::vector<Root> theta;
    for (int i = 0; i < rs.rank(); ++i)
      if (mask & (1 << i)) theta.push_back(rs.simple()[i]);
    thetas.push_back(theta);
  }
  for (const auto& gammas : enumerate_gamma_tuples(rs, max_gammas))
    for (const WeylElement& w : weyl)
      for (const auto& theta : thetas) {
        OrbitDescriptor d = make_descriptor(rs, gammas, w, theta);
        if (!certify_nonclosed(rs, d)) continue;
        OrbitDescriptor n = normalize_descriptor(rs, d);
        OrbitDescriptor tilde = boundary_orbit_s1(rs, n, form);
        ParabolicSubgroup wt = enumerate_parabolic(rs, n.theta);
        RatVec z = z_for_theta(rs, n.theta);
        SeparationCertificate cert =
            separation_inequality(rs, n, tilde, z, wt);
        CHECK(cert.gap > Rat(0));
        CHECK(cert.gap == cert.closed_form_gap);
        ++*checked;
      }
}

}  // namespace

TEST_CASE("worked separation certificate: Sop data over Theta = {e1-e2}") {
  RootSystem rs = c2();
  OrbitDescriptor d =
      make_descriptor(rs, {rt(rs, "2e1"), rt(rs, "2e2")},
                      WeylElement::identity(2), {rt(rs, "e1-e2")});
  OrbitDescriptor n = normalize_descriptor(rs, d);
  OrbitDescriptor tilde = boundary_orbit_s1(rs, n, RealForm::Sp);
  CHECK(tilde.gamma.gammas == std::vector<Root>{rt(rs, "2e2")});
  ParabolicSubgroup wt = enumerate_parabolic(rs, n.theta);
  RatVec z{Rat(1), Rat(1)};
  SeparationCertificate cert = separation_inequality(rs, n, tilde, z, wt);
  CHECK(cert.lhs == Rat(0));
  CHECK(cert.max_rhs == Rat(-2));
  CHECK(cert.gap == Rat(2));
  // Closed form: 2 B(Y_{2e1}, Z)^2 / B(Y_{2e1}, Y_{2e1}) = 2*4/4.
  CHECK(cert.closed_form_gap == Rat(2));
}

TEST_CASE("worked prefixed certificate: S10 data") {
  RootSystem rs = c2();
  // Z = (1,1) pairs with Theta = {e1-e2} (it vanishes on e1-e2).
  OrbitDescriptor d = make_descriptor(rs, {rt(rs, "e1+e2")},
                                      WeylElement::identity(2),
                                      {rt(rs, "e1-e2")});
  OrbitDescriptor tilde = boundary_orbit_s1(rs, d, RealForm::Sp);
  CHECK(tilde.beta_prefix == rt(rs, "2e2"));
  ParabolicSubgroup wt = enumerate_parabolic(rs, d.theta);
  RatVec z{Rat(1), Rat(1)};
  SeparationCertificate cert = separation_inequality(rs, d, tilde, z, wt);
  // lhs = B(Z, w_{2e2} Z) = 0; every rhs value is B(Z, w_{e1+e2} Z) = -2.
  CHECK(cert.lhs == Rat(0));
  CHECK(cert.max_rhs == Rat(-2));
  CHECK(cert.gap == Rat(2));
  // Two-term closed form: 2*(2)^2/2 - 2*(2)^2/4 = 4 - 2.
  CHECK(cert.closed_form_gap == Rat(2));

  // Same data over Theta = {} needs a strictly dominant Z.
  OrbitDescriptor d0 = make_descriptor(rs, {rt(rs, "e1+e2")},
                                       WeylElement::identity(2), {});
  OrbitDescriptor tilde0 = boundary_orbit_s1(rs, d0, RealForm::Sp);
  RatVec z0 = z_for_theta(rs, {});
  CHECK(z0 == RatVec{Rat(3, 2), Rat(1, 2)});
  SeparationCertificate cert0 = separation_inequality(
      rs, d0, tilde0, z0, enumerate_parabolic(rs, {}));
  CHECK(cert0.lhs == Rat(2));
  CHECK(cert0.max_rhs == Rat(-3, 2));
  CHECK(cert0.gap == Rat(7, 2));
  CHECK(cert0.closed_form_gap == Rat(7, 2));
}

TEST_CASE("certificate rejects a mismatched Z") {
  RootSystem rs = c2();
  OrbitDescriptor d = make_descriptor(rs, {rt(rs, "2e1")},
                                      WeylElement::identity(2),
                                      {rt(rs, "e1-e2")});
  ParabolicSubgroup wt = enumerate_parabolic(rs, d.theta);
  OrbitDescriptor tilde = boundary_orbit_s1(rs, d, RealForm::Sp);
  // (1, 0) does not vanish on e1 - e2.
  CHECK_THROWS_AS(
      separation_inequality(rs, d, tilde, {Rat(1), Rat(0)}, wt),
      std::invalid_argument);
  // W_Theta built on a different Theta.
  ParabolicSubgroup wrong = enumerate_parabolic(rs, {});
  CHECK_THROWS_AS(
      separation_inequality(rs, d, tilde, z_for_theta(rs, d.theta), wrong),
      std::invalid_argument);
}

TEST_CASE("separation certificates, exhaustive C2") {
  int checked = 0;
  exhaustive_separation(c2(), RealForm::Sp, 2, &checked);
  CHECK(checked > 50);
}

TEST_CASE("separation certificates, exhaustive C3") {
  RootSystem c3 = RootSystem::build(Family::C, 3, RatVec(3, Rat(1)));
  int checked = 0;
  exhaustive_separation(c3, RealForm::Sp, 3, &checked);
  CHECK(checked > 1000);
}

TEST_CASE("separation certificates, exhaustive B2 and B3") {
  for (int p = 2; p <= 3; ++p) {
    RatVec z(p, Rat(0));
    z[0] = Rat(1);
    RootSystem rs = RootSystem::build(Family::B, p, z);
    int checked = 0;
    exhaustive_separation(rs, RealForm::So2Odd, 2, &checked);
    CHECK(checked > 10);
  }
}
