#include <doctest.h>

#include <algorithm>

#include "flagorbits/orbit_calculus.hpp"

using namespace flagorbits;

namespace {

RootSystem c2() { return RootSystem::build(Family::C, 2, {Rat(1), Rat(1)}); }

RootSystem b(int p) {
  RatVec z(p, Rat(0));
  z[0] = Rat(1);
  return RootSystem::build(Family::B, p, z);
}

Root rt(const RootSystem& rs, const std::string& s) {
  return parse_root(s, rs.rank());
}

WeylElement refl(const RootSystem& rs, const std::string& s) {
  return WeylElement::reflection(rs, rt(rs, s));
}

}  // namespace

TEST_CASE("normalize: already normalized descriptor is unchanged") {
  RootSystem rs = c2();
  OrbitDescriptor d = make_descriptor(rs, {rt(rs, "2e2")},
                                      WeylElement::identity(2),
                                      {rt(rs, "e1-e2")});
  CHECK(normalize_descriptor(rs, d) == d);
}

TEST_CASE("normalize: w is flipped so that gamma_1 lands in w Delta+") {
  RootSystem rs = c2();
  OrbitDescriptor d = make_descriptor(rs, {rt(rs, "2e1")},
                                      WeylElement::longest(2), {});
  OrbitDescriptor n = normalize_descriptor(rs, d);
  CHECK(n.w == refl(rs, "2e1").compose(WeylElement::longest(2)));
  std::vector<Root> wpos = act_on_positive_system(n.w, rs);
  CHECK(std::binary_search(wpos.begin(), wpos.end(), rt(rs, "2e1")));
}

TEST_CASE("normalize: closed descriptors are rejected") {
  RootSystem rs = c2();
  OrbitDescriptor d = make_descriptor(rs, {rt(rs, "2e2")},
                                      WeylElement::identity(2),
                                      {rt(rs, "2e2")});
  CHECK_THROWS_AS(normalize_descriptor(rs, d), NotNonClosedError);
  OrbitDescriptor empty =
      make_descriptor(rs, {}, WeylElement::identity(2), {});
  CHECK_THROWS_AS(normalize_descriptor(rs, empty), NotNonClosedError);
}

TEST_CASE("normalize is idempotent over all C2 descriptors") {
  RootSystem rs = c2();
  auto tuples = enumerate_gamma_tuples(rs, 2);
  auto weyl = enumerate_parabolic(rs, rs.simple()).elements;
  for (const auto& gammas : tuples)
    for (const WeylElement& w : weyl)
      for (int t = 0; t < 3; ++t) {
        std::vector<Root> theta;
        if (t == 1) theta = {rt(rs, "e1-e2")};
        if (t == 2) theta = {rt(rs, "2e2")};
        OrbitDescriptor d = make_descriptor(rs, gammas, w, theta);
        if (!certify_nonclosed(rs, d)) continue;
        OrbitDescriptor n = normalize_descriptor(rs, d);
        CHECK(is_normalized(rs, n));
        CHECK(normalize_descriptor(rs, n) == n);
      }
}

TEST_CASE("certify_nonclosed") {
  RootSystem rs = c2();
  CHECK(certify_nonclosed(rs, make_descriptor(rs, {rt(rs, "2e2")},
                                              WeylElement::identity(2),
                                              {rt(rs, "e1-e2")})) == 1);
  CHECK_FALSE(certify_nonclosed(rs, make_descriptor(rs, {rt(rs, "2e2")},
                                                    WeylElement::identity(2),
                                                    {rt(rs, "2e2")})));
  CHECK(certify_nonclosed(
            rs, make_descriptor(rs, {rt(rs, "2e1"), rt(rs, "2e2")},
                                WeylElement::identity(2),
                                {rt(rs, "e1-e2")})) == 1);
}

TEST_CASE("beta systems, sp case") {
  RootSystem c4 = RootSystem::build(Family::C, 4, RatVec(4, Rat(1)));
  // Long gamma_1 = 2e_r: the rest are all 2e_s.
  GammaSystem g1 = GammaSystem::make(c4, {rt(c4, "2e2")});
  BetaSystem b1 = choose_beta_system(c4, g1, RealForm::Sp);
  CHECK(b1.betas == std::vector<Root>{rt(c4, "2e2"), rt(c4, "2e1"),
                                      rt(c4, "2e3"), rt(c4, "2e4")});
  // Short gamma_1 = e_r + e_s.
  GammaSystem g2 = GammaSystem::make(c4, {rt(c4, "e2+e3")});
  BetaSystem b2 = choose_beta_system(c4, g2, RealForm::Sp);
  CHECK(b2.betas == std::vector<Root>{rt(c4, "2e2"), rt(c4, "2e3"),
                                      rt(c4, "2e1"), rt(c4, "2e4")});
}

TEST_CASE("beta systems, so(2,2p-1) case") {
  RootSystem b3 = b(3);
  GammaSystem g = GammaSystem::make(b3, {rt(b3, "e1")});
  BetaSystem bs = choose_beta_system(b3, g, RealForm::So2Odd);
  CHECK(bs.betas == std::vector<Root>{rt(b3, "e1+e2"), rt(b3, "e1-e2")});
  GammaSystem g2 = GammaSystem::make(b3, {rt(b3, "e1-e3")});
  BetaSystem bs2 = choose_beta_system(b3, g2, RealForm::So2Odd);
  CHECK(bs2.betas == std::vector<Root>{rt(b3, "e1-e3"), rt(b3, "e1+e3")});
}

TEST_CASE("equal-length branch rejects short gammas, matches sp on longs") {
  RootSystem rs = c2();
  CHECK_THROWS_AS(choose_beta_system(
                      rs, GammaSystem::make(rs, {rt(rs, "e1+e2")}),
                      RealForm::EqualLength),
                  std::invalid_argument);
  GammaSystem g = GammaSystem::make(rs, {rt(rs, "2e1")});
  CHECK(choose_beta_system(rs, g, RealForm::EqualLength).betas ==
        choose_beta_system(rs, g, RealForm::Sp).betas);
}

TEST_CASE("beta systems are maximal (exhaustive, rank <= 4)") {
  for (int l = 2; l <= 4; ++l) {
    RootSystem rs = RootSystem::build(Family::C, l, RatVec(l, Rat(1)));
    RootSubset ncp = noncompact_positive_roots(rs);
    for (const auto& gammas : enumerate_gamma_tuples(rs, l)) {
      BetaSystem bs = choose_beta_system(rs, GammaSystem::make(rs, gammas),
                                         RealForm::Sp);
      for (const Root& cand : ncp.members) {
        if (std::find(bs.betas.begin(), bs.betas.end(), cand) !=
            bs.betas.end())
          continue;  // cannot extend the system by a repeat
        bool so_with_all = true;
        for (const Root& beta : bs.betas)
          so_with_all = so_with_all && is_strongly_orthogonal(rs, cand, beta);
        CHECK_FALSE(so_with_all);
      }
    }
  }
  for (int p = 2; p <= 4; ++p) {
    RootSystem rs = b(p);
    RootSubset ncp = noncompact_positive_roots(rs);
    for (const auto& gammas : enumerate_gamma_tuples(rs, 2)) {
      BetaSystem bs = choose_beta_system(rs, GammaSystem::make(rs, gammas),
                                         RealForm::So2Odd);
      for (const Root& cand : ncp.members) {
        if (std::find(bs.betas.begin(), bs.betas.end(), cand) !=
            bs.betas.end())
          continue;
        bool so_with_all = true;
        for (const Root& beta : bs.betas)
          so_with_all = so_with_all && is_strongly_orthogonal(rs, cand, beta);
        CHECK_FALSE(so_with_all);
      }
    }
  }
}

TEST_CASE("split_delta12") {
  RootSystem rs = c2();
  GammaSystem glong = GammaSystem::make(rs, {rt(rs, "2e1")});
  DeltaSplit s1 = split_delta12(rs, choose_beta_system(rs, glong, RealForm::Sp),
                                glong);
  CHECK(s1.gamma1_is_long);
  CHECK(s1.delta1.members == std::vector<Root>{rt(rs, "-2e1"), rt(rs, "2e1")});
  CHECK(s1.delta2.members == std::vector<Root>{rt(rs, "-2e2"), rt(rs, "2e2")});

  RootSystem c3 = RootSystem::build(Family::C, 3, RatVec(3, Rat(1)));
  GammaSystem gshort = GammaSystem::make(c3, {rt(c3, "e1+e2")});
  DeltaSplit s2 = split_delta12(
      c3, choose_beta_system(c3, gshort, RealForm::Sp), gshort);
  CHECK_FALSE(s2.gamma1_is_long);
  CHECK(s2.delta1.members.size() == 8);
  CHECK(s2.delta2.members ==
        std::vector<Root>{rt(c3, "-2e3"), rt(c3, "2e3")});

  GammaSystem gshort2 = GammaSystem::make(rs, {rt(rs, "e1+e2")});
  DeltaSplit s3 = split_delta12(
      rs, choose_beta_system(rs, gshort2, RealForm::Sp), gshort2);
  CHECK(s3.delta1.members.size() == 8);
  CHECK(s3.delta2.members.empty());
}

TEST_CASE("split_delta12: gamma tail is orthogonal to Delta_1 (exhaustive)") {
  for (int l = 2; l <= 4; ++l) {
    RootSystem rs = RootSystem::build(Family::C, l, RatVec(l, Rat(1)));
    for (const auto& gammas : enumerate_gamma_tuples(rs, l)) {
      GammaSystem g = GammaSystem::make(rs, gammas);
      DeltaSplit split =
          split_delta12(rs, choose_beta_system(rs, g, RealForm::Sp), g);
      for (size_t j = 1; j < gammas.size(); ++j)
        for (const Root& a : split.delta1.members)
          CHECK(dot(gammas[j].coords, a.coords).is_zero());
    }
  }
}

TEST_CASE("boundary orbits of the four worked descriptors") {
  RootSystem rs = c2();
  WeylElement e = WeylElement::identity(2);
  WeylElement w2 = refl(rs, "2e2");

  // S8 data: ({2e1}, e) -> ({}, e), i.e. S1.
  OrbitDescriptor s8 = make_descriptor(rs, {rt(rs, "2e1")}, e, {});
  OrbitDescriptor t8 = boundary_orbit_s1(rs, s8, RealForm::Sp);
  CHECK(t8.gamma.gammas.empty());
  CHECK_FALSE(t8.beta_prefix);
  CHECK(t8.w == e);

  // Sop data: ({2e1, 2e2}, e) -> ({2e2}, e), i.e. S5.
  OrbitDescriptor sop =
      make_descriptor(rs, {rt(rs, "2e1"), rt(rs, "2e2")}, e, {});
  OrbitDescriptor top = boundary_orbit_s1(rs, sop, RealForm::Sp);
  CHECK(top.gamma.gammas == std::vector<Root>{rt(rs, "2e2")});
  CHECK_FALSE(top.beta_prefix);
  CHECK(top.w == e);

  // S10 data: ({e1+e2}, e): non-simple short, prefix beta = 2e2 -> S5.
  OrbitDescriptor s10 = make_descriptor(rs, {rt(rs, "e1+e2")}, e, {});
  OrbitDescriptor t10 = boundary_orbit_s1(rs, s10, RealForm::Sp);
  CHECK(t10.gamma.gammas.empty());
  CHECK(t10.beta_prefix == rt(rs, "2e2"));
  CHECK(t10.w == e);

  // S7 data: ({e1+e2}, w_{2e2}): simple short -> ({}, w_{2e2}), i.e. S3.
  OrbitDescriptor s7 = make_descriptor(rs, {rt(rs, "e1+e2")}, w2, {});
  OrbitDescriptor t7 = boundary_orbit_s1(rs, s7, RealForm::Sp);
  CHECK(t7.gamma.gammas.empty());
  CHECK_FALSE(t7.beta_prefix);
  CHECK(t7.w == w2);

  // S9 data: ({2e1}, w_{2e2}) -> ({}, w_{2e2}), i.e. S3.
  OrbitDescriptor s9 = make_descriptor(rs, {rt(rs, "2e1")}, w2, {});
  OrbitDescriptor t9 = boundary_orbit_s1(rs, s9, RealForm::Sp);
  CHECK(t9.gamma.gammas.empty());
  CHECK(t9.w == w2);
}

TEST_CASE("boundary output is shorter or prefix-replaced") {
  RootSystem rs = c2();
  auto weyl = enumerate_parabolic(rs, rs.simple()).elements;
  for (const auto& gammas : enumerate_gamma_tuples(rs, 2))
    for (const WeylElement& w : weyl) {
      OrbitDescriptor d = make_descriptor(rs, gammas, w, {});
      if (!certify_nonclosed(rs, d)) continue;
      OrbitDescriptor n = normalize_descriptor(rs, d);
      OrbitDescriptor t = boundary_orbit_s1(rs, n, RealForm::Sp);
      size_t shrunk = n.gamma.gammas.size() - t.gamma.gammas.size();
      CHECK(shrunk == 1);
      CHECK(phi_image(rs, t) != phi_image(rs, n));
      if (t.beta_prefix) {
        CHECK(rs.is_long(*t.beta_prefix));
        CHECK_FALSE(rs.is_long(n.gamma.gammas.front()));
      }
    }
}

TEST_CASE("phi images") {
  RootSystem rs = c2();
  WeylElement e = WeylElement::identity(2);
  OrbitDescriptor both =
      make_descriptor(rs, {rt(rs, "2e1"), rt(rs, "2e2")}, e, {});
  CHECK(phi_image(rs, both) == WeylElement::longest(2));
  OrbitDescriptor none = make_descriptor(rs, {}, refl(rs, "2e2"), {});
  CHECK(phi_image(rs, none).is_identity());
  OrbitDescriptor conj =
      make_descriptor(rs, {rt(rs, "e1+e2")}, refl(rs, "2e2"), {});
  CHECK(phi_image(rs, conj) == refl(rs, "e1-e2"));
}

TEST_CASE("absorb_prefix keeps the Cayley word") {
  RootSystem rs = c2();
  OrbitDescriptor s10 = make_descriptor(rs, {rt(rs, "e1+e2")},
                                        WeylElement::identity(2), {});
  OrbitDescriptor t = boundary_orbit_s1(rs, s10, RealForm::Sp);
  OrbitDescriptor plain = t.absorb_prefix(rs);
  CHECK_FALSE(plain.beta_prefix);
  CHECK(plain.gamma.gammas == std::vector<Root>{rt(rs, "2e2")});
  CHECK(plain.effective_gammas() == t.effective_gammas());
}

TEST_CASE("S~2 mirrors the five worked cases") {
  RootSystem rs = c2();
  WeylElement e = WeylElement::identity(2);
  WeylElement w1 = refl(rs, "2e1");
  WeylElement w2 = refl(rs, "2e2");
  WeylElement w0 = WeylElement::longest(2);

  // S9 -> S2 = ({}, w0).
  OrbitDescriptor s9 = make_descriptor(rs, {rt(rs, "2e1")}, w2, {});
  OrbitDescriptor m9 = boundary_orbit_s2(rs, s9, RealForm::Sp);
  CHECK(m9.gamma.gammas.empty());
  CHECK(m9.w == w0);

  // S8 -> S4 = ({}, w_{2e1}).
  OrbitDescriptor s8 = make_descriptor(rs, {rt(rs, "2e1")}, e, {});
  OrbitDescriptor m8 = boundary_orbit_s2(rs, s8, RealForm::Sp);
  CHECK(m8.gamma.gammas.empty());
  CHECK(m8.w == w1);

  // Sop -> S6 = ({2e2}, w_{2e1}).
  OrbitDescriptor sop =
      make_descriptor(rs, {rt(rs, "2e1"), rt(rs, "2e2")}, e, {});
  OrbitDescriptor mop = boundary_orbit_s2(rs, sop, RealForm::Sp);
  CHECK(mop.gamma.gammas == std::vector<Root>{rt(rs, "2e2")});
  CHECK_FALSE(mop.beta_prefix);
  CHECK(mop.w == w1);

  // S~1 and S~2 differ in every one of the five worked cases.
  for (const OrbitDescriptor& d :
       {s9, s8, sop, make_descriptor(rs, {rt(rs, "e1+e2")}, w2, {}),
        make_descriptor(rs, {rt(rs, "e1+e2")}, e, {})}) {
    OrbitDescriptor a = boundary_orbit_s1(rs, d, RealForm::Sp);
    OrbitDescriptor b2 = boundary_orbit_s2(rs, d, RealForm::Sp);
    CHECK_FALSE(a == b2);
  }
}

TEST_CASE("boundary orbits in so(2,2p-1): both short branches occur") {
  RootSystem b3 = b(3);
  WeylElement e = WeylElement::identity(3);
  // gamma_1 = e1 against the standard positive system: Delta_1+ is the
  // standard B2 positive system on (e1, e2), where e1 decomposes as
  // (e1-e2) + e2, so the prefix branch fires with beta = e1 - e2.
  OrbitDescriptor d = make_descriptor(b3, {rt(b3, "e1")}, e, {});
  OrbitDescriptor t = boundary_orbit_s1(b3, d, RealForm::So2Odd);
  CHECK(t.gamma.gammas.empty());
  CHECK(t.beta_prefix == rt(b3, "e1-e2"));

  // After the coordinate swap w_{e1-e2}, Delta_1+ has simple roots
  // {e2-e1, e1}: the short root is now simple and the prefix disappears.
  WeylElement swap12 = WeylElement::reflection(b3, rt(b3, "e1-e2"));
  OrbitDescriptor d2 = make_descriptor(b3, {rt(b3, "e1")}, swap12, {});
  OrbitDescriptor n2 = normalize_descriptor(b3, d2);
  OrbitDescriptor t2 = boundary_orbit_s1(b3, n2, RealForm::So2Odd);
  CHECK(t2.gamma.gammas.empty());
  CHECK_FALSE(t2.beta_prefix);

  // Long gamma_1 just drops.
  OrbitDescriptor dl =
      make_descriptor(b3, {rt(b3, "e1+e3"), rt(b3, "e1-e3")}, e, {});
  OrbitDescriptor tl = boundary_orbit_s1(b3, dl, RealForm::So2Odd);
  CHECK(tl.gamma.gammas == std::vector<Root>{rt(b3, "e1-e3")});
  CHECK_FALSE(tl.beta_prefix);
}

TEST_CASE("equal-length branch runs the full boundary pipeline") {
  RootSystem rs = c2();
  OrbitDescriptor d = make_descriptor(rs, {rt(rs, "2e1"), rt(rs, "2e2")},
                                      WeylElement::identity(2), {});
  OrbitDescriptor t = boundary_orbit_s1(rs, d, RealForm::EqualLength);
  CHECK(t.gamma.gammas == std::vector<Root>{rt(rs, "2e2")});
  CHECK_FALSE(t.beta_prefix);
  // Short gamma_1 is rejected under the all-long convention.
  OrbitDescriptor ds = make_descriptor(rs, {rt(rs, "e1+e2")},
                                       WeylElement::identity(2), {});
  CHECK_THROWS_AS(boundary_orbit_s1(rs, ds, RealForm::EqualLength),
                  std::invalid_argument);
}

TEST_CASE("S~2 is total on non-closed descriptors (C2 and C3)") {
  for (int l = 2; l <= 3; ++l) {
    RootSystem rs = RootSystem::build(Family::C, l, RatVec(l, Rat(1)));
    auto weyl = enumerate_parabolic(rs, rs.simple()).elements;
    for (const auto& gammas : enumerate_gamma_tuples(rs, l))
      for (const WeylElement& w : weyl)
        for (int mask = 0; mask < (1 << l) - 1; ++mask) {
          std::vector<Root> theta;
          for (int i = 0; i < l; ++i)
            if (mask & (1 << i)) theta.push_back(rs.simple()[i]);
          OrbitDescriptor d = make_descriptor(rs, gammas, w, theta);
          if (!certify_nonclosed(rs, d)) continue;
          OrbitDescriptor n = normalize_descriptor(rs, d);
          OrbitDescriptor m = boundary_orbit_s2(rs, n, RealForm::Sp);
          CHECK(m.gamma.gammas.size() == n.gamma.gammas.size() - 1);
          CHECK(m.theta == n.theta);
          if (m.beta_prefix) {
            RootSubset ncp = noncompact_positive_roots(rs);
            CHECK(ncp.contains(*m.beta_prefix));
          }
        }
  }
}
