#include "flagorbits/orbit_calculus.hpp"

#include <algorithm>

#include "flagorbits/ratlin.hpp"

namespace flagorbits {

std::string real_form_name(RealForm f) {
  switch (f) {
    case RealForm::Sp:
      return "sp";
    case RealForm::So2Odd:
      return "so2odd";
    case RealForm::EqualLength:
      return "equalLength";
  }
  return "?";
}

RealForm real_form_from_string(const std::string& s) {
  if (s == "sp") return RealForm::Sp;
  if (s == "so2odd") return RealForm::So2Odd;
  if (s == "equalLength" || s == "equal-length") return RealForm::EqualLength;
  throw std::invalid_argument("unknown real form '" + s + "'");
}

GammaSystem GammaSystem::make(const RootSystem& rs, std::vector<Root> gammas) {
  RootSubset ncp = noncompact_positive_roots(rs);
  for (const Root& g : gammas)
    if (!ncp.contains(g))
      throw std::invalid_argument("gamma system: " + g.str() +
                                  " is not a noncompact positive root");
  for (size_t i = 0; i < gammas.size(); ++i)
    for (size_t j = i + 1; j < gammas.size(); ++j)
      if (!is_strongly_orthogonal(rs, gammas[i], gammas[j]))
        throw std::invalid_argument("gamma system: " + gammas[i].str() +
                                    " and " + gammas[j].str() +
                                    " are not strongly orthogonal");
  GammaSystem g;
  g.gammas = std::move(gammas);
  return g;
}

std::vector<Root> OrbitDescriptor::effective_gammas() const {
  std::vector<Root> out;
  if (beta_prefix) out.push_back(*beta_prefix);
  out.insert(out.end(), gamma.gammas.begin(), gamma.gammas.end());
  return out;
}

OrbitDescriptor OrbitDescriptor::absorb_prefix(const RootSystem& rs) const {
  if (!beta_prefix) return *this;
  OrbitDescriptor out;
  out.gamma = GammaSystem::make(rs, effective_gammas());
  out.w = w;
  out.theta = theta;
  return out;
}

OrbitDescriptor make_descriptor(const RootSystem& rs, std::vector<Root> gammas,
                                WeylElement w, std::vector<Root> theta) {
  for (const Root& t : theta)
    if (std::find(rs.simple().begin(), rs.simple().end(), t) ==
        rs.simple().end())
      throw std::invalid_argument("descriptor: Theta must be a subset of Psi");
  OrbitDescriptor d;
  d.gamma = GammaSystem::make(rs, std::move(gammas));
  d.w = std::move(w);
  d.theta = std::move(theta);
  std::sort(d.theta.begin(), d.theta.end());
  return d;
}

namespace {

bool member(const std::vector<Root>& sorted, const Root& r) {
  return std::binary_search(sorted.begin(), sorted.end(), r);
}

std::vector<Root> w_delta_theta(const RootSystem& rs,
                                const OrbitDescriptor& d) {
  RootSubset dt = delta_theta(rs, d.theta);
  std::vector<Root> out;
  out.reserve(dt.members.size());
  for (const Root& a : dt.members) out.push_back(d.w.apply(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<size_t> certify_nonclosed(const RootSystem& rs,
                                        const OrbitDescriptor& d) {
  std::vector<Root> wdt = w_delta_theta(rs, d);
  std::vector<Root> eff = d.effective_gammas();
  for (size_t j = 0; j < eff.size(); ++j)
    if (!member(wdt, eff[j])) return j + 1;
  return std::nullopt;
}

OrbitDescriptor normalize_descriptor(const RootSystem& rs,
                                     const OrbitDescriptor& d) {
  if (d.beta_prefix)
    throw std::invalid_argument(
        "normalize_descriptor: prefixed descriptors are boundary outputs; "
        "absorb the prefix first");
  auto j = certify_nonclosed(rs, d);
  if (!j)
    throw NotNonClosedError(
        "descriptor describes a closed coset: every gamma lies in "
        "w.Delta_Theta");
  OrbitDescriptor out = d;
  if (*j > 1) {
    Root front = out.gamma.gammas[*j - 1];
    out.gamma.gammas.erase(out.gamma.gammas.begin() + (*j - 1));
    out.gamma.gammas.insert(out.gamma.gammas.begin(), front);
  }
  const Root& g1 = out.gamma.gammas.front();
  std::vector<Root> wpos = act_on_positive_system(out.w, rs);
  if (!member(wpos, g1))
    out.w = WeylElement::reflection(rs, g1).compose(out.w);
  return out;
}

bool is_normalized(const RootSystem& rs, const OrbitDescriptor& d) {
  if (d.beta_prefix || d.gamma.gammas.empty()) return false;
  auto j = certify_nonclosed(rs, d);
  if (!j || *j != 1) return false;
  std::vector<Root> wpos = act_on_positive_system(d.w, rs);
  return member(wpos, d.gamma.gammas.front());
}

namespace {

Root long_root_at(const RootSystem& rs, int i) {
  Root r;
  r.coords.assign(rs.rank(), Rat(0));
  r.coords[i] = Rat(rs.family() == Family::C ? 2 : 1);
  return r;
}

void check_sp_shape(const RootSystem& rs) {
  if (rs.family() != Family::C)
    throw std::invalid_argument("real form sp requires a type C system");
  RootSubset ncp = noncompact_positive_roots(rs);
  // Expect {e_r + e_s} plus {2 e_r}: one root per unordered pair plus rank.
  size_t expect = rs.rank() * (rs.rank() - 1) / 2 + rs.rank();
  bool shape = ncp.members.size() == expect;
  for (const Root& a : ncp.members) {
    int nonneg = 1;
    for (const Rat& c : a.coords)
      if (c < Rat(0)) nonneg = 0;
    shape = shape && nonneg;
  }
  if (!shape)
    throw std::invalid_argument(
        "real form sp requires Z with Delta_n+ = {e_r+e_s} u {2e_r}");
}

void check_so2odd_shape(const RootSystem& rs) {
  if (rs.family() != Family::B)
    throw std::invalid_argument("real form so2odd requires a type B system");
  if (rs.rank() < 2)
    throw std::invalid_argument("so2odd requires rank >= 2");
  bool shape = rs.z()[0] > Rat(0);
  for (int i = 1; i < rs.rank(); ++i) shape = shape && rs.z()[i].is_zero();
  if (!shape)
    throw std::invalid_argument(
        "real form so2odd requires Z = (z,0,...,0), z > 0");
}

}  // namespace

BetaSystem choose_beta_system(const RootSystem& rs, const GammaSystem& g,
                              RealForm form) {
  BetaSystem out;
  const auto& gs = g.gammas;
  switch (form) {
    case RealForm::Sp: {
      check_sp_shape(rs);
      const int l = rs.rank();
      if (gs.empty()) {
        for (int i = 0; i < l; ++i) out.betas.push_back(long_root_at(rs, i));
        break;
      }
      const Root& g1 = gs.front();
      std::vector<int> support;
      for (int i = 0; i < l; ++i)
        if (!g1.coords[i].is_zero()) support.push_back(i);
      if (rs.is_long(g1)) {
        out.betas.push_back(g1);
        for (int i = 0; i < l; ++i)
          if (i != support[0]) out.betas.push_back(long_root_at(rs, i));
      } else {
        out.betas.push_back(long_root_at(rs, support[0]));
        out.betas.push_back(long_root_at(rs, support[1]));
        for (int i = 0; i < l; ++i)
          if (i != support[0] && i != support[1])
            out.betas.push_back(long_root_at(rs, i));
      }
      break;
    }
    case RealForm::So2Odd: {
      check_so2odd_shape(rs);
      if (gs.empty()) {
        Root b1 = Root{RatVec(rs.rank(), Rat(0))};
        Root b2 = b1;
        b1.coords[0] = Rat(1);
        b1.coords[1] = Rat(1);
        b2.coords[0] = Rat(1);
        b2.coords[1] = Rat(-1);
        out.betas = {b1, b2};
        break;
      }
      const Root& g1 = gs.front();
      if (rs.is_long(g1)) {
        // g1 = e1 +- e_s; partner is e1 -+ e_s.
        Root partner = g1;
        for (int i = 1; i < rs.rank(); ++i) partner.coords[i] = -g1.coords[i];
        out.betas = {g1, partner};
      } else {
        Root b1 = Root{RatVec(rs.rank(), Rat(0))};
        Root b2 = b1;
        b1.coords[0] = Rat(1);
        b1.coords[1] = Rat(1);
        b2.coords[0] = Rat(1);
        b2.coords[1] = Rat(-1);
        out.betas = {b1, b2};
      }
      break;
    }
    case RealForm::EqualLength: {
      for (const Root& gm : gs)
        if (!rs.is_long(gm))
          throw std::invalid_argument(
              "equal-length form: gamma system contains a short root (" +
              gm.str() + ")");
      out.betas = gs;
      RootSubset ncp = noncompact_positive_roots(rs);
      // Greedy completion in lexicographic order.
      std::vector<Root> candidates = ncp.members;
      std::sort(candidates.begin(), candidates.end(),
                [](const Root& a, const Root& b) { return b < a; });
      for (const Root& c : candidates) {
        bool ok = std::find(out.betas.begin(), out.betas.end(), c) ==
                  out.betas.end();
        for (const Root& b : out.betas)
          ok = ok && is_strongly_orthogonal(rs, c, b);
        if (ok) out.betas.push_back(c);
      }
      break;
    }
  }

  // Shape assertions from the case analysis.
  RootSubset ncp = noncompact_positive_roots(rs);
  for (const Root& b : out.betas)
    if (!ncp.contains(b))
      throw std::logic_error("beta system left Delta_n+");
  for (size_t i = 0; i < out.betas.size(); ++i)
    for (size_t j = i + 1; j < out.betas.size(); ++j)
      if (!is_strongly_orthogonal(rs, out.betas[i], out.betas[j]))
        throw std::logic_error("beta system is not strongly orthogonal");
  if (!gs.empty()) {
    bool g1_long = form == RealForm::EqualLength || rs.is_long(gs.front());
    size_t skip = g1_long ? 1 : 2;
    std::vector<RatVec> tail_span;
    for (size_t i = skip; i < out.betas.size(); ++i)
      tail_span.push_back(out.betas[i].coords);
    if (g1_long) {
      if (!(out.betas.front() == gs.front()))
        throw std::logic_error("condition (i): beta_1 != gamma_1");
    } else {
      std::vector<RatVec> head{out.betas[0].coords, out.betas[1].coords};
      if (!in_span(head, gs.front().coords))
        throw std::logic_error(
            "condition (ii): gamma_1 outside span(beta_1, beta_2)");
    }
    for (size_t j = 1; j < gs.size(); ++j)
      if (!in_span(tail_span, gs[j].coords))
        throw std::logic_error("gamma tail escapes the beta tail span");
  }
  return out;
}

DeltaSplit split_delta12(const RootSystem& rs, const BetaSystem& b,
                         const GammaSystem& g) {
  if (g.gammas.empty())
    throw std::invalid_argument("split_delta12: empty gamma system");
  if (b.betas.empty()) throw std::invalid_argument("split_delta12: no betas");
  const Root& g1 = g.gammas.front();
  DeltaSplit out;
  out.gamma1_is_long = rs.is_long(g1);
  out.delta1.tag = SubsetTag::Delta1;
  out.delta2.tag = SubsetTag::Delta2;

  if (out.gamma1_is_long) {
    if (!(b.betas.front() == g1))
      throw std::invalid_argument("split_delta12: beta_1 != gamma_1 (long case)");
    out.delta1.members = {g1, -g1};
  } else {
    if (b.betas.size() < 2)
      throw std::invalid_argument("split_delta12: short case needs beta_2");
    std::vector<RatVec> plane{b.betas[0].coords, b.betas[1].coords};
    if (!in_span(plane, g1.coords))
      throw std::invalid_argument(
          "split_delta12: gamma_1 outside span(beta_1, beta_2)");
    for (const Root& a : rs.roots())
      if (in_span(plane, a.coords)) out.delta1.members.push_back(a);
    // The short case always produces a rank-2 two-length system (type C2
    // up to isomorphism): 8 roots, squared lengths in ratio 2.
    if (out.delta1.members.size() != 8)
      throw std::logic_error("split_delta12: Delta_1 is not an 8-root system");
    Rat lo = dot(out.delta1.members[0].coords, out.delta1.members[0].coords);
    Rat hi = lo;
    for (const Root& a : out.delta1.members) {
      Rat n = dot(a.coords, a.coords);
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    if (!(hi == Rat(2) * lo))
      throw std::logic_error("split_delta12: Delta_1 is not of type C2");
  }
  std::sort(out.delta1.members.begin(), out.delta1.members.end());

  for (const Root& a : rs.roots()) {
    bool orth = true;
    for (const Root& d1 : out.delta1.members)
      orth = orth && dot(a.coords, d1.coords).is_zero();
    if (orth) out.delta2.members.push_back(a);
  }
  std::sort(out.delta2.members.begin(), out.delta2.members.end());

  std::vector<RatVec> span2;
  for (const Root& a : out.delta2.members) span2.push_back(a.coords);
  for (size_t j = 1; j < g.gammas.size(); ++j)
    if (!in_span(span2, g.gammas[j].coords))
      throw std::logic_error(
          "split_delta12: gamma tail does not lie in span(Delta_2)");
  return out;
}

OrbitDescriptor boundary_orbit_s1(const RootSystem& rs,
                                  const OrbitDescriptor& d, RealForm form) {
  if (!is_normalized(rs, d)) {
    auto j = certify_nonclosed(rs, d);
    if (!j)
      throw NotNonClosedError("boundary_orbit_s1: descriptor is closed");
    throw std::invalid_argument(
        "boundary_orbit_s1: descriptor must be normalized");
  }
  const Root g1 = d.gamma.gammas.front();
  BetaSystem betas = choose_beta_system(rs, d.gamma, form);
  DeltaSplit split = split_delta12(rs, betas, d.gamma);

  OrbitDescriptor out;
  out.w = d.w;
  out.theta = d.theta;
  out.gamma.gammas.assign(d.gamma.gammas.begin() + 1, d.gamma.gammas.end());
  if (split.gamma1_is_long) return out;

  // Short case: locate gamma_1 among the two short roots of
  // Delta_1+ = Delta_1 ∩ w Delta+.
  std::vector<Root> wpos = act_on_positive_system(d.w, rs);
  std::vector<Root> delta1_pos;
  for (const Root& a : split.delta1.members)
    if (member(wpos, a)) delta1_pos.push_back(a);
  if (delta1_pos.size() != 4)
    throw std::logic_error("boundary_orbit_s1: Delta_1+ should have 4 roots");
  std::vector<Root> simple = simple_roots_of_positive_system(rs, delta1_pos);
  if (simple.size() != 2)
    throw std::logic_error("boundary_orbit_s1: Delta_1+ should have 2 simples");
  Rat n0 = dot(simple[0].coords, simple[0].coords);
  Rat n1 = dot(simple[1].coords, simple[1].coords);
  if (n0 == n1)
    throw std::logic_error(
        "boundary_orbit_s1: Delta_1+ simples should have distinct lengths");
  const Root& long_simple = n0 > n1 ? simple[0] : simple[1];
  const Root& short_simple = n0 > n1 ? simple[1] : simple[0];
  if (g1 == short_simple) return out;  // g = e branch

  // Non-simple short root: prefix by the long simple root of Delta_1+.
  RootSubset ncp = noncompact_positive_roots(rs);
  if (!ncp.contains(long_simple))
    throw std::logic_error(
        "boundary_orbit_s1: prefix root left Delta_n+ (" + long_simple.str() +
        ")");
  out.beta_prefix = long_simple;
  return out;
}

namespace {

/// Conjugate of a descriptor with respect to the real form, as a rewrite on
/// descriptors: gammas kept, w multiplied by the longest element (w0 = -1
/// in types B and C), then renormalized when the result still describes a
/// non-closed coset with a nonempty gamma list.
OrbitDescriptor bar_descriptor(const RootSystem& rs, const OrbitDescriptor& d) {
  OrbitDescriptor out = d;
  out.w = d.w.compose(WeylElement::longest(rs.rank()));
  if (!out.beta_prefix && !out.gamma.gammas.empty() &&
      certify_nonclosed(rs, out))
    out = normalize_descriptor(rs, out);
  return out;
}

}  // namespace

OrbitDescriptor boundary_orbit_s2(const RootSystem& rs,
                                  const OrbitDescriptor& d, RealForm form) {
  OrbitDescriptor mirrored = bar_descriptor(rs, d);
  OrbitDescriptor tilde = boundary_orbit_s1(rs, mirrored, form);
  return bar_descriptor(rs, tilde);
}

WeylElement phi_image(const RootSystem& rs, const OrbitDescriptor& d) {
  WeylElement prod = WeylElement::identity(rs.rank());
  for (const Root& g : d.effective_gammas())
    prod = prod.compose(WeylElement::reflection(rs, g));
  return d.w.inverse().compose(prod).compose(d.w);
}

SeparationCertificate separation_inequality(const RootSystem& rs,
                                            const OrbitDescriptor& d,
                                            const OrbitDescriptor& d_tilde,
                                            const RatVec& z,
                                            const ParabolicSubgroup& w_theta) {
  if (w_theta.theta != d.theta)
    throw std::invalid_argument(
        "separation_inequality: W_Theta does not match the descriptor Theta");
  // Z defines P: dominant, vanishing on exactly Theta.
  for (const Root& a : rs.simple()) {
    Rat v = dot(a.coords, z);
    bool in_theta =
        std::find(d.theta.begin(), d.theta.end(), a) != d.theta.end();
    if (in_theta && !v.is_zero())
      throw std::invalid_argument(
          "separation_inequality: Z does not vanish on Theta");
    if (!in_theta && !(v > Rat(0)))
      throw std::invalid_argument(
          "separation_inequality: Z must be strictly dominant off Theta");
  }
  if (!is_normalized(rs, d))
    throw std::invalid_argument(
        "separation_inequality: descriptor must be normalized");

  WeylElement sigma = phi_image(rs, d);
  WeylElement sigma_tilde = phi_image(rs, d_tilde);

  SeparationCertificate cert;
  cert.lhs = dot(z, sigma_tilde.apply(z));
  bool first = true;
  for (const WeylElement& w1 : w_theta.elements)
    for (const WeylElement& w2 : w_theta.elements) {
      Rat v = dot(z, w1.apply(sigma.apply(w2.apply(z))));
      if (first || v > cert.max_rhs) cert.max_rhs = v;
      first = false;
    }
  cert.gap = cert.lhs - cert.max_rhs;

  const Root& g1 = d.gamma.gammas.front();
  RatVec wz = d.w.apply(z);
  Rat g1wz = dot(g1.coords, wz);
  cert.closed_form_gap =
      Rat(2) * g1wz * g1wz / dot(g1.coords, g1.coords);
  if (d_tilde.beta_prefix) {
    const Root& beta = *d_tilde.beta_prefix;
    Rat bwz = dot(beta.coords, wz);
    if (bwz < Rat(0) || bwz > g1wz)
      throw std::logic_error(
          "separation_inequality: 0 <= B(Y_beta,wZ) <= B(Y_gamma1,wZ) failed");
    cert.closed_form_gap -=
        Rat(2) * bwz * bwz / dot(beta.coords, beta.coords);
  }
  if (!(cert.gap > Rat(0)))
    throw CertificateFailure(
        "separation gap is not positive (implementation bug)");
  return cert;
}

std::vector<std::vector<Root>> enumerate_gamma_tuples(const RootSystem& rs,
                                                      size_t max_len) {
  RootSubset ncp = noncompact_positive_roots(rs);
  std::vector<std::vector<Root>> out;
  std::vector<Root> cur;
  auto dfs = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() >= max_len) return;
    for (const Root& c : ncp.members) {
      bool ok = std::find(cur.begin(), cur.end(), c) == cur.end();
      for (const Root& g : cur) ok = ok && is_strongly_orthogonal(rs, c, g);
      if (!ok) continue;
      cur.push_back(c);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

}  // namespace flagorbits
