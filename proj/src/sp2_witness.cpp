#include "flagorbits/sp2/witness.hpp"

#include <algorithm>
#include <cmath>

#include "flagorbits/rng.hpp"

namespace flagorbits::sp2 {

namespace {
constexpr double kPi = 3.14159265358979323846;

cplx herm(const Mat& u, const Mat& v) {
  cplx s{};
  for (int i = 0; i < 4; ++i) {
    double sign = i < 2 ? 1.0 : -1.0;
    s += sign * std::conj(u(i, 0)) * v(i, 0);
  }
  return s;
}

Mat unit(const Mat& v) {
  double n = v.frobenius();
  return cplx{1.0 / n, 0.0} * v;
}

double null_residual_sq(const Mat& v_unit) {
  double r = herm(v_unit, v_unit).real();
  return r * r;
}

double c0s_residual_sq(const Mat& v_unit) {
  Mat rows(2, 4);
  rows(0, 0) = v_unit(2, 0);
  rows(0, 1) = v_unit(3, 0);
  rows(0, 2) = -v_unit(0, 0);
  rows(0, 3) = -v_unit(1, 0);
  for (int i = 0; i < 4; ++i) {
    double sign = i < 2 ? 1.0 : -1.0;
    rows(1, i) = sign * std::conj(v_unit(i, 0));
  }
  std::vector<double> sv = singular_values(rows);
  double r = sv[1] / sv[0];
  return r * r;
}

/// Eigenvalues of the compressed Hermitian form on V2 (orthonormal basis).
std::pair<double, double> gram_eigs(const Mat& v2) {
  Mat q = orthonormal_columns(v2);
  cplx g11 = herm(q.col(0), q.col(0)), g12 = herm(q.col(0), q.col(1)),
       g22 = herm(q.col(1), q.col(1));
  double tr = g11.real() + g22.real();
  double det = g11.real() * g22.real() - std::norm(g12);
  double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

double gram_frob_sq(const Mat& v2) {
  Mat q = orthonormal_columns(v2);
  cplx g11 = herm(q.col(0), q.col(0)), g12 = herm(q.col(0), q.col(1)),
       g22 = herm(q.col(1), q.col(1));
  return std::norm(g11) + std::norm(g22) + 2.0 * std::norm(g12);
}

struct Objective {
  Mat x;       // boundary point
  Mat g_src;   // table representative of the source orbit
  ClaimTarget target;

  Flag4 flag_at(const Mat& k) const {
    return flag_of(x * embed_gl2(k) * g_src);
  }

  /// k-hat built as diag(exp M, exp(-M^T)); avoids inverting exp(M) when
  /// the search wanders into ill-conditioned territory.
  Flag4 flag_at_params(const double* p) const {
    Mat m(2, 2);
    m(0, 0) = cplx{p[0], p[1]};
    m(0, 1) = cplx{p[2], p[3]};
    m(1, 0) = cplx{p[4], p[5]};
    m(1, 1) = cplx{p[6], p[7]};
    Mat k = expm(m);
    Mat kinvt = expm(cplx{-1.0, 0.0} * m.transpose());
    Mat khat(4, 4);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        khat(r, c) = k(r, c);
        khat(r + 2, c + 2) = kinvt(r, c);
      }
    return flag_of(x * khat * g_src);
  }

  double violation(const Flag4& f) const {
    Mat v = unit(f.v1);
    switch (target) {
      case ClaimTarget::OrbitS8:
      case ClaimTarget::OrbitS9:
        return null_residual_sq(v) + c0s_residual_sq(v);
      case ClaimTarget::OrbitSop:
        return c0s_residual_sq(v) + gram_frob_sq(f.v2);
      case ClaimTarget::ClosureS7:
        return null_residual_sq(v);
      case ClaimTarget::ClosureS10:
        return gram_frob_sq(f.v2);
    }
    return 0.0;
  }

  std::vector<double> margins(const Flag4& f) const {
    auto [lo, hi] = gram_eigs(f.v2);
    switch (target) {
      case ClaimTarget::OrbitS8:
        return {hi};   // V2 must meet C+
      case ClaimTarget::OrbitS9:
        return {-lo};  // V2 must meet C-
      default:
        return {};     // closed targets carry no strict inequalities
    }
  }
};

Mat k_from_params(const double* p) {
  Mat m(2, 2);
  m(0, 0) = cplx{p[0], p[1]};
  m(0, 1) = cplx{p[2], p[3]};
  m(1, 0) = cplx{p[4], p[5]};
  m(1, 1) = cplx{p[6], p[7]};
  return expm(m);
}

struct NmResult {
  std::array<double, 8> x;
  double f = 0.0;
  long long evals = 0;
};

template <typename F>
NmResult nelder_mead(F&& func, const std::array<double, 8>& x0, double step,
                     int max_evals) {
  constexpr int n = 8;
  struct Vertex {
    std::array<double, n> x;
    double f;
  };
  std::vector<Vertex> simplex;
  long long evals = 0;
  auto eval = [&](const std::array<double, n>& x) {
    ++evals;
    return func(x.data());
  };
  simplex.push_back({x0, eval(x0)});
  for (int i = 0; i < n; ++i) {
    auto x = x0;
    x[i] += step;
    simplex.push_back({x, eval(x)});
  }
  auto by_f = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  while (evals < max_evals) {
    std::sort(simplex.begin(), simplex.end(), by_f);
    // Polish well below the classifier tolerance band; the residuals of a
    // true witness bottom out near squared machine precision.
    if (simplex.front().f < 1e-27 ||
        (simplex.back().f - simplex.front().f < 1e-30 &&
         simplex.front().f < 1e-18))
      break;
    std::array<double, n> centroid{};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
    }
    for (double& c : centroid) c /= n;
    auto blend = [&](double t) {
      std::array<double, n> x;
      for (int j = 0; j < n; ++j)
        x[j] = centroid[j] + t * (simplex.back().x[j] - centroid[j]);
      return x;
    };
    auto xr = blend(-1.0);
    double fr = eval(xr);
    if (fr < simplex.front().f) {
      auto xe = blend(-2.0);
      double fe = eval(xe);
      if (fe < fr)
        simplex.back() = {xe, fe};
      else
        simplex.back() = {xr, fr};
    } else if (fr < simplex[n - 1].f) {
      simplex.back() = {xr, fr};
    } else {
      bool outside = fr < simplex.back().f;
      auto xc = blend(outside ? -0.5 : 0.5);
      double fc = eval(xc);
      if (fc < std::min(fr, simplex.back().f)) {
        simplex.back() = {xc, fc};
      } else {
        for (int i = 1; i <= n; ++i) {
          for (int j = 0; j < n; ++j)
            simplex[i].x[j] =
                simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
          simplex[i].f = eval(simplex[i].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_f);
  return {simplex.front().x, simplex.front().f, evals};
}

}  // namespace

Mat boundary_point(BoundarySide side, double s2) {
  if (!(s2 > -kPi / 4 && s2 < kPi / 4))
    throw std::invalid_argument("boundary_point: s2 must lie in (-pi/4, pi/4)");
  Mat x = Mat::eye(4);
  double t = std::tan(s2);
  if (side == BoundarySide::Plus) {
    x(2, 0) = 1.0;
    x(3, 1) = t;
    if (stratum_of_plane(x.cols_range(0, 2), +1) != std::optional<int>(1) ||
        stratum_of_plane(x.cols_range(2, 4), -1) != std::optional<int>(0))
      throw std::logic_error("boundary_point: stratum assertion failed");
  } else {
    x(0, 2) = 1.0;
    x(1, 3) = t;
    if (stratum_of_plane(x.cols_range(0, 2), +1) != std::optional<int>(0) ||
        stratum_of_plane(x.cols_range(2, 4), -1) != std::optional<int>(1))
      throw std::logic_error("boundary_point: stratum assertion failed");
  }
  return x;
}

const std::vector<Claim>& all_claims() {
  using O = OrbitIndex;
  static const std::vector<OrbitIndex> in_s7_closure = {O::S7, O::S8, O::S9,
                                                        O::S10, O::Sop};
  static const std::vector<OrbitIndex> in_s10_closure = {O::S10, O::Sop};
  static const std::vector<Claim> claims = {
      {"3.1", O::S1, ClaimTarget::OrbitS8, BoundarySide::Plus, {O::S8}},
      {"3.2", O::S3, ClaimTarget::OrbitS9, BoundarySide::Plus, {O::S9}},
      {"3.3", O::S5, ClaimTarget::OrbitSop, BoundarySide::Plus, {O::Sop}},
      {"3.4", O::S3, ClaimTarget::ClosureS7, BoundarySide::Plus,
       in_s7_closure},
      {"3.5", O::S5, ClaimTarget::ClosureS10, BoundarySide::Plus,
       in_s10_closure},
      {"r3.1a", O::S2, ClaimTarget::OrbitS9, BoundarySide::Minus, {O::S9}},
      {"r3.1b", O::S4, ClaimTarget::OrbitS8, BoundarySide::Minus, {O::S8}},
      {"r3.1c", O::S6, ClaimTarget::OrbitSop, BoundarySide::Minus, {O::Sop}},
      {"p3.2a", O::S3, ClaimTarget::ClosureS7, BoundarySide::Plus,
       in_s7_closure},
      {"p3.2b", O::S5, ClaimTarget::ClosureS10, BoundarySide::Plus,
       in_s10_closure},
  };
  return claims;
}

const Claim& claim_by_name(const std::string& name) {
  for (const Claim& c : all_claims())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown claim '" + name + "'");
}

std::pair<double, std::vector<double>> claim_violation(const Claim& claim,
                                                       double s2,
                                                       const Mat& k) {
  Objective obj{boundary_point(claim.side, s2), representative(claim.source),
                claim.target};
  Flag4 f = obj.flag_at(k);
  return {obj.violation(f), obj.margins(f)};
}

Witness intersection_search(const Claim& claim, const SearchOptions& opt) {
  Objective obj{boundary_point(claim.side, opt.s2),
                representative(claim.source), claim.target};
  auto func = [&](const double* p) {
    double bound = 0;
    for (int i = 0; i < 8; ++i) bound = std::max(bound, std::abs(p[i]));
    if (bound > 20.0) return 1e9 + bound;  // keep exp(M) representable
    try {
      double v = obj.violation(obj.flag_at_params(p));
      return std::isfinite(v) ? v : 1e9;
    } catch (const std::exception&) {
      return 1e9;
    }
  };

  Rng rng(opt.seed);
  Witness best;
  bool have_best = false, best_feasible = false;
  long long total_evals = 0;
  for (int start = 0; start < opt.starts; ++start) {
    std::array<double, 8> x0{};
    if (start > 0)
      for (double& v : x0) v = 0.5 * rng.normal();
    NmResult res = nelder_mead(func, x0, 0.25, opt.budget);
    total_evals += res.evals;
    Mat k = k_from_params(res.x.data());
    Flag4 f = obj.flag_at_params(res.x.data());
    std::vector<double> margins = obj.margins(f);
    bool feasible =
        res.f < opt.tol &&
        std::all_of(margins.begin(), margins.end(),
                    [&](double m) { return m > opt.margin_floor; });
    bool better = !have_best || (feasible && !best_feasible) ||
                  (feasible == best_feasible && res.f < best.violation);
    if (better) {
      best.k = k;
      best.violation = res.f;
      best.margins = margins;
      best.start_index = start;
      best.flag = f;
      have_best = true;
      best_feasible = feasible;
    }
  }
  best.evaluations = total_evals;
  if (!best_feasible)
    throw NotFoundError("claim " + claim.name +
                        ": no witness within budget (best violation " +
                        std::to_string(best.violation) + ")");
  try {
    best.classified_gr = classify_gr(best.flag);
  } catch (const DegenerateError&) {
    // Closure targets contain orbit boundaries; a witness may sit exactly
    // there, where no single orbit label applies.
    best.classified_gr.reset();
  }
  if (best.classified_gr &&
      std::find(claim.allowed_gr.begin(), claim.allowed_gr.end(),
                *best.classified_gr) == claim.allowed_gr.end())
    throw NotFoundError("claim " + claim.name + ": witness classified to " +
                        gr_name(*best.classified_gr) +
                        ", outside the target set");
  return best;
}

}  // namespace flagorbits::sp2
