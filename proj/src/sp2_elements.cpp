#include "flagorbits/sp2/elements.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace flagorbits::sp2 {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string kc_name(OrbitIndex s) {
  switch (s) {
    case OrbitIndex::Sop:
      return "Sop";
    default:
      return "S" + std::to_string(static_cast<int>(s) + 1);
  }
}

std::string gr_name(OrbitIndex s) {
  if (s == OrbitIndex::Sop) return "S'op";
  return "S'" + std::to_string(static_cast<int>(s) + 1);
}

OrbitIndex orbit_from_string(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  s.erase(std::remove(s.begin(), s.end(), '\''), s.end());
  if (s == "sop" || s == "op") return OrbitIndex::Sop;
  if (s.size() >= 2 && s[0] == 's') {
    int idx = std::stoi(s.substr(1));
    if (idx >= 1 && idx <= 10) return static_cast<OrbitIndex>(idx - 1);
  }
  throw std::invalid_argument("unknown orbit label '" + s + "'");
}

Mat symplectic_form() {
  Mat j(4, 4);
  j(0, 2) = -1.0;
  j(1, 3) = -1.0;
  j(2, 0) = 1.0;
  j(3, 1) = 1.0;
  return j;
}

Mat hermitian_form() {
  Mat h(4, 4);
  h(0, 0) = 1.0;
  h(1, 1) = 1.0;
  h(2, 2) = -1.0;
  h(3, 3) = -1.0;
  return h;
}

Mat t1(double s) {
  Mat m = Mat::eye(4);
  m(0, 0) = std::cos(s);
  m(0, 2) = -std::sin(s);
  m(2, 0) = std::sin(s);
  m(2, 2) = std::cos(s);
  return m;
}

Mat t2(double s) {
  Mat m = Mat::eye(4);
  m(1, 1) = std::cos(s);
  m(1, 3) = -std::sin(s);
  m(3, 1) = std::sin(s);
  m(3, 3) = std::cos(s);
  return m;
}

Mat c_beta1() { return t1(kPi / 4); }
Mat c_beta2() { return t2(kPi / 4); }
Mat w_beta1() { return t1(kPi / 2); }
Mat w_beta2() { return t2(kPi / 2); }

Mat c_delta() {
  // exp (pi/4)(X_delta - bar(X_delta)), X_delta = -(E14 + E23): rotation by
  // pi/4 in the (e1,e4) and (e2,e3) planes.
  double r = 1.0 / std::sqrt(2.0);
  Mat m(4, 4);
  m(0, 0) = r;
  m(0, 3) = -r;
  m(1, 1) = r;
  m(1, 2) = -r;
  m(2, 1) = r;
  m(2, 2) = r;
  m(3, 0) = r;
  m(3, 3) = r;
  return m;
}

Mat representative(OrbitIndex s) {
  switch (s) {
    case OrbitIndex::S1:
      return Mat::eye(4);
    case OrbitIndex::S2:
      return w_beta1() * w_beta2();
    case OrbitIndex::S3:
      return w_beta2();
    case OrbitIndex::S4:
      return w_beta1();
    case OrbitIndex::S5:
      return c_beta2();
    case OrbitIndex::S6:
      return c_beta2() * w_beta1();
    case OrbitIndex::S7:
      return c_delta() * w_beta2();
    case OrbitIndex::S8:
      return c_beta1();
    case OrbitIndex::S9:
      return c_beta1() * w_beta2();
    case OrbitIndex::S10:
      return c_delta();
    case OrbitIndex::Sop:
      return c_beta1() * c_beta2();
  }
  throw std::logic_error("unreachable");
}

bool is_symplectic(const Mat& g, double tol) {
  Mat j = symplectic_form();
  return (g.transpose() * j * g - j).max_abs() <= tol;
}

bool is_in_u22(const Mat& g, double tol) {
  Mat h = hermitian_form();
  return (g.dagger() * h * g - h).max_abs() <= tol;
}

Mat embed_gl2(const Mat& k) {
  Mat out(4, 4);
  Mat kinvt = inverse(k).transpose();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      out(r, c) = k(r, c);
      out(r + 2, c + 2) = kinvt(r, c);
    }
  return out;
}

Mat random_kc(Rng& rng, double scale) {
  Mat m(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = scale * rng.cnormal();
  return embed_gl2(expm(m));
}

Mat random_borel(Rng& rng, double scale) {
  // Lie(B): A upper triangular, S symmetric, blocks [[A, S], [0, -A^T]].
  Mat x(4, 4);
  cplx a11 = scale * rng.cnormal(), a12 = scale * rng.cnormal(),
       a22 = scale * rng.cnormal();
  cplx s11 = scale * rng.cnormal(), s12 = scale * rng.cnormal(),
       s22 = scale * rng.cnormal();
  x(0, 0) = a11;
  x(0, 1) = a12;
  x(1, 1) = a22;
  x(2, 2) = -a11;
  x(3, 2) = -a12;
  x(3, 3) = -a22;
  x(0, 2) = s11;
  x(0, 3) = s12;
  x(1, 2) = s12;
  x(1, 3) = s22;
  return expm(x);
}

Mat random_sp2r(Rng& rng, double scale) {
  // sp(4,R) in this model: [[A, S], [S*, -A^T]] with A skew-Hermitian and
  // S complex symmetric.
  double al = scale * rng.normal(), be = scale * rng.normal();
  cplx ze = scale * rng.cnormal();
  cplx s11 = scale * rng.cnormal(), s12 = scale * rng.cnormal(),
       s22 = scale * rng.cnormal();
  Mat x(4, 4);
  x(0, 0) = cplx{0, al};
  x(0, 1) = ze;
  x(1, 0) = -std::conj(ze);
  x(1, 1) = cplx{0, be};
  x(0, 2) = s11;
  x(0, 3) = s12;
  x(1, 2) = s12;
  x(1, 3) = s22;
  x(2, 0) = std::conj(s11);
  x(2, 1) = std::conj(s12);
  x(3, 0) = std::conj(s12);
  x(3, 1) = std::conj(s22);
  // -A^T block.
  x(2, 2) = -x(0, 0);
  x(2, 3) = -x(1, 0);
  x(3, 2) = -x(0, 1);
  x(3, 3) = -x(1, 1);
  return expm(x);
}

Mat random_parabolic(Rng& rng, int index, double scale) {
  Mat x(4, 4);
  cplx a11 = scale * rng.cnormal(), a12 = scale * rng.cnormal(),
       a21 = scale * rng.cnormal(), a22 = scale * rng.cnormal();
  cplx s11 = scale * rng.cnormal(), s12 = scale * rng.cnormal(),
       s22 = scale * rng.cnormal();
  cplx t22 = scale * rng.cnormal();
  if (index == 1) {
    // Stabilizer of U+: [[A, S], [0, -A^T]], A arbitrary.
  } else if (index == 2) {
    // Stabilizer of C e1: column 1 proportional to e1.
    a21 = 0.0;
  } else {
    throw std::invalid_argument("parabolic index must be 1 or 2");
  }
  x(0, 0) = a11;
  x(0, 1) = a12;
  x(1, 0) = a21;
  x(1, 1) = a22;
  x(2, 2) = -a11;
  x(2, 3) = -a21;
  x(3, 2) = -a12;
  x(3, 3) = -a22;
  x(0, 2) = s11;
  x(0, 3) = s12;
  x(1, 2) = s12;
  x(1, 3) = s22;
  if (index == 2) {
    // T block: only T(2,2) survives e1-stabilization.
    x(3, 1) = t22;
  }
  return expm(x);
}

Mat cayley(const Root& gamma) {
  if (gamma.coords.size() != 2)
    throw std::invalid_argument("cayley: C2 roots only");
  const Rat& c1 = gamma.coords[0];
  const Rat& c2 = gamma.coords[1];
  if (c1 == Rat(2) && c2 == Rat(0)) return c_beta1();
  if (c1 == Rat(0) && c2 == Rat(2)) return c_beta2();
  if (c1 == Rat(1) && c2 == Rat(1)) return c_delta();
  throw std::invalid_argument("cayley: " + gamma.str() +
                              " is not a noncompact positive root of C2");
}

Mat lift_weyl(const WeylElement& w) {
  if (w.n() != 2) throw std::invalid_argument("lift_weyl: C2 elements only");
  RootSystem c2 = RootSystem::build(Family::C, 2, {Rat(1), Rat(1)});
  Mat swap2(2, 2);
  swap2(0, 1) = 1.0;
  swap2(1, 0) = 1.0;
  struct Gen {
    WeylElement w;
    Mat m;
  };
  std::vector<Gen> gens;
  gens.push_back({WeylElement::reflection(c2, parse_root("2e1", 2)), w_beta1()});
  gens.push_back({WeylElement::reflection(c2, parse_root("2e2", 2)), w_beta2()});
  gens.push_back(
      {WeylElement::reflection(c2, parse_root("e1-e2", 2)), embed_gl2(swap2)});
  gens.push_back({WeylElement::reflection(c2, parse_root("e1+e2", 2)),
                  c_delta() * c_delta()});

  std::map<WeylElement, Mat> lift;
  std::vector<WeylElement> queue{WeylElement::identity(2)};
  lift.emplace(queue[0], Mat::eye(4));
  for (size_t head = 0; head < queue.size(); ++head) {
    WeylElement cur = queue[head];
    if (cur == w) return lift.at(cur);
    for (const Gen& g : gens) {
      WeylElement next = g.w.compose(cur);
      if (lift.emplace(next, g.m * lift.at(cur)).second) queue.push_back(next);
    }
  }
  return lift.at(w);  // W(C2) is exhausted above; this resolves or throws
}

Mat descriptor_matrix(const RootSystem& rs, const OrbitDescriptor& d) {
  if (rs.family() != Family::C || rs.rank() != 2)
    throw std::invalid_argument("descriptor_matrix: C2 descriptors only");
  Mat g = Mat::eye(4);
  for (const Root& gm : d.effective_gammas()) g = g * cayley(gm);
  return g * lift_weyl(d.w);
}

}  // namespace flagorbits::sp2
