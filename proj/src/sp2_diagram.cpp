#include "flagorbits/sp2/diagram.hpp"

#include <map>
#include <sstream>

namespace flagorbits::sp2 {

const std::vector<DiagramEdge>& closure_diagram() {
  using O = OrbitIndex;
  static const std::vector<DiagramEdge> edges = {
      {O::S1, O::S5, 2},  {O::S3, O::S5, 2},   {O::S3, O::S7, 1},
      {O::S4, O::S7, 1},  {O::S4, O::S6, 2},   {O::S2, O::S6, 2},
      {O::S5, O::S8, 1},  {O::S7, O::S10, 2},  {O::S6, O::S9, 1},
      {O::S8, O::Sop, 2}, {O::S9, O::Sop, 2},  {O::S10, O::Sop, 1},
  };
  return edges;
}

const std::vector<OrbitIndex>& saturation_orbits(const DiagramEdge& e) {
  using O = OrbitIndex;
  // Orbit decomposition of the P_k-saturation, worked out from the orbit
  // membership conditions: label 2 fixes V1 and frees V2, label 1 fixes V2
  // and frees V1.
  static const std::vector<OrbitIndex> v1_in_uplus = {O::S1, O::S3, O::S5};
  static const std::vector<OrbitIndex> v1_in_uminus = {O::S2, O::S4, O::S6};
  static const std::vector<OrbitIndex> v1_mixed_tv0 = {O::S7, O::S10};
  static const std::vector<OrbitIndex> v1_mixed_tvnz = {O::S8, O::S9, O::Sop};
  static const std::vector<OrbitIndex> v2_both = {O::S3, O::S4, O::S7};
  static const std::vector<OrbitIndex> v2_plus = {O::S5, O::S8};
  static const std::vector<OrbitIndex> v2_minus = {O::S6, O::S9};
  static const std::vector<OrbitIndex> v2_neither = {O::S10, O::Sop};
  if (e.parabolic == 2) {
    switch (e.from) {
      case O::S1:
      case O::S3:
        return v1_in_uplus;
      case O::S2:
      case O::S4:
        return v1_in_uminus;
      case O::S7:
        return v1_mixed_tv0;
      case O::S8:
      case O::S9:
        return v1_mixed_tvnz;
      default:
        break;
    }
  } else {
    switch (e.from) {
      case O::S3:
      case O::S4:
        return v2_both;
      case O::S5:
        return v2_plus;
      case O::S6:
        return v2_minus;
      case O::S10:
        return v2_neither;
      default:
        break;
    }
  }
  throw std::invalid_argument("saturation_orbits: not a diagram edge");
}

std::string diagram_dot() {
  std::ostringstream out;
  out << "digraph closure {\n";
  for (OrbitIndex s : kAllOrbits) out << "  " << kc_name(s) << ";\n";
  for (const DiagramEdge& e : closure_diagram())
    out << "  " << kc_name(e.from) << " -> " << kc_name(e.to) << " [label=\""
        << e.parabolic << "\"];\n";
  out << "}\n";
  return out.str();
}

int orbit_dimension(OrbitIndex label, const ClassifierParams& p) {
  Flag4 f = flag_of(representative(label));
  Mat q1 = orthonormal_columns(f.v1);
  Mat q2 = orthonormal_columns(f.v2);
  Mat comp1 = orthonormal_complement(q1);  // 4x3
  Mat comp2 = orthonormal_complement(q2);  // 4x2

  // Columns: images of the gl(2) basis E11, E12, E21, E22 embedded as
  // diag(E, -E^T), expressed in Hom(V1, C^4/V1) + Hom(V2, C^4/V2).
  Mat tangent(7, 4);
  int col = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Mat x(4, 4);
      x(a, b) = 1.0;
      x(2 + b, 2 + a) = -1.0;
      int row = 0;
      Mat xv = x * q1;
      for (int r = 0; r < 3; ++r) {
        cplx entry{};
        for (int i = 0; i < 4; ++i)
          entry += std::conj(comp1(i, r)) * xv(i, 0);
        tangent(row++, col) = entry;
      }
      for (int c2 = 0; c2 < 2; ++c2) {
        Mat xw = x * q2.col(c2);
        for (int r = 0; r < 2; ++r) {
          cplx entry{};
          for (int i = 0; i < 4; ++i)
            entry += std::conj(comp2(i, r)) * xw(i, 0);
          tangent(row++, col) = entry;
        }
      }
      ++col;
    }
  return rank_with_gap(tangent, p.tol, p.gap);
}

std::vector<int> lift_sequence(OrbitIndex source) {
  if (source == OrbitIndex::Sop)
    throw std::invalid_argument("lift_sequence: source must not be Sop");
  std::vector<int> labels;
  OrbitIndex cur = source;
  while (cur != OrbitIndex::Sop) {
    const DiagramEdge* next = nullptr;
    for (const DiagramEdge& e : closure_diagram())
      if (e.from == cur && (!next || e.to < next->to)) next = &e;
    if (!next) throw std::logic_error("lift_sequence: dead end");
    labels.push_back(next->parabolic);
    cur = next->to;
  }
  return labels;
}

}  // namespace flagorbits::sp2
