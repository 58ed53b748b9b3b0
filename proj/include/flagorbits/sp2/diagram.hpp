#pragma once

#include <string>
#include <vector>

#include "flagorbits/sp2/classify.hpp"

namespace flagorbits::sp2 {

/// One arrow of the orbit diagram: `from` lies in the boundary of `to`,
/// from.P_k = to.P_k, and dim(to) = dim(from) + 1.
struct DiagramEdge {
  OrbitIndex from;
  OrbitIndex to;
  int parabolic;  // 1 or 2
};

/// The twelve arrows of the Sp(2,R) orbit diagram, stored as data and
/// cross-validated numerically (dimension decrements, saturation sampling).
const std::vector<DiagramEdge>& closure_diagram();

/// Orbit labels that right multiplication by P_k can reach from the `from`
/// orbit of the edge, i.e. the orbit decomposition of the saturation
/// from.P_k = to.P_k.
const std::vector<OrbitIndex>& saturation_orbits(const DiagramEdge& e);

/// DOT rendering: one node per orbit, one labeled edge per arrow.
std::string diagram_dot();

/// Complex dimension of the K_C-orbit through the table representative:
/// rank of the map from Lie(K_C) into the ambient tangent space of the flag
/// manifold at that point.
int orbit_dimension(OrbitIndex label, const ClassifierParams& p = {});

/// Edge labels along a diagram path from `source` up to Sop; length is
/// 4 - dim(source). Deterministic: the lowest-index successor is taken.
std::vector<int> lift_sequence(OrbitIndex source);

}  // namespace flagorbits::sp2
