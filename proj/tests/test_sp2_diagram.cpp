#include <doctest.h>

#include <map>
#include <regex>

#include "flagorbits/orbit_calculus.hpp"
#include "flagorbits/sp2/diagram.hpp"
#include "flagorbits/sp2/witness.hpp"

using namespace flagorbits;
using namespace flagorbits::sp2;

TEST_CASE("diagram data") {
  const auto& edges = closure_diagram();
  CHECK(edges.size() == 12);
  bool found = false;
  for (const auto& e : edges)
    if (e.from == OrbitIndex::S10 && e.to == OrbitIndex::Sop)
      found = (e.parabolic == 1);
  CHECK(found);
}

TEST_CASE("DOT output round-trips the edge list") {
  std::string dot = diagram_dot();
  CHECK(dot.find("digraph") == 0);
  std::regex edge_re(R"((S(?:\d+|op)) -> (S(?:\d+|op)) \[label=\"(\d)\"\];)");
  auto begin = std::sregex_iterator(dot.begin(), dot.end(), edge_re);
  std::vector<std::tuple<std::string, std::string, int>> parsed;
  for (auto it = begin; it != std::sregex_iterator(); ++it)
    parsed.emplace_back((*it)[1], (*it)[2], std::stoi((*it)[3]));
  CHECK(parsed.size() == 12);
  for (size_t i = 0; i < parsed.size(); ++i) {
    const DiagramEdge& e = closure_diagram()[i];
    CHECK(std::get<0>(parsed[i]) == kc_name(e.from));
    CHECK(std::get<1>(parsed[i]) == kc_name(e.to));
    CHECK(std::get<2>(parsed[i]) == e.parabolic);
  }
}

TEST_CASE("numerical orbit dimensions") {
  std::map<OrbitIndex, int> expect = {
      {OrbitIndex::S1, 1},  {OrbitIndex::S2, 1},  {OrbitIndex::S3, 1},
      {OrbitIndex::S4, 1},  {OrbitIndex::S5, 2},  {OrbitIndex::S6, 2},
      {OrbitIndex::S7, 2},  {OrbitIndex::S8, 3},  {OrbitIndex::S9, 3},
      {OrbitIndex::S10, 3}, {OrbitIndex::Sop, 4},
  };
  for (const auto& [label, dim] : expect) CHECK(orbit_dimension(label) == dim);
  for (const DiagramEdge& e : closure_diagram())
    CHECK(orbit_dimension(e.to) == orbit_dimension(e.from) + 1);
}

TEST_CASE("saturation sampling stays inside the allowed orbit sets") {
  Rng rng(424242);
  for (const DiagramEdge& e : closure_diagram()) {
    const auto& allowed = saturation_orbits(e);
    Mat g = representative(e.from);
    int hits_to = 0;
    for (int i = 0; i < 60; ++i) {
      Mat p = random_parabolic(rng, e.parabolic);
      OrbitIndex got = classify_kc(flag_of(g * p));
      CHECK(std::find(allowed.begin(), allowed.end(), got) != allowed.end());
      hits_to += got == e.to;
    }
    // Generic samples land in the dense target orbit.
    CHECK(hits_to > 30);
  }
}

TEST_CASE("parabolic samplers stabilize what they should") {
  Rng rng(5150);
  for (int i = 0; i < 20; ++i) {
    Mat p1 = random_parabolic(rng, 1);
    CHECK(is_symplectic(p1, 1e-9));
    // Stabilizes U+ = span(e1, e2): lower-left block vanishes.
    for (int r = 2; r < 4; ++r)
      for (int c = 0; c < 2; ++c) CHECK(std::abs(p1(r, c)) < 1e-12);
    Mat p2 = random_parabolic(rng, 2);
    CHECK(is_symplectic(p2, 1e-9));
    for (int r = 1; r < 4; ++r) CHECK(std::abs(p2(r, 0)) < 1e-12);
  }
}

TEST_CASE("lift sequences walk the diagram to Sop") {
  CHECK(lift_sequence(OrbitIndex::S1) == std::vector<int>{2, 1, 2});
  CHECK(lift_sequence(OrbitIndex::S7) == std::vector<int>{2, 1});
  CHECK(lift_sequence(OrbitIndex::S10) == std::vector<int>{1});
  for (OrbitIndex s : kAllOrbits) {
    if (s == OrbitIndex::Sop) continue;
    CHECK(lift_sequence(s).size() ==
          static_cast<size_t>(4 - orbit_dimension(s)));
  }
  CHECK_THROWS_AS(lift_sequence(OrbitIndex::Sop), std::invalid_argument);
}

TEST_CASE("boundary descriptors land on the claimed table orbits") {
  // The symbolic boundary cosets realized as matrices classify to the
  // expected diagram labels, S~1 and S~2 alike.
  RootSystem rs = RootSystem::build(Family::C, 2, {Rat(1), Rat(1)});
  auto rt = [&](const char* s) { return parse_root(s, 2); };
  WeylElement e = WeylElement::identity(2);
  WeylElement w2 = WeylElement::reflection(rs, rt("2e2"));
  struct Case {
    OrbitDescriptor source;
    OrbitIndex s1_label;
    OrbitIndex s2_label;
  };
  std::vector<Case> cases = {
      {make_descriptor(rs, {rt("2e1")}, e, {}), OrbitIndex::S1,
       OrbitIndex::S4},
      {make_descriptor(rs, {rt("2e1")}, w2, {}), OrbitIndex::S3,
       OrbitIndex::S2},
      {make_descriptor(rs, {rt("2e1"), rt("2e2")}, e, {}), OrbitIndex::S5,
       OrbitIndex::S6},
      {make_descriptor(rs, {rt("e1+e2")}, w2, {}), OrbitIndex::S3,
       OrbitIndex::S4},
      {make_descriptor(rs, {rt("e1+e2")}, e, {}), OrbitIndex::S5,
       OrbitIndex::S6},
  };
  for (const Case& c : cases) {
    OrbitDescriptor t1d = boundary_orbit_s1(rs, c.source, RealForm::Sp);
    OrbitDescriptor t2d = boundary_orbit_s2(rs, c.source, RealForm::Sp);
    CHECK(classify_kc(flag_of(descriptor_matrix(rs, t1d))) == c.s1_label);
    CHECK(classify_kc(flag_of(descriptor_matrix(rs, t2d))) == c.s2_label);
    // The boundary coset has strictly smaller dimension than the source.
    OrbitIndex src = classify_kc(flag_of(descriptor_matrix(rs, c.source)));
    OrbitIndex tgt1 = classify_kc(flag_of(descriptor_matrix(rs, t1d)));
    CHECK(orbit_dimension(src) > orbit_dimension(tgt1));
  }
}
