#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagorbits/rng.hpp"
#include "flagorbits/weyl.hpp"

using namespace flagorbits;

namespace {

RootSystem c(int l) { return RootSystem::build(Family::C, l, RatVec(l, Rat(1))); }

Root rt(const RootSystem& rs, const std::string& s) {
  return parse_root(s, rs.rank());
}

}  // namespace

TEST_CASE("reflection basics") {
  RootSystem rs = c(2);
  WeylElement w1 = WeylElement::reflection(rs, rt(rs, "2e1"));
  CHECK(w1.apply(rt(rs, "e1+e2")) == rt(rs, "-e1+e2"));
  WeylElement swap = WeylElement::reflection(rs, rt(rs, "e1-e2"));
  CHECK(swap.apply(RatVec{Rat(3), Rat(5)}) == RatVec{Rat(5), Rat(3)});
  CHECK(w1.compose(w1).is_identity());
}

TEST_CASE("w_{2e2} image of the positive system") {
  RootSystem rs = c(2);
  WeylElement w2 = WeylElement::reflection(rs, rt(rs, "2e2"));
  std::vector<Root> img = act_on_positive_system(w2, rs);
  std::vector<Root> expect = {rt(rs, "2e1"), rt(rs, "e1+e2"), rt(rs, "e1-e2"),
                              rt(rs, "-2e2")};
  std::sort(expect.begin(), expect.end());
  CHECK(img == expect);
  CHECK(std::binary_search(img.begin(), img.end(), rt(rs, "e1+e2")));
  CHECK(std::binary_search(img.begin(), img.end(), rt(rs, "2e1")));
  CHECK_FALSE(std::binary_search(img.begin(), img.end(), rt(rs, "2e2")));
}

TEST_CASE("sign-flip composition and identity action") {
  RootSystem rs = c(2);
  WeylElement w1 = WeylElement::reflection(rs, rt(rs, "2e1"));
  WeylElement w2 = WeylElement::reflection(rs, rt(rs, "2e2"));
  CHECK(w1.compose(w2).apply(RatVec{Rat(3), Rat(7)}) ==
        RatVec{Rat(-3), Rat(-7)});
  CHECK(act_on_positive_system(WeylElement::identity(2), rs) == rs.positive());
  // w0 Delta+ = -Delta+.
  std::vector<Root> neg;
  for (const Root& a : rs.positive()) neg.push_back(-a);
  std::sort(neg.begin(), neg.end());
  CHECK(act_on_positive_system(WeylElement::longest(2), rs) == neg);
}

TEST_CASE("inverse o w = identity for random words in W(C4)") {
  RootSystem rs = c(4);
  Rng rng(20240817);
  std::vector<WeylElement> gens;
  for (const Root& s : rs.simple())
    gens.push_back(WeylElement::reflection(rs, s));
  for (int trial = 0; trial < 100; ++trial) {
    WeylElement w = WeylElement::identity(4);
    int len = 1 + static_cast<int>(rng.next_u64() % 12);
    for (int i = 0; i < len; ++i)
      w = gens[rng.next_u64() % gens.size()].compose(w);
    CHECK(w.inverse().compose(w).is_identity());
    CHECK(w.compose(w.inverse()).is_identity());
  }
}

TEST_CASE("parabolic subgroup orders") {
  RootSystem rs = c(2);
  CHECK(enumerate_parabolic(rs, {rt(rs, "e1-e2")}).elements.size() == 2);
  CHECK(enumerate_parabolic(rs, rs.simple()).elements.size() == 8);
  CHECK(enumerate_parabolic(rs, {}).elements.size() == 1);
}

TEST_CASE("|W(C_l)| = 2^l l! for l <= 4") {
  size_t expect = 1;
  for (int l = 1; l <= 4; ++l) {
    expect = 1;
    for (int i = 1; i <= l; ++i) expect *= 2 * i;  // 2^l * l!
    RootSystem rs = c(l);
    CHECK(enumerate_parabolic(rs, rs.simple()).elements.size() == expect);
  }
}

TEST_CASE("every Weyl element permutes the roots (rank <= 4)") {
  for (int l = 2; l <= 4; ++l) {
    RootSystem rs = c(l);
    for (const WeylElement& w :
         enumerate_parabolic(rs, rs.simple()).elements)
      CHECK(w.permutes_roots(rs));
  }
}

TEST_CASE("reflections preserve the dot product (exhaustive, rank <= 3)") {
  for (int l = 2; l <= 3; ++l) {
    RootSystem rs = c(l);
    for (const Root& g : rs.positive()) {
      WeylElement w = WeylElement::reflection(rs, g);
      for (const Root& a : rs.roots())
        for (const Root& b : rs.roots())
          CHECK(dot(w.apply(a).coords, w.apply(b).coords) ==
                dot(a.coords, b.coords));
    }
  }
}

TEST_CASE("W_Theta stabilizes Delta_Theta (C2 and C3)") {
  for (int l = 2; l <= 3; ++l) {
    RootSystem rs = c(l);
    for (int mask = 0; mask < (1 << l); ++mask) {
      std::vector<Root> theta;
      for (int i = 0; i < l; ++i)
        if (mask & (1 << i)) theta.push_back(rs.simple()[i]);
      RootSubset dt = delta_theta(rs, theta);
      for (const WeylElement& w : enumerate_parabolic(rs, theta).elements) {
        std::set<Root> image;
        for (const Root& a : dt.members) image.insert(w.apply(a));
        CHECK(image == std::set<Root>(dt.members.begin(), dt.members.end()));
      }
    }
  }
}
