#include "flagorbits/weyl.hpp"

#include <algorithm>
#include <set>

namespace flagorbits {

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size())
    throw std::invalid_argument("WeylElement: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] < 0 || perm_[i] >= static_cast<int>(perm_.size()) ||
        seen[perm_[i]])
      throw std::invalid_argument("WeylElement: not a permutation");
    seen[perm_[i]] = true;
    if (signs_[i] != 1 && signs_[i] != -1)
      throw std::invalid_argument("WeylElement: signs must be +-1");
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> p(n), s(n, 1);
  for (int i = 0; i < n; ++i) p[i] = i;
  return WeylElement(std::move(p), std::move(s));
}

WeylElement WeylElement::longest(int n) {
  std::vector<int> p(n), s(n, -1);
  for (int i = 0; i < n; ++i) p[i] = i;
  return WeylElement(std::move(p), std::move(s));
}

WeylElement WeylElement::reflection(const RootSystem& rs, const Root& gamma) {
  if (!rs.contains(gamma))
    throw std::invalid_argument("reflection: gamma is not a root");
  const int n = rs.rank();
  Rat nn = dot(gamma.coords, gamma.coords);
  std::vector<int> perm(n, -1), signs(n, 1);
  for (int i = 0; i < n; ++i) {
    RatVec img(n, Rat(0));
    img[i] = Rat(1);
    Rat f = Rat(2) * gamma.coords[i] / nn;
    for (int j = 0; j < n; ++j) img[j] -= f * gamma.coords[j];
    int target = -1, sign = 0;
    for (int j = 0; j < n; ++j) {
      if (img[j].is_zero()) continue;
      if (target >= 0 || (!(img[j] == Rat(1)) && !(img[j] == Rat(-1))))
        throw std::invalid_argument(
            "reflection: root does not induce a signed permutation");
      target = j;
      sign = img[j] == Rat(1) ? 1 : -1;
    }
    perm[i] = target;
    signs[i] = sign;
  }
  return WeylElement(std::move(perm), std::move(signs));
}

RatVec WeylElement::apply(const RatVec& v) const {
  if (v.size() != perm_.size())
    throw std::invalid_argument("WeylElement::apply: dimension mismatch");
  RatVec out(v.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i)
    out[perm_[i]] = Rat(signs_[i]) * v[i];
  return out;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  if (n() != other.n())
    throw std::invalid_argument("compose: dimension mismatch");
  std::vector<int> p(perm_.size()), s(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) {
    p[i] = perm_[other.perm_[i]];
    s[i] = other.signs_[i] * signs_[other.perm_[i]];
  }
  return WeylElement(std::move(p), std::move(s));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size()), s(perm_.size());
  for (size_t i = 0; i < perm_.size(); ++i) {
    p[perm_[i]] = static_cast<int>(i);
    s[perm_[i]] = signs_[i];
  }
  return WeylElement(std::move(p), std::move(s));
}

bool WeylElement::is_identity() const {
  for (size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i) || signs_[i] != 1) return false;
  return true;
}

bool WeylElement::permutes_roots(const RootSystem& rs) const {
  for (const Root& a : rs.roots())
    if (!rs.contains(apply(a))) return false;
  return true;
}

ParabolicSubgroup enumerate_parabolic(const RootSystem& rs,
                                      const std::vector<Root>& theta,
                                      size_t cap) {
  for (const Root& t : theta)
    if (std::find(rs.simple().begin(), rs.simple().end(), t) ==
        rs.simple().end())
      throw std::invalid_argument(
          "enumerate_parabolic: Theta must be a subset of Psi");
  std::vector<WeylElement> gens;
  for (const Root& t : theta) gens.push_back(WeylElement::reflection(rs, t));

  std::set<WeylElement> seen;
  std::vector<WeylElement> queue{WeylElement::identity(rs.rank())};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    WeylElement w = queue[head];
    for (const WeylElement& g : gens) {
      WeylElement next = g.compose(w);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw std::invalid_argument("enumerate_parabolic: cap exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  ParabolicSubgroup out;
  out.theta = theta;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

std::vector<Root> act_on_positive_system(const WeylElement& w,
                                         const RootSystem& rs) {
  std::vector<Root> out;
  out.reserve(rs.positive().size());
  for (const Root& a : rs.positive()) out.push_back(w.apply(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flagorbits
