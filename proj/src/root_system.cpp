#include "flagorbits/root_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "flagorbits/ratlin.hpp"

namespace flagorbits {

std::string family_name(Family f) { return f == Family::B ? "B" : "C"; }

Family family_from_string(const std::string& s) {
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  throw std::invalid_argument("unknown family '" + s + "' (expected B or C)");
}

std::string Root::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    const Rat& c = coords[i];
    if (c.is_zero()) continue;
    if (!first)
      out << (c.sign() > 0 ? "+" : "-");
    else if (c.sign() < 0)
      out << "-";
    Rat a = c.sign() < 0 ? -c : c;
    if (!(a == Rat(1))) out << a.str();
    out << "e" << (i + 1);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Root parse_root(const std::string& s, int rank) {
  Root r;
  r.coords.assign(rank, Rat(0));
  size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && (isdigit(s[j]) || s[j] == '/')) ++j;
    Rat coef(1);
    if (j > i) coef = Rat::parse(s.substr(i, j - i));
    i = j;
    if (i >= s.size() || s[i] != 'e')
      throw std::invalid_argument("cannot parse root '" + s + "'");
    ++i;
    j = i;
    while (j < s.size() && isdigit(s[j])) ++j;
    if (j == i) throw std::invalid_argument("cannot parse root '" + s + "'");
    int idx = std::stoi(s.substr(i, j - i));
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("coordinate index out of range in '" + s + "'");
    r.coords[idx - 1] += Rat(sign) * coef;
    i = j;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty root string");
  return r;
}

bool RootSubset::contains(const Root& r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

namespace {

Root unit(int rank, int i, std::int64_t c) {
  Root r;
  r.coords.assign(rank, Rat(0));
  r.coords[i] = Rat(c);
  return r;
}

Root two_coord(int rank, int i, std::int64_t ci, int j, std::int64_t cj) {
  Root r;
  r.coords.assign(rank, Rat(0));
  r.coords[i] = Rat(ci);
  r.coords[j] = Rat(cj);
  return r;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank, RatVec z) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (static_cast<int>(z.size()) != rank)
    throw std::invalid_argument("Z has wrong dimension");
  for (int i = 0; i + 1 < rank; ++i)
    if (z[i] < z[i + 1])
      throw std::invalid_argument(
          "Z is not dominant: need z1 >= z2 >= ... >= 0");
  if (z[rank - 1] < Rat(0))
    throw std::invalid_argument("Z is not dominant: need z1 >= z2 >= ... >= 0");

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.z_ = std::move(z);

  std::vector<Root> pos;
  for (int r = 0; r < rank; ++r)
    for (int s = r + 1; s < rank; ++s) {
      pos.push_back(two_coord(rank, r, 1, s, -1));
      pos.push_back(two_coord(rank, r, 1, s, 1));
    }
  for (int r = 0; r < rank; ++r)
    pos.push_back(unit(rank, r, family == Family::C ? 2 : 1));

  rs.positive_ = pos;
  std::sort(rs.positive_.begin(), rs.positive_.end());
  for (const Root& a : pos) {
    rs.roots_.push_back(a);
    rs.roots_.push_back(-a);
  }
  std::sort(rs.roots_.begin(), rs.roots_.end());

  for (int i = 0; i + 1 < rank; ++i)
    rs.simple_.push_back(two_coord(rank, i, 1, i + 1, -1));
  rs.simple_.push_back(unit(rank, rank - 1, family == Family::C ? 2 : 1));

  rs.max_norm_sq_ = Rat(0);
  for (const Root& a : rs.roots_) {
    Rat n = dot(a.coords, a.coords);
    if (n > rs.max_norm_sq_) rs.max_norm_sq_ = n;
  }
  return rs;
}

bool RootSystem::contains(const Root& r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

bool RootSystem::is_positive(const Root& r) const {
  return std::binary_search(positive_.begin(), positive_.end(), r);
}

bool RootSystem::is_long(const Root& r) const {
  return dot(r.coords, r.coords) == max_norm_sq_;
}

Rat root_inner_product(const RatVec& a, const RatVec& b) { return dot(a, b); }

RootSubset noncompact_positive_roots(const RootSystem& rs) {
  RootSubset out;
  out.tag = SubsetTag::NoncompactPositive;
  for (const Root& a : rs.roots())
    if (rs.pairing_with_z(a) > Rat(0)) out.members.push_back(a);
  return out;
}

bool is_strongly_orthogonal(const RootSystem& rs, const Root& a,
                            const Root& b) {
  if (!rs.contains(a) || !rs.contains(b))
    throw std::invalid_argument("is_strongly_orthogonal: not roots");
  Root sum = a, diff = a;
  for (size_t i = 0; i < a.coords.size(); ++i) {
    sum.coords[i] = a.coords[i] + b.coords[i];
    diff.coords[i] = a.coords[i] - b.coords[i];
  }
  return !rs.contains(sum) && !rs.contains(diff);
}

RootSubset delta_theta(const RootSystem& rs, const std::vector<Root>& theta) {
  for (const Root& t : theta) {
    if (std::find(rs.simple().begin(), rs.simple().end(), t) ==
        rs.simple().end())
      throw std::invalid_argument("delta_theta: Theta must be a subset of Psi");
  }
  RootSubset out;
  out.tag = SubsetTag::DeltaTheta;
  if (theta.empty()) return out;
  std::vector<RatVec> basis;
  for (const Root& t : theta) basis.push_back(t.coords);
  for (const Root& a : rs.roots()) {
    auto c = coords_in_span(basis, a.coords);
    if (!c) continue;
    bool integral = std::all_of(c->begin(), c->end(),
                                [](const Rat& x) { return x.is_integer(); });
    if (integral) out.members.push_back(a);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Root> simple_roots_of_positive_system(const RootSystem& rs,
                                                  std::vector<Root> pos) {
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  if (pos.empty()) return {};
  std::vector<RatVec> span_basis;
  for (const Root& a : pos) span_basis.push_back(a.coords);
  auto in_pos = [&](const Root& r) {
    return std::binary_search(pos.begin(), pos.end(), r);
  };
  // Exactly one of each +/- pair of Delta ∩ span(pos).
  for (const Root& a : rs.roots()) {
    if (!in_span(span_basis, a.coords)) continue;
    bool plus = in_pos(a), minus = in_pos(-a);
    if (plus == minus)
      throw std::invalid_argument(
          "not a positive system: pair {+-" + a.str() +
          "} not represented exactly once");
  }
  // Closed under root sums.
  for (const Root& a : pos)
    for (const Root& b : pos) {
      Root s = a;
      for (size_t i = 0; i < s.coords.size(); ++i)
        s.coords[i] = a.coords[i] + b.coords[i];
      if (rs.contains(s) && !in_pos(s))
        throw std::invalid_argument(
            "not a positive system: " + a.str() + " + " + b.str() +
            " is a root outside the set");
    }
  std::vector<Root> simple;
  for (const Root& a : pos) {
    bool decomposable = false;
    for (const Root& b : pos) {
      Root c = a;
      for (size_t i = 0; i < c.coords.size(); ++i)
        c.coords[i] = a.coords[i] - b.coords[i];
      if (c == Root{RatVec(a.coords.size(), Rat(0))}) continue;
      if (in_pos(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

RatVec z_for_theta(const RootSystem& rs, const std::vector<Root>& theta) {
  const int n = rs.rank();
  RatMat a(n, RatVec(n));
  RatVec b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = rs.simple()[i].coords;
    bool in_theta = std::find(theta.begin(), theta.end(), rs.simple()[i]) !=
                    theta.end();
    b[i] = Rat(in_theta ? 0 : 1);
  }
  return solve_square(a, b);
}

}  // namespace flagorbits
