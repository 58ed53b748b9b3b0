// Python bindings for the main operations: exact root-system / descriptor
// calculus and the Sp(2,C) verifier. Structured results cross the boundary
// in the same JSON shapes the CLI emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "flagorbits/json_io.hpp"
#include "flagorbits/orbit_calculus.hpp"
#include "flagorbits/sp2/diagram.hpp"
#include "flagorbits/sp2/witness.hpp"

namespace py = pybind11;
using namespace flagorbits;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

RootSystem build_rs(const std::string& family, int rank,
                    const std::vector<std::string>& z) {
  Family fam = family_from_string(family);
  RatVec zv;
  if (z.empty()) {
    zv.assign(rank, Rat(0));
    if (fam == Family::C)
      zv.assign(rank, Rat(1));
    else
      zv[0] = Rat(1);
  } else {
    for (const auto& s : z) zv.push_back(Rat::parse(s));
  }
  return RootSystem::build(fam, rank, std::move(zv));
}

std::vector<Root> parse_many(const std::vector<std::string>& names, int rank) {
  std::vector<Root> out;
  for (const auto& s : names) out.push_back(parse_root(s, rank));
  return out;
}

OrbitDescriptor make_desc(const RootSystem& rs,
                          const std::vector<std::string>& gammas,
                          const std::vector<int>& w_signed,
                          const std::vector<std::string>& theta) {
  WeylElement w = WeylElement::identity(rs.rank());
  if (!w_signed.empty()) {
    std::vector<int> perm, signs;
    for (int v : w_signed) {
      perm.push_back(std::abs(v) - 1);
      signs.push_back(v < 0 ? -1 : 1);
    }
    w = WeylElement(std::move(perm), std::move(signs));
  }
  return make_descriptor(rs, parse_many(gammas, rs.rank()), std::move(w),
                         parse_many(theta, rs.rank()));
}

RealForm form_for(const RootSystem& rs, const std::string& name) {
  if (!name.empty()) return real_form_from_string(name);
  return rs.family() == Family::C ? RealForm::Sp : RealForm::So2Odd;
}

}  // namespace

PYBIND11_MODULE(flagorbits, m) {
  m.doc() =
      "Orbit calculus on flag manifolds: exact root-system layer plus the "
      "Sp(2,C) numerical verifier";

  m.def(
      "root_system",
      [](const std::string& family, int rank,
         const std::vector<std::string>& z) {
        RootSystem rs = build_rs(family, rank, z);
        json out = root_system_to_json(rs);
        out["noncompactPositive"] =
            root_subset_to_json(noncompact_positive_roots(rs))["members"];
        return to_py(out);
      },
      py::arg("family"), py::arg("rank"),
      py::arg("z") = std::vector<std::string>{});

  m.def(
      "weyl_order",
      [](const std::string& family, int rank,
         const std::vector<std::string>& theta) {
        RootSystem rs = build_rs(family, rank, {});
        std::vector<Root> th = theta.empty() ? rs.simple()
                                             : parse_many(theta, rank);
        return enumerate_parabolic(rs, th).elements.size();
      },
      py::arg("family"), py::arg("rank"),
      py::arg("theta") = std::vector<std::string>{});

  m.def(
      "normalize",
      [](const std::string& family, int rank,
         const std::vector<std::string>& gammas,
         const std::vector<int>& w, const std::vector<std::string>& theta) {
        RootSystem rs = build_rs(family, rank, {});
        return to_py(descriptor_to_json(
            normalize_descriptor(rs, make_desc(rs, gammas, w, theta))));
      },
      py::arg("family"), py::arg("rank"), py::arg("gammas"),
      py::arg("w") = std::vector<int>{},
      py::arg("theta") = std::vector<std::string>{});

  m.def(
      "certify_nonclosed",
      [](const std::string& family, int rank,
         const std::vector<std::string>& gammas,
         const std::vector<int>& w,
         const std::vector<std::string>& theta) -> py::object {
        RootSystem rs = build_rs(family, rank, {});
        auto j = certify_nonclosed(rs, make_desc(rs, gammas, w, theta));
        if (!j) return py::none();
        return py::int_(*j);
      },
      py::arg("family"), py::arg("rank"), py::arg("gammas"),
      py::arg("w") = std::vector<int>{},
      py::arg("theta") = std::vector<std::string>{});

  m.def(
      "boundary_orbits",
      [](const std::string& family, int rank,
         const std::vector<std::string>& gammas, const std::vector<int>& w,
         const std::vector<std::string>& theta, const std::string& real_form) {
        RootSystem rs = build_rs(family, rank, {});
        OrbitDescriptor n =
            normalize_descriptor(rs, make_desc(rs, gammas, w, theta));
        RealForm form = form_for(rs, real_form);
        json out;
        out["normalized"] = descriptor_to_json(n);
        out["s1"] = descriptor_to_json(boundary_orbit_s1(rs, n, form));
        out["s2"] = descriptor_to_json(boundary_orbit_s2(rs, n, form));
        return to_py(out);
      },
      py::arg("family"), py::arg("rank"), py::arg("gammas"),
      py::arg("w") = std::vector<int>{},
      py::arg("theta") = std::vector<std::string>{},
      py::arg("real_form") = std::string{});

  m.def(
      "separation_certificate",
      [](const std::string& family, int rank,
         const std::vector<std::string>& gammas, const std::vector<int>& w,
         const std::vector<std::string>& theta, const std::string& real_form) {
        RootSystem rs = build_rs(family, rank, {});
        OrbitDescriptor n =
            normalize_descriptor(rs, make_desc(rs, gammas, w, theta));
        OrbitDescriptor tilde =
            boundary_orbit_s1(rs, n, form_for(rs, real_form));
        SeparationCertificate cert = separation_inequality(
            rs, n, tilde, z_for_theta(rs, n.theta),
            enumerate_parabolic(rs, n.theta));
        return to_py(certificate_to_json(cert));
      },
      py::arg("family"), py::arg("rank"), py::arg("gammas"),
      py::arg("w") = std::vector<int>{},
      py::arg("theta") = std::vector<std::string>{},
      py::arg("real_form") = std::string{});

  // ---- Sp(2,C) verifier ----
  m.def("verify_duality_table", [] {
    return to_py(duality_report_to_json(sp2::verify_duality_table()));
  });

  m.def("orbit_dimensions", [] {
    json out;
    for (sp2::OrbitIndex s : sp2::kAllOrbits)
      out[sp2::kc_name(s)] = sp2::orbit_dimension(s);
    return to_py(out);
  });

  m.def("diagram_edges", [] { return to_py(diagram_to_json()); });
  m.def("diagram_dot", [] { return sp2::diagram_dot(); });

  m.def(
      "lift_sequence",
      [](const std::string& source) {
        return sp2::lift_sequence(sp2::orbit_from_string(source));
      },
      py::arg("source"));

  m.def(
      "classify",
      [](const py::object& flag) {
        py::module_ pyjson = py::module_::import("json");
        json j = json::parse(
            pyjson.attr("dumps")(flag).cast<std::string>());
        sp2::Flag4 f = flag_from_json(j);
        return py::make_tuple(sp2::kc_name(sp2::classify_kc(f)),
                              sp2::gr_name(sp2::classify_gr(f)));
      },
      py::arg("flag"));

  m.def(
      "flag_of_representative",
      [](const std::string& orbit) {
        return to_py(flag_to_json(
            sp2::flag_of(sp2::representative(sp2::orbit_from_string(orbit)))));
      },
      py::arg("orbit"));

  m.def(
      "boundary_point",
      [](double s2, bool mirror) {
        return to_py(matrix_to_json(sp2::boundary_point(
            mirror ? sp2::BoundarySide::Minus : sp2::BoundarySide::Plus, s2)));
      },
      py::arg("s2") = 0.0, py::arg("mirror") = false);

  m.def(
      "search_claim",
      [](const std::string& claim, std::uint64_t seed, double s2, int budget,
         double tol) {
        sp2::SearchOptions opt;
        opt.seed = seed;
        opt.s2 = s2;
        opt.budget = budget;
        opt.tol = tol;
        sp2::Witness w =
            sp2::intersection_search(sp2::claim_by_name(claim), opt);
        json out = witness_to_json(w);
        out["claim"] = claim;
        out["s2"] = s2;
        return to_py(out);
      },
      py::arg("claim"), py::arg("seed") = 12345, py::arg("s2") = 0.0,
      py::arg("budget") = 2000, py::arg("tol") = 1e-6);

  py::register_exception<NotNonClosedError>(m, "NotNonClosedError");
  py::register_exception<DegenerateError>(m, "DegenerateError");
  py::register_exception<NotFoundError>(m, "NotFoundError");
}
