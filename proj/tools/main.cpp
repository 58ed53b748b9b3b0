// flagorbits command line: exact root-system/Weyl/orbit-descriptor
// computations and the Sp(2,C) flag-manifold verifier.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "flagorbits/json_io.hpp"
#include "flagorbits/orbit_calculus.hpp"
#include "flagorbits/sp2/diagram.hpp"
#include "flagorbits/sp2/witness.hpp"

using namespace flagorbits;
using nlohmann::json;

namespace {

struct ExactArgs {
  std::string family = "C";
  int rank = 2;
  std::string z;       // comma separated rationals; default depends on family
  std::string gamma;   // comma separated root strings
  std::string w;       // signed permutation "1,-2"
  std::string theta;   // comma separated simple-root strings
  std::string real_form;  // default from family
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

RootSystem build_rs(const ExactArgs& a) {
  Family fam = family_from_string(a.family);
  RatVec z;
  if (a.z.empty()) {
    z.assign(a.rank, Rat(0));
    if (fam == Family::C)
      z.assign(a.rank, Rat(1));
    else
      z[0] = Rat(1);
  } else {
    for (const std::string& tok : split(a.z, ','))
      z.push_back(Rat::parse(tok));
  }
  return RootSystem::build(fam, a.rank, std::move(z));
}

std::vector<Root> parse_roots(const std::string& csv, int rank) {
  std::vector<Root> out;
  for (const std::string& tok : split(csv, ','))
    out.push_back(parse_root(tok, rank));
  return out;
}

WeylElement parse_weyl(const std::string& s, int rank) {
  if (s.empty()) return WeylElement::identity(rank);
  std::vector<int> perm, signs;
  for (const std::string& tok : split(s, ',')) {
    int v = std::stoi(tok);
    perm.push_back(std::abs(v) - 1);
    signs.push_back(v < 0 ? -1 : 1);
  }
  return WeylElement(std::move(perm), std::move(signs));
}

OrbitDescriptor parse_descriptor(const RootSystem& rs, const ExactArgs& a) {
  return make_descriptor(rs, parse_roots(a.gamma, rs.rank()),
                         parse_weyl(a.w, rs.rank()),
                         parse_roots(a.theta, rs.rank()));
}

RealForm pick_real_form(const RootSystem& rs, const ExactArgs& a) {
  if (!a.real_form.empty()) return real_form_from_string(a.real_form);
  return rs.family() == Family::C ? RealForm::Sp : RealForm::So2Odd;
}

std::string describe(const OrbitDescriptor& d) {
  std::string out = "gammas=[";
  bool first = true;
  for (const Root& g : d.gamma.gammas) {
    if (!first) out += ",";
    out += g.str();
    first = false;
  }
  out += "]";
  if (d.beta_prefix) out += " prefix=" + d.beta_prefix->str();
  out += " w=" + weyl_to_json(d.w).dump();
  out += " theta=[";
  first = true;
  for (const Root& t : d.theta) {
    if (!first) out += ",";
    out += t.str();
    first = false;
  }
  out += "]";
  return out;
}

void add_exact_flags(CLI::App* cmd, ExactArgs& a, bool descriptor_flags) {
  cmd->add_option("--family", a.family, "Root system family (B or C)");
  cmd->add_option("--rank", a.rank, "Rank (>= 1)");
  cmd->add_option("--z", a.z,
                  "Central element, comma separated rationals "
                  "(default: all ones for C, (1,0,...) for B)");
  if (descriptor_flags) {
    cmd->add_option("--gamma", a.gamma,
                    "Comma separated roots, e.g. \"2e1,e1+e2\"");
    cmd->add_option("--w", a.w,
                    "Signed permutation, e.g. \"1,-2\" for e1->e1, e2->-e2");
    cmd->add_option("--theta", a.theta,
                    "Comma separated simple roots, e.g. \"e1-e2\"");
    cmd->add_option("--real-form", a.real_form,
                    "sp | so2odd | equalLength (default from family)");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"flagorbits: orbit calculus on flag manifolds"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine readable JSON output");

  // ---- roots ----
  ExactArgs roots_args;
  CLI::App* roots = app.add_subcommand("roots", "Build a root system");
  add_exact_flags(roots, roots_args, false);

  // ---- weyl ----
  ExactArgs weyl_args;
  CLI::App* weyl = app.add_subcommand(
      "weyl", "Enumerate W_Theta / act on the positive system");
  add_exact_flags(weyl, weyl_args, false);
  std::string weyl_theta, weyl_w;
  weyl->add_option("--theta", weyl_theta,
                   "Generate W_Theta (default: all of Psi)");
  weyl->add_option("--w", weyl_w, "Apply w to the positive system");

  // ---- descriptor ----
  CLI::App* descriptor =
      app.add_subcommand("descriptor", "Orbit descriptor operations");
  descriptor->require_subcommand(1);
  ExactArgs d_args;
  CLI::App* d_norm = descriptor->add_subcommand("normalize", "Normal form");
  CLI::App* d_cert =
      descriptor->add_subcommand("certify", "Non-closedness certificate");
  CLI::App* d_bound = descriptor->add_subcommand(
      "boundary", "Boundary double cosets S~1 and S~2");
  CLI::App* d_ineq = descriptor->add_subcommand(
      "inequality", "Separation certificate for (S, S~1)");
  for (CLI::App* sub : {d_norm, d_cert, d_bound, d_ineq})
    add_exact_flags(sub, d_args, true);

  // ---- sp2 ----
  CLI::App* sp2cmd = app.add_subcommand("sp2", "Sp(2,C) numerical verifier");
  sp2cmd->require_subcommand(1);
  std::string flag_file;
  double tol = 1e-8;
  CLI::App* s_classify = sp2cmd->add_subcommand("classify", "Classify a flag");
  s_classify->add_option("--flag", flag_file, "Flag JSON file")->required();
  s_classify->add_option("--tol", tol, "Classifier tolerance");
  CLI::App* s_table =
      sp2cmd->add_subcommand("verify-table", "Check the duality table");
  CLI::App* s_dims = sp2cmd->add_subcommand("dims", "Numerical orbit dimensions");
  std::string dot_file;
  CLI::App* s_diagram = sp2cmd->add_subcommand("diagram", "Orbit diagram");
  s_diagram->add_option("--dot", dot_file, "Write DOT to this file");
  bool diagram_dot_stdout = false;
  s_diagram->add_flag("--dot-stdout", diagram_dot_stdout, "Print DOT text");
  double s2 = 0.0;
  bool mirror = false;
  CLI::App* s_strata =
      sp2cmd->add_subcommand("strata", "Boundary point and its stratum pair");
  s_strata->add_option("--s2", s2, "Torus parameter in (-pi/4, pi/4)");
  s_strata->add_flag("--mirror", mirror, "Mirror-side stratum pair");
  std::string claim_name = "3.1";
  std::uint64_t seed = 12345;
  int budget = 2000;
  double search_tol = 1e-6;
  CLI::App* s_search =
      sp2cmd->add_subcommand("search", "Witness search for a claim");
  s_search->add_option("--claim", claim_name,
                       "3.1..3.5, r3.1a..r3.1c, p3.2a, p3.2b");
  s_search->add_option("--seed", seed, "64-bit RNG seed");
  s_search->add_option("--s2", s2, "Boundary point parameter");
  s_search->add_option("--budget", budget, "Evaluations per start");
  s_search->add_option("--tol", search_tol, "Violation threshold");
  std::string lift_source = "S1";
  CLI::App* s_lift =
      sp2cmd->add_subcommand("lift", "Parabolic lift path to Sop");
  s_lift->add_option("--source", lift_source, "Source orbit label");

  // Allow the global --json after a subcommand name.
  auto enable_fallthrough = [](CLI::App* cmd, auto&& self) -> void {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands(
             [](const CLI::App*) { return true; }))
      self(sub, self);
  };
  for (CLI::App* sub :
       app.get_subcommands([](const CLI::App*) { return true; }))
    enable_fallthrough(sub, enable_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*roots) {
      RootSystem rs = build_rs(roots_args);
      if (as_json) {
        json out = root_system_to_json(rs);
        out["noncompactPositive"] =
            root_subset_to_json(noncompact_positive_roots(rs))["members"];
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << family_name(rs.family()) << rs.rank() << ": "
                  << rs.roots().size() << " roots\n";
        for (const Root& r : rs.roots()) std::cout << "  " << r.str() << "\n";
      }
      return 0;
    }
    if (*weyl) {
      RootSystem rs = build_rs(weyl_args);
      std::vector<Root> theta = weyl_theta.empty()
                                    ? rs.simple()
                                    : parse_roots(weyl_theta, rs.rank());
      ParabolicSubgroup wt = enumerate_parabolic(rs, theta);
      json out;
      out["order"] = wt.elements.size();
      if (!weyl_w.empty()) {
        WeylElement w = parse_weyl(weyl_w, rs.rank());
        json img = json::array();
        for (const Root& r : act_on_positive_system(w, rs))
          img.push_back(r.str());
        out["wPositive"] = img;
      }
      if (as_json) {
        json elems = json::array();
        for (const WeylElement& w : wt.elements)
          elems.push_back(weyl_to_json(w));
        out["elements"] = elems;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "|W_Theta| = " << wt.elements.size() << "\n";
        if (out.contains("wPositive"))
          std::cout << "w(Delta+) = " << out["wPositive"].dump() << "\n";
      }
      return 0;
    }
    if (*descriptor) {
      RootSystem rs = build_rs(d_args);
      OrbitDescriptor d = parse_descriptor(rs, d_args);
      if (*d_cert) {
        auto j = certify_nonclosed(rs, d);
        if (as_json) {
          json out;
          out["nonClosedWitness"] = j ? json(*j) : json(nullptr);
          std::cout << out.dump(2) << "\n";
        } else if (j) {
          std::cout << "non-closed: gamma_" << *j
                    << " lies outside w.Delta_Theta\n";
        } else {
          std::cout << "closed: every gamma lies in w.Delta_Theta\n";
        }
        return 0;
      }
      if (*d_norm) {
        OrbitDescriptor n = normalize_descriptor(rs, d);
        if (as_json)
          std::cout << descriptor_to_json(n).dump(2) << "\n";
        else
          std::cout << describe(n) << "\n";
        return 0;
      }
      RealForm form = pick_real_form(rs, d_args);
      OrbitDescriptor n = normalize_descriptor(rs, d);
      OrbitDescriptor s1 = boundary_orbit_s1(rs, n, form);
      if (*d_bound) {
        OrbitDescriptor s2d = boundary_orbit_s2(rs, n, form);
        if (as_json) {
          json out;
          out["normalized"] = descriptor_to_json(n);
          out["s1"] = descriptor_to_json(s1);
          out["s2"] = descriptor_to_json(s2d);
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "S~1: " << describe(s1) << "\n";
          std::cout << "S~2: " << describe(s2d) << "\n";
        }
        return 0;
      }
      // inequality
      ParabolicSubgroup wt = enumerate_parabolic(rs, n.theta);
      RatVec z = z_for_theta(rs, n.theta);
      SeparationCertificate cert = separation_inequality(rs, n, s1, z, wt);
      if (as_json)
        std::cout << certificate_to_json(cert).dump(2) << "\n";
      else
        std::cout << "lhs=" << cert.lhs.str() << " maxRhs=" << cert.max_rhs.str()
                  << " gap=" << cert.gap.str()
                  << " closedForm=" << cert.closed_form_gap.str() << "\n";
      return 0;
    }
    if (*sp2cmd) {
      using namespace flagorbits::sp2;
      if (*s_classify) {
        std::ifstream in(flag_file);
        if (!in) throw CLI::ValidationError("--flag", "cannot open file");
        json j = json::parse(in);
        Flag4 f = flag_from_json(j);
        ClassifierParams p;
        p.tol = tol;
        OrbitIndex kc = classify_kc(f, p), gr = classify_gr(f, p);
        if (as_json) {
          json out;
          out["kc"] = kc_name(kc);
          out["gr"] = gr_name(gr);
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << kc_name(kc) << " " << gr_name(gr) << "\n";
        }
        return 0;
      }
      if (*s_table) {
        DualityReport r = verify_duality_table();
        if (as_json) {
          std::cout << duality_report_to_json(r).dump(2) << "\n";
        } else {
          int ok = 0;
          for (const auto& e : r.entries) {
            std::cout << kc_name(e.expected) << ": " << kc_name(e.got_kc)
                      << " / " << gr_name(e.got_gr)
                      << (e.ok ? "" : "  MISMATCH") << "\n";
            ok += e.ok;
          }
          std::cout << ok << "/11 matched\n";
        }
        return r.all_ok ? 0 : 1;
      }
      if (*s_dims) {
        json out;
        bool decrements_ok = true;
        for (OrbitIndex s : kAllOrbits)
          out[kc_name(s)] = orbit_dimension(s);
        for (const DiagramEdge& e : closure_diagram())
          decrements_ok = decrements_ok &&
                          (orbit_dimension(e.to) ==
                           orbit_dimension(e.from) + 1);
        out["edgeDecrementsOk"] = decrements_ok;
        if (as_json) {
          std::cout << out.dump(2) << "\n";
        } else {
          for (OrbitIndex s : kAllOrbits)
            std::cout << kc_name(s) << ": dim "
                      << out[kc_name(s)].get<int>() << "\n";
          std::cout << "edge decrements all +1: "
                    << (decrements_ok ? "yes" : "NO") << "\n";
        }
        return decrements_ok ? 0 : 1;
      }
      if (*s_diagram) {
        std::string dot = diagram_dot();
        if (!dot_file.empty()) {
          std::ofstream out(dot_file);
          out << dot;
        }
        if (diagram_dot_stdout) {
          std::cout << dot;
        } else if (as_json) {
          json out;
          out["edges"] = diagram_to_json();
          out["dot"] = dot;
          std::cout << out.dump(2) << "\n";
        } else {
          for (const DiagramEdge& e : closure_diagram())
            std::cout << kc_name(e.from) << " -> " << kc_name(e.to)
                      << "  [" << e.parabolic << "]\n";
        }
        return 0;
      }
      if (*s_strata) {
        BoundarySide side = mirror ? BoundarySide::Minus : BoundarySide::Plus;
        Mat x = boundary_point(side, s2);
        auto plus = stratum_of_plane(x.cols_range(0, 2), +1);
        auto minus = stratum_of_plane(x.cols_range(2, 4), -1);
        json out;
        out["x"] = matrix_to_json(x);
        out["stratumPlus"] = plus ? json(*plus) : json(nullptr);
        out["stratumMinus"] = minus ? json(*minus) : json(nullptr);
        if (as_json)
          std::cout << out.dump(2) << "\n";
        else
          std::cout << "stratum pair: (" << out["stratumPlus"].dump() << ", "
                    << out["stratumMinus"].dump() << ")\n";
        return 0;
      }
      if (*s_search) {
        const Claim& claim = claim_by_name(claim_name);
        SearchOptions opt;
        opt.seed = seed;
        opt.s2 = s2;
        opt.budget = budget;
        opt.tol = search_tol;
        Witness w = intersection_search(claim, opt);
        json out = witness_to_json(w);
        out["claim"] = claim.name;
        out["s2"] = s2;
        if (as_json)
          std::cout << out.dump(2) << "\n";
        else
          std::cout << "claim " << claim.name << ": violation " << w.violation
                    << ", witness in "
                    << (w.classified_gr ? gr_name(*w.classified_gr)
                                        : std::string("the closure stratum"))
                    << "\n";
        return 0;
      }
      if (*s_lift) {
        std::vector<int> path = lift_sequence(orbit_from_string(lift_source));
        if (as_json) {
          std::cout << json(path).dump() << "\n";
        } else {
          std::cout << "[";
          for (size_t i = 0; i < path.size(); ++i)
            std::cout << (i ? "," : "") << path[i];
          std::cout << "]\n";
        }
        return 0;
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotFoundError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
