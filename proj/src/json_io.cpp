#include "flagorbits/json_io.hpp"

namespace flagorbits {

using nlohmann::json;

json root_to_json(const Root& r) {
  json out = json::array();
  for (const Rat& c : r.coords) out.push_back(c.str());
  return out;
}

Root root_from_json(const json& j) {
  Root r;
  for (const auto& c : j) r.coords.push_back(Rat::parse(c.get<std::string>()));
  return r;
}

json root_system_to_json(const RootSystem& rs) {
  json out;
  out["family"] = family_name(rs.family());
  out["rank"] = rs.rank();
  json z = json::array();
  for (const Rat& c : rs.z()) z.push_back(c.str());
  out["Z"] = z;
  auto pack = [](const std::vector<Root>& v) {
    json arr = json::array();
    for (const Root& r : v) arr.push_back(root_to_json(r));
    return arr;
  };
  out["roots"] = pack(rs.roots());
  out["positive"] = pack(rs.positive());
  out["simple"] = pack(rs.simple());
  return out;
}

json root_subset_to_json(const RootSubset& s) {
  json out;
  switch (s.tag) {
    case SubsetTag::NoncompactPositive:
      out["tag"] = "noncompact_positive";
      break;
    case SubsetTag::DeltaTheta:
      out["tag"] = "delta_theta";
      break;
    case SubsetTag::Delta1:
      out["tag"] = "delta1";
      break;
    case SubsetTag::Delta2:
      out["tag"] = "delta2";
      break;
    case SubsetTag::Custom:
      out["tag"] = "custom";
      break;
  }
  json arr = json::array();
  for (const Root& r : s.members) arr.push_back(root_to_json(r));
  out["members"] = arr;
  return out;
}

json weyl_to_json(const WeylElement& w) {
  json out;
  json perm = json::array(), signs = json::array();
  for (int i = 0; i < w.n(); ++i) {
    perm.push_back(w.perm()[i] + 1);
    signs.push_back(w.signs()[i]);
  }
  out["perm"] = perm;
  out["signs"] = signs;
  return out;
}

WeylElement weyl_from_json(const json& j) {
  std::vector<int> perm, signs;
  for (const auto& p : j.at("perm")) perm.push_back(p.get<int>() - 1);
  for (const auto& s : j.at("signs")) signs.push_back(s.get<int>());
  return WeylElement(std::move(perm), std::move(signs));
}

json descriptor_to_json(const OrbitDescriptor& d) {
  json out;
  json gammas = json::array();
  for (const Root& g : d.gamma.gammas) gammas.push_back(root_to_json(g));
  out["gammas"] = gammas;
  out["betaPrefix"] =
      d.beta_prefix ? root_to_json(*d.beta_prefix) : json(nullptr);
  out["w"] = weyl_to_json(d.w);
  json theta = json::array();
  for (const Root& t : d.theta) theta.push_back(root_to_json(t));
  out["theta"] = theta;
  return out;
}

OrbitDescriptor descriptor_from_json(const json& j, const RootSystem& rs) {
  std::vector<Root> gammas, theta;
  for (const auto& g : j.at("gammas")) gammas.push_back(root_from_json(g));
  for (const auto& t : j.at("theta")) theta.push_back(root_from_json(t));
  OrbitDescriptor d = make_descriptor(rs, std::move(gammas),
                                      weyl_from_json(j.at("w")),
                                      std::move(theta));
  if (j.contains("betaPrefix") && !j.at("betaPrefix").is_null())
    d.beta_prefix = root_from_json(j.at("betaPrefix"));
  return d;
}

json certificate_to_json(const SeparationCertificate& c) {
  json out;
  out["lhs"] = c.lhs.str();
  out["maxRhs"] = c.max_rhs.str();
  out["gap"] = c.gap.str();
  out["closedFormGap"] = c.closed_form_gap.str();
  return out;
}

namespace {

json cvec_to_json(const sp2::Mat& column) {
  json out = json::array();
  for (int r = 0; r < column.rows(); ++r)
    out.push_back({column(r, 0).real(), column(r, 0).imag()});
  return out;
}

}  // namespace

json flag_to_json(const sp2::Flag4& f) {
  json out;
  out["v1"] = cvec_to_json(f.v1);
  json v2 = json::array();
  for (int c = 0; c < 2; ++c) v2.push_back(cvec_to_json(f.v2.col(c)));
  out["V2"] = v2;
  return out;
}

sp2::Flag4 flag_from_json(const json& j) {
  sp2::Mat v1(4, 1), v2(4, 2);
  const auto& jv1 = j.at("v1");
  for (int r = 0; r < 4; ++r)
    v1(r, 0) = sp2::cplx{jv1.at(r).at(0).get<double>(),
                         jv1.at(r).at(1).get<double>()};
  const auto& jv2 = j.at("V2");
  for (int c = 0; c < 2; ++c)
    for (int r = 0; r < 4; ++r)
      v2(r, c) = sp2::cplx{jv2.at(c).at(r).at(0).get<double>(),
                           jv2.at(c).at(r).at(1).get<double>()};
  return sp2::Flag4::make(std::move(v1), std::move(v2));
}

json matrix_to_json(const sp2::Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

sp2::Mat matrix_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  sp2::Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = sp2::cplx{j.at(r).at(c).at(0).get<double>(),
                          j.at(r).at(c).at(1).get<double>()};
  return m;
}

json witness_to_json(const sp2::Witness& w) {
  json out;
  out["k"] = matrix_to_json(w.k);
  out["violation"] = w.violation;
  out["margins"] = w.margins;
  out["startIndex"] = w.start_index;
  out["evaluations"] = w.evaluations;
  out["classifiedGr"] =
      w.classified_gr ? json(sp2::gr_name(*w.classified_gr)) : json(nullptr);
  out["flag"] = flag_to_json(w.flag);
  return out;
}

json diagram_to_json() {
  json edges = json::array();
  for (const sp2::DiagramEdge& e : sp2::closure_diagram()) {
    json edge;
    edge["from"] = sp2::kc_name(e.from);
    edge["to"] = sp2::kc_name(e.to);
    edge["label"] = e.parabolic;
    edges.push_back(edge);
  }
  return edges;
}

json duality_report_to_json(const sp2::DualityReport& r) {
  json out;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json row;
    row["expected"] = sp2::kc_name(e.expected);
    row["kc"] = sp2::kc_name(e.got_kc);
    row["gr"] = sp2::gr_name(e.got_gr);
    row["ok"] = e.ok;
    entries.push_back(row);
  }
  out["entries"] = entries;
  out["allOk"] = r.all_ok;
  return out;
}

}  // namespace flagorbits
