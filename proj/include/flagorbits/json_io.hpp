#pragma once

#include <json.hpp>

#include "flagorbits/orbit_calculus.hpp"
#include "flagorbits/sp2/classify.hpp"
#include "flagorbits/sp2/diagram.hpp"
#include "flagorbits/sp2/witness.hpp"

// Wire formats. Rationals travel as strings ("3/2"), roots as arrays of
// rational strings, complex numbers as [re, im] pairs, Weyl elements as
// {"perm": [...], "signs": [...]} with 1-based targets.
namespace flagorbits {

nlohmann::json root_to_json(const Root& r);
Root root_from_json(const nlohmann::json& j);

nlohmann::json root_system_to_json(const RootSystem& rs);
nlohmann::json root_subset_to_json(const RootSubset& s);

nlohmann::json weyl_to_json(const WeylElement& w);
WeylElement weyl_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const OrbitDescriptor& d);
OrbitDescriptor descriptor_from_json(const nlohmann::json& j,
                                     const RootSystem& rs);

nlohmann::json certificate_to_json(const SeparationCertificate& c);

nlohmann::json flag_to_json(const sp2::Flag4& f);
sp2::Flag4 flag_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const sp2::Mat& m);
sp2::Mat matrix_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const sp2::Witness& w);
nlohmann::json diagram_to_json();
nlohmann::json duality_report_to_json(const sp2::DualityReport& r);

}  // namespace flagorbits
