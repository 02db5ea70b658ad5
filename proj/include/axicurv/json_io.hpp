#pragma once

#include <string>

#include <json.hpp>

#include "axicurv/families.hpp"
#include "axicurv/geometry.hpp"
#include "axicurv/inequalities.hpp"
#include "axicurv/profile.hpp"
#include "axicurv/rearrange.hpp"
#include "axicurv/variation.hpp"

// Profile file format:
//   {"length": L, "breakpoints": [[s, theta], ...]}
// Parsing rejects missing keys, malformed pairs, and unsorted abscissae.

namespace axicurv {

nlohmann::json profile_to_json(const Profile& p);
Profile profile_from_json(const nlohmann::json& j);

Profile load_profile(const std::string& path);
void save_profile(const Profile& p, const std::string& path);

nlohmann::json to_json(const GeometricSummary& s);
nlohmann::json to_json(const AdmissibilityReport& r);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const RearrangementChecks& r);
nlohmann::json to_json(const VariationReport& r);
nlohmann::json to_json(const AsymptoticFit& f);

}  // namespace axicurv
