#include "axicurv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace axicurv {

using nlohmann::json;

json profile_to_json(const Profile& p) {
    json bps = json::array();
    for (const Breakpoint& b : p.breakpoints) bps.push_back({b.s, b.theta});
    return json{{"length", p.length}, {"breakpoints", bps}};
}

Profile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("length") || !j.contains("breakpoints"))
        throw std::invalid_argument(
            "profile JSON must carry 'length' and 'breakpoints'");
    if (!j["length"].is_number())
        throw std::invalid_argument("profile 'length' must be a number");
    if (!j["breakpoints"].is_array())
        throw std::invalid_argument("profile 'breakpoints' must be an array");
    std::vector<Breakpoint> bps;
    for (const json& e : j["breakpoints"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
            !e[1].is_number())
            throw std::invalid_argument(
                "each breakpoint must be a [s, theta] number pair");
        bps.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return make_profile(j["length"].get<double>(), std::move(bps));
}

Profile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open profile file: " + path);
    json j;
    in >> j;
    return profile_from_json(j);
}

void save_profile(const Profile& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write profile file: " + path);
    out << profile_to_json(p).dump(2) << '\n';
}

json to_json(const GeometricSummary& s) {
    return json{{"area", s.area},
                {"total_mean_curvature", s.total_mean_curvature},
                {"total_abs_mean_curvature", s.total_abs_mean_curvature},
                {"total_gauss_curvature", s.total_gauss_curvature},
                {"generating_length", s.generating_length},
                {"apex_height", s.apex_height}};
}

json to_json(const AdmissibilityReport& r) {
    json diags = json::array();
    for (const Diagnostic& d : r.diagnostics)
        diags.push_back({{"condition", d.condition}, {"s", d.s}, {"value", d.value}});
    return json{{"cond_boundary_angles", r.cond_boundary_angles},
                {"cond_endpoints", r.cond_endpoints},
                {"cond_positive_simple", r.cond_positive_simple},
                {"admissible", r.admissible()},
                {"is_axiconvex", r.is_axiconvex},
                {"is_inner_convex", r.is_inner_convex},
                {"diagnostics", diags}};
}

json to_json(const InequalityReport& r) {
    return json{{"minkowski_gap", r.minkowski_gap},
                {"abs_minkowski_gap", r.abs_minkowski_gap},
                {"bonnesen_value", r.bonnesen_value},
                {"bonnesen_discriminant", r.bonnesen_discriminant},
                {"identity_residuals",
                 {r.identity_residuals.first, r.identity_residuals.second}},
                {"critical_residual", r.critical_residual},
                {"is_sphere", r.is_sphere},
                {"sphere_tol", r.sphere_tol}};
}

json to_json(const RearrangementChecks& r) {
    return json{{"monotone_ok", r.monotone_ok},
                {"modulus_source", r.modulus_source},
                {"modulus_result", r.modulus_result},
                {"modulus_ok", r.modulus_ok},
                {"residual_sin", r.residual_sin},
                {"residual_cos", r.residual_cos},
                {"residual_F", r.residual_F},
                {"hl_source", r.hl_source},
                {"hl_result", r.hl_result},
                {"hl_ok", r.hl_ok},
                {"equimeasure_max_dev", r.equimeasure_max_dev},
                {"area_source", r.area_source},
                {"area_result", r.area_result},
                {"violations", r.violations}};
}

json to_json(const VariationReport& r) {
    return json{{"analytic_dA", r.analytic_dA},
                {"fd_dA", r.fd_dA},
                {"analytic_dH", r.analytic_dH},
                {"fd_dH", r.fd_dH},
                {"step", r.step},
                {"relative_errors",
                 {r.relative_errors.first, r.relative_errors.second}}};
}

json to_json(const AsymptoticFit& f) {
    return json{{"c0", f.c0},
                {"c1", f.c1},
                {"exponent", f.exponent},
                {"max_residual", f.max_residual},
                {"window", f.window},
                {"ill_conditioned", f.ill_conditioned},
                {"pairwise_slopes", f.pairwise_slopes}};
}

}  // namespace axicurv
