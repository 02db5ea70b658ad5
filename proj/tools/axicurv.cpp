// Command-line front end: validate / summary / rearrange / check / family /
// variation / export-mesh. All reports are JSON; ladders can also be dumped
// as CSV for plotting. Exit codes: 0 success, 1 guaranteed inequality
// violated beyond tolerance, 2 parse or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axicurv/families.hpp"
#include "axicurv/geometry.hpp"
#include "axicurv/inequalities.hpp"
#include "axicurv/json_io.hpp"
#include "axicurv/profile.hpp"
#include "axicurv/random_profiles.hpp"
#include "axicurv/rearrange.hpp"
#include "axicurv/variation.hpp"

using namespace axicurv;
using nlohmann::json;

namespace {

struct ProfileSource {
    std::string file;
    std::string preset;

    Profile resolve() const {
        if (!file.empty()) return load_profile(file);
        if (preset.empty())
            throw std::invalid_argument("no profile given: use --profile or --preset");
        const auto colon = preset.find(':');
        const std::string name = preset.substr(0, colon);
        std::vector<double> args;
        if (colon != std::string::npos) {
            std::stringstream ss(preset.substr(colon + 1));
            std::string tok;
            while (std::getline(ss, tok, ','))
                args.push_back(std::stod(tok));
        }
        if (name == "sphere" && args.size() == 1)
            return sphere_profile(args[0]);
        if (name == "dimple" && args.size() == 2)
            return build_dimple(args[0], args[1]).profile;
        if (name == "doublesphere" && args.size() == 2)
            return build_double_sphere(args[0], args[1]).profile;
        throw std::invalid_argument(
            "unknown preset (use sphere:R, dimple:R,eps, doublesphere:r,A0)");
    }
};

void emit(const json& j, const std::string& output) {
    if (output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(output);
        if (!out) throw std::invalid_argument("cannot write " + output);
        out << j.dump(2) << '\n';
    }
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out.precision(17);
    out << header << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }
}

void write_plot_data(const Profile& p, const std::string& prefix, int samples) {
    const CurveEval ev = evaluate_curve(p);
    std::vector<std::vector<double>> th, xx, zz;
    for (int k = 0; k <= samples; ++k) {
        const double s = p.length * k / samples;
        th.push_back({s, p.theta(s)});
        xx.push_back({s, ev.x(s)});
        zz.push_back({s, ev.z(s)});
    }
    write_csv(prefix + "_theta.csv", "s,theta", th);
    write_csv(prefix + "_x.csv", "s,x", xx);
    write_csv(prefix + "_z.csv", "s,z", zz);
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("AXICURV_SEED"))
        return std::strtoull(env, nullptr, 10);
    return seed;
}

PerturbationField parse_phi(const Profile& p, const std::string& kind) {
    if (kind.rfind("const:", 0) == 0)
        return PerturbationField::constant(p, std::stod(kind.substr(6)));
    if (kind == "sin2theta")
        return PerturbationField::from_function(
            p, [&](double s) { return std::sin(2.0 * p.theta(s)); });
    if (kind == "versine")
        return PerturbationField::from_function(
            p, [&](double s) { return 0.5 * (1.0 - std::cos(p.theta(s))); });
    if (kind.rfind("file:", 0) == 0) {
        std::ifstream in(kind.substr(5));
        if (!in) throw std::invalid_argument("cannot open phi file");
        json j;
        in >> j;
        PerturbationField f;
        for (const json& e : j.at("samples")) {
            f.s.push_back(e.at(0).get<double>());
            f.value.push_back(e.at(1).get<double>());
        }
        if (f.s.size() < 2)
            throw std::invalid_argument("phi file needs at least two samples");
        return f;
    }
    throw std::invalid_argument(
        "unknown phi (use const:V, sin2theta, versine, file:PATH)");
}

int run_check(const ProfileSource& src, const std::string& inequality,
              const std::string& random_class, int count, std::uint64_t seed,
              double tol, double sphere_tol, const std::string& output) {
    std::vector<Profile> profiles;
    if (!random_class.empty()) {
        ProfileClass cls;
        if (random_class == "inner-convex")
            cls = ProfileClass::inner_convex;
        else if (random_class == "axiconvex")
            cls = ProfileClass::axiconvex;
        else if (random_class == "admissible")
            cls = ProfileClass::admissible;
        else
            throw std::invalid_argument(
                "unknown --random class (inner-convex, axiconvex, admissible)");
        profiles = random_suite(cls, count, effective_seed(seed));
    } else {
        profiles.push_back(src.resolve());
    }

    bool violated = false;
    json results = json::array();
    for (const Profile& p : profiles) {
        const AdmissibilityReport adm = validate(p, tol);
        const InequalityReport rep = inequality_report(p, sphere_tol);
        json entry = to_json(rep);
        entry["admissible"] = adm.admissible();
        entry["is_axiconvex"] = adm.is_axiconvex;
        entry["is_inner_convex"] = adm.is_inner_convex;
        bool guaranteed = false, holds = true;
        if (inequality == "minkowski") {
            guaranteed = adm.is_axiconvex;
            holds = rep.minkowski_gap >= -tol;
        } else if (inequality == "absolute") {
            guaranteed = adm.admissible();
            holds = rep.abs_minkowski_gap >= -tol;
        } else if (inequality == "bonnesen") {
            guaranteed = adm.is_inner_convex;
            holds = rep.bonnesen_value <= tol;
        } else if (inequality == "critical") {
            guaranteed = false;  // informational residual only
        } else {
            throw std::invalid_argument(
                "unknown inequality (minkowski, bonnesen, absolute, critical)");
        }
        entry["guaranteed"] = guaranteed;
        entry["holds"] = holds;
        if (guaranteed && !holds) violated = true;
        results.push_back(entry);
    }
    json out;
    out["inequality"] = inequality;
    out["count"] = results.size();
    out["results"] = results;
    emit(out, output);
    return violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"axisymmetric surface functionals toolkit"};
    app.require_subcommand(1);

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "admissibility report");
    ProfileSource val_src;
    double val_tol = 1e-9;
    std::string val_out;
    cmd_validate->add_option("--profile", val_src.file, "profile JSON file");
    cmd_validate->add_option("--preset", val_src.preset, "built-in profile");
    cmd_validate->add_option("--tol", val_tol, "validation tolerance");
    cmd_validate->add_option("--output", val_out, "write report here");

    // summary
    auto* cmd_summary = app.add_subcommand("summary", "geometric functionals");
    ProfileSource sum_src;
    double sum_tol = 1e-9;
    bool sum_force = false;
    std::string sum_out, sum_plot;
    int sum_plot_samples = 512;
    cmd_summary->add_option("--profile", sum_src.file, "profile JSON file");
    cmd_summary->add_option("--preset", sum_src.preset, "built-in profile");
    cmd_summary->add_option("--tol", sum_tol, "validation tolerance");
    cmd_summary->add_flag("--allow-inadmissible", sum_force,
                          "diagnostic mode: skip the admissibility gate");
    cmd_summary->add_option("--output", sum_out, "write summary here");
    cmd_summary->add_option("--plot-data", sum_plot,
                            "write PREFIX_{theta,x,z}.csv plot files");
    cmd_summary->add_option("--plot-samples", sum_plot_samples,
                            "rows per plot file");

    // rearrange
    auto* cmd_rearrange = app.add_subcommand("rearrange", "monotone or fold");
    ProfileSource re_src;
    std::string re_mode = "monotone", re_out, re_report_out;
    int re_grid = 4096;
    cmd_rearrange->add_option("--profile", re_src.file, "profile JSON file");
    cmd_rearrange->add_option("--preset", re_src.preset, "built-in profile");
    cmd_rearrange->add_option("--mode", re_mode, "monotone | fold");
    cmd_rearrange->add_option("--n-grid", re_grid, "sampling density (monotone)");
    cmd_rearrange->add_option("--output", re_out, "write result profile here");
    cmd_rearrange->add_option("--report", re_report_out,
                              "also write the property-check report");

    // check
    auto* cmd_check = app.add_subcommand("check", "inequality evaluation");
    ProfileSource ck_src;
    std::string ck_ineq = "minkowski", ck_random, ck_out;
    int ck_count = 50;
    std::uint64_t ck_seed = 20240901;
    double ck_tol = 1e-9, ck_sphere_tol = 1e-6;
    cmd_check->add_option("--profile", ck_src.file, "profile JSON file");
    cmd_check->add_option("--preset", ck_src.preset, "built-in profile");
    cmd_check->add_option("--inequality", ck_ineq,
                          "minkowski | bonnesen | absolute | critical");
    cmd_check->add_option("--random", ck_random,
                          "random suite class instead of a profile");
    cmd_check->add_option("--count", ck_count, "suite size for --random");
    cmd_check->add_option("--seed", ck_seed, "suite seed (AXICURV_SEED wins)");
    cmd_check->add_option("--tol", ck_tol, "violation tolerance");
    cmd_check->add_option("--sphere-tol", ck_sphere_tol,
                          "sphere-detection tolerance (radians)");
    cmd_check->add_option("--output", ck_out, "write results here");

    // family
    auto* cmd_family = app.add_subcommand("family", "counterexample families");
    std::string fam_kind, fam_out, fam_csv, fam_emit, fam_plot;
    double fam_R = 1.0, fam_eps = 0.1, fam_r = 0.1, fam_area = 8.0 * kPi;
    int fam_ladder = 0;
    cmd_family->add_option("kind", fam_kind, "dimple | doublesphere")
        ->required();
    cmd_family->add_option("--R", fam_R, "big-sphere radius (dimple)");
    cmd_family->add_option("--eps", fam_eps, "dimple radius");
    cmd_family->add_option("--r", fam_r, "small radius (doublesphere)");
    cmd_family->add_option("--area", fam_area, "target area (doublesphere)");
    cmd_family->add_option("--ladder", fam_ladder,
                           "evaluate k = 0..K with the parameter halved each step");
    cmd_family->add_option("--output", fam_out, "write records here");
    cmd_family->add_option("--csv", fam_csv, "write the ladder as CSV");
    cmd_family->add_option("--plot-data", fam_plot,
                           "write PREFIX_H.csv (param vs total mean curvature)");
    cmd_family->add_option("--emit-profile", fam_emit,
                           "write the (last) profile as JSON");

    // variation
    auto* cmd_variation = app.add_subcommand("variation", "first-variation check");
    ProfileSource var_src;
    std::string var_phi = "const:1", var_steps = "1e-3,5e-4,2.5e-4", var_out;
    int var_grid = 8192;
    cmd_variation->add_option("--profile", var_src.file, "profile JSON file");
    cmd_variation->add_option("--preset", var_src.preset, "built-in profile");
    cmd_variation->add_option("--phi", var_phi,
                              "const:V | sin2theta | versine | file:PATH");
    cmd_variation->add_option("--steps", var_steps, "comma-separated steps");
    cmd_variation->add_option("--n-grid", var_grid, "resampling density");
    cmd_variation->add_option("--output", var_out, "write reports here");

    // export-mesh
    auto* cmd_mesh = app.add_subcommand("export-mesh", "surface mesh (OBJ lines)");
    ProfileSource mesh_src;
    int mesh_ns = 64, mesh_nt = 64;
    std::string mesh_out;
    cmd_mesh->add_option("--profile", mesh_src.file, "profile JSON file");
    cmd_mesh->add_option("--preset", mesh_src.preset, "built-in profile");
    cmd_mesh->add_option("--ns", mesh_ns, "meridian samples");
    cmd_mesh->add_option("--nt", mesh_nt, "rotational samples");
    cmd_mesh->add_option("--output", mesh_out, "mesh file (stdout if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_validate->parsed()) {
            const Profile p = val_src.resolve();
            emit(to_json(validate(p, val_tol)), val_out);
            return 0;
        }

        if (cmd_summary->parsed()) {
            const Profile p = sum_src.resolve();
            const GeometricSummary s =
                sum_force ? summarize_unchecked(p) : summarize(p, sum_tol);
            if (!sum_plot.empty()) write_plot_data(p, sum_plot, sum_plot_samples);
            emit(to_json(s), sum_out);
            return 0;
        }

        if (cmd_rearrange->parsed()) {
            if (re_mode != "fold" && re_mode != "monotone")
                throw std::invalid_argument("unknown mode (monotone | fold)");
            const Profile p = re_src.resolve();
            const RearrangedProfile rr = re_mode == "fold"
                                             ? fold(p)
                                             : monotone_rearrange(p, re_grid);
            if (!re_report_out.empty())
                emit(to_json(check_rearrangement_properties(p, rr.result)),
                     re_report_out);
            emit(profile_to_json(rr.result), re_out);
            return 0;
        }

        if (cmd_check->parsed())
            return run_check(ck_src, ck_ineq, ck_random, ck_count, ck_seed,
                             ck_tol, ck_sphere_tol, ck_out);

        if (cmd_family->parsed()) {
            const int K = std::max(fam_ladder, 0);
            json records = json::array();
            std::vector<std::vector<double>> csv_rows;
            std::optional<Profile> last_profile;

            if (fam_kind == "dimple") {
                std::vector<LadderPoint> hpts, apts;
                for (int k = 0; k <= K; ++k) {
                    const double eps = fam_eps * std::pow(2.0, -k);
                    const DimpleSolution d = build_dimple(fam_R, eps);
                    json rec = {{"eps", eps},
                                {"phi_R", d.phi_R},
                                {"phi_eps", d.phi_eps},
                                {"s0", d.s0},
                                {"junction_residual", d.junction_residual},
                                {"summary", to_json(d.summary)}};
                    const double A0 = 4.0 * kPi * fam_R * fam_R;
                    if (eps < kPi * fam_R / 8.0) {
                        const PackingCount pc = dimple_packing_count(fam_R, eps);
                        rec["packing_K"] = pc.K;
                        rec["packing_N"] = pc.N;
                        if (!pc.degenerate) {
                            const MultiDimpleAggregate agg =
                                multi_dimple_aggregate(fam_R, eps, A0);
                            rec["multi_total_H"] = agg.total_mean_curvature;
                            rec["multi_area"] = agg.area;
                            rec["t_eps"] = agg.t_eps;
                            rec["rescaled_H"] = agg.rescaled_mean_curvature;
                        }
                    }
                    records.push_back(rec);
                    hpts.push_back({eps, d.summary.total_mean_curvature / kPi});
                    apts.push_back({eps, d.summary.area / (2 * kPi)});
                    csv_rows.push_back({eps, d.summary.total_mean_curvature,
                                        d.summary.area, d.phi_R});
                    last_profile = d.profile;
                }
                json out = {{"family", "dimple"}, {"records", records}};
                if (K >= 3) {
                    out["fit_H_over_pi"] =
                        to_json(fit_asymptotics(hpts, ExpansionModel::linear));
                    out["fit_area_over_2pi"] =
                        to_json(fit_asymptotics(apts, ExpansionModel::quadratic));
                }
                if (!fam_csv.empty())
                    write_csv(fam_csv, "eps,total_mean_curvature,area,phi_R",
                              csv_rows);
                if (!fam_plot.empty()) {
                    std::vector<std::vector<double>> two;
                    for (const auto& row : csv_rows)
                        two.push_back({row[0], row[1]});
                    write_csv(fam_plot + "_H.csv", "eps,total_mean_curvature", two);
                }
                if (!fam_emit.empty() && last_profile)
                    save_profile(*last_profile, fam_emit);
                emit(out, fam_out);
                return 0;
            }
            if (fam_kind == "doublesphere") {
                std::vector<LadderPoint> rpts;
                for (int k = 0; k <= K; ++k) {
                    const double r = fam_r * std::pow(2.0, -k);
                    const DoubleSphereSolution ds =
                        build_double_sphere(r, fam_area);
                    const InequalityReport rep = inequality_report(ds.profile);
                    records.push_back({{"r", r},
                                       {"delta", ds.delta},
                                       {"R", ds.R},
                                       {"summary", to_json(ds.summary)},
                                       {"minkowski_gap", rep.minkowski_gap},
                                       {"abs_minkowski_gap", rep.abs_minkowski_gap}});
                    rpts.push_back({r, ds.R});
                    csv_rows.push_back({r, ds.R, ds.summary.total_mean_curvature,
                                        rep.minkowski_gap});
                    last_profile = ds.profile;
                }
                json out = {{"family", "doublesphere"}, {"records", records}};
                if (K >= 3)
                    out["fit_R"] =
                        to_json(fit_asymptotics(rpts, ExpansionModel::linear));
                if (!fam_csv.empty())
                    write_csv(fam_csv, "r,R,total_mean_curvature,minkowski_gap",
                              csv_rows);
                if (!fam_plot.empty()) {
                    std::vector<std::vector<double>> two;
                    for (const auto& row : csv_rows)
                        two.push_back({row[0], row[2]});
                    write_csv(fam_plot + "_H.csv", "r,total_mean_curvature", two);
                }
                if (!fam_emit.empty() && last_profile)
                    save_profile(*last_profile, fam_emit);
                emit(out, fam_out);
                return 0;
            }
            throw std::invalid_argument("unknown family (dimple | doublesphere)");
        }

        if (cmd_variation->parsed()) {
            const Profile p = var_src.resolve();
            const PerturbationField phi = parse_phi(p, var_phi);
            std::vector<double> steps;
            std::stringstream ss(var_steps);
            std::string tok;
            while (std::getline(ss, tok, ',')) steps.push_back(std::stod(tok));
            json out = json::array();
            for (const VariationReport& r :
                 first_variation_check(p, phi, steps, var_grid))
                out.push_back(to_json(r));
            emit(out, var_out);
            return 0;
        }

        if (cmd_mesh->parsed()) {
            const Profile p = mesh_src.resolve();
            if (mesh_out.empty()) {
                export_mesh(p, mesh_ns, mesh_nt, std::cout);
            } else {
                std::ofstream out(mesh_out);
                if (!out) throw std::invalid_argument("cannot write " + mesh_out);
                export_mesh(p, mesh_ns, mesh_nt, out);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
