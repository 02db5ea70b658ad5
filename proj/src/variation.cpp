#include "axicurv/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "axicurv/geometry.hpp"

namespace axicurv {

namespace {

using detail::moment_cos;
using detail::moment_sin;

// Uniform n_grid sampling merged with the profile breakpoints.
std::vector<double> refined_grid(const Profile& p, int n_grid) {
    std::vector<double> s;
    s.reserve(static_cast<std::size_t>(n_grid) + p.breakpoints.size());
    for (int k = 0; k <= n_grid; ++k) s.push_back(p.length * k / n_grid);
    for (const Breakpoint& b : p.breakpoints) s.push_back(b.s);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end(),
                        [&](double a, double b) {
                            return std::abs(a - b) < 1e-12 * p.length;
                        }),
            s.end());
    s.front() = 0.0;
    s.back() = p.length;
    return s;
}

Profile reconstruct_from_points(const std::vector<double>& xs,
                                const std::vector<double>& zs) {
    const std::size_t n = xs.size() - 1;  // chords
    std::vector<double> chord_len(n), chord_angle(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = xs[k + 1] - xs[k];
        const double dz = zs[k + 1] - zs[k];
        chord_len[k] = std::hypot(dx, dz);
        double ang = std::atan2(dz, dx);
        if (k > 0) {  // unwrap across the atan2 branch cut
            while (ang - chord_angle[k - 1] > kPi) ang -= 2.0 * kPi;
            while (ang - chord_angle[k - 1] < -kPi) ang += 2.0 * kPi;
        }
        chord_angle[k] = ang;
    }
    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) cum[k + 1] = cum[k] + chord_len[k];
    const double L = cum[n];

    // Chord angles live at chord midpoints; the ends are extrapolated from
    // the first and last midpoint pair.
    std::vector<Breakpoint> bps;
    bps.reserve(n + 2);
    std::vector<double> mid(n);
    for (std::size_t k = 0; k < n; ++k) mid[k] = 0.5 * (cum[k] + cum[k + 1]);
    const double th0 = chord_angle[0] - (chord_angle[1] - chord_angle[0]) *
                                            mid[0] / (mid[1] - mid[0]);
    const double thL =
        chord_angle[n - 1] + (chord_angle[n - 1] - chord_angle[n - 2]) *
                                 (L - mid[n - 1]) / (mid[n - 1] - mid[n - 2]);
    bps.push_back({0.0, th0});
    for (std::size_t k = 0; k < n; ++k) bps.push_back({mid[k], chord_angle[k]});
    bps.push_back({L, thL});
    return make_profile(L, std::move(bps));
}

}  // namespace

double PerturbationField::operator()(double at) const {
    if (at <= s.front()) return value.front();
    if (at >= s.back()) return value.back();
    const auto it = std::upper_bound(s.begin(), s.end(), at);
    const std::size_t i = static_cast<std::size_t>(it - s.begin()) - 1;
    const double w = (at - s[i]) / (s[i + 1] - s[i]);
    return value[i] + w * (value[i + 1] - value[i]);
}

PerturbationField PerturbationField::constant(const Profile& profile, double v) {
    return {{0.0, profile.length}, {v, v}};
}

PerturbationField PerturbationField::from_function(
    const Profile& profile, const std::function<double(double)>& f, int n) {
    PerturbationField field;
    field.s = refined_grid(profile, n);
    field.value.reserve(field.s.size());
    for (double s : field.s) field.value.push_back(f(s));
    return field;
}

namespace {

// Resample, move, and rebuild unconditionally; the finite-difference
// harness also runs this at t = 0 so the reconstruction bias cancels.
Profile reconstructed(const Profile& profile, const PerturbationField& phi,
                      double t, int n_grid, double validate_tol) {
    const CurveEval ev = evaluate_curve(profile);
    const std::vector<double> grid = refined_grid(profile, n_grid);
    std::vector<double> xs(grid.size()), zs(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double s = grid[k];
        const double theta = profile.theta(s);
        const double p = phi(s);
        xs[k] = ev.x(s) + t * p * std::sin(theta);
        zs[k] = ev.z(s) - t * p * std::cos(theta);
    }
    Profile out = reconstruct_from_points(xs, zs);
    if (!validate(out, validate_tol).admissible())
        throw std::runtime_error(
            "perturbation step too large: perturbed profile fails validation");
    return out;
}

}  // namespace

Profile perturb_profile(const Profile& profile, const PerturbationField& phi,
                        double t, int n_grid, double validate_tol) {
    bool zero_field = t == 0.0;
    if (!zero_field) {
        zero_field = true;
        for (double v : phi.value) zero_field = zero_field && v == 0.0;
    }
    if (zero_field) return profile;
    return reconstructed(profile, phi, t, n_grid, validate_tol);
}

std::vector<VariationReport> first_variation_check(
    const Profile& profile, const PerturbationField& phi,
    const std::vector<double>& steps, int n_grid) {
    const double L = profile.length;
    double phi_scale = 0.0;
    for (double v : phi.value) phi_scale = std::max(phi_scale, std::abs(v));

    // The mean-curvature variation needs phi to vanish near slope jumps.
    for (std::size_t i = 1; i + 1 < profile.breakpoints.size(); ++i) {
        const double jump = std::abs(profile.slope(i) - profile.slope(i - 1));
        if (jump * L <= 1e-9) continue;
        const double s_i = profile.breakpoints[i].s;
        const double w = L / 64.0;
        for (double s : {s_i - w, s_i, s_i + w}) {
            if (std::abs(phi(std::clamp(s, 0.0, L))) >
                1e-12 * (1.0 + phi_scale))
                throw std::invalid_argument(
                    "first_variation_check: phi must vanish near slope "
                    "discontinuities");
        }
    }

    // Analytic derivatives by closed forms on the merged grid of profile
    // breakpoints and phi samples (phi is affine on each piece).
    const CurveEval ev = evaluate_curve(profile);
    std::vector<double> grid;
    for (const Breakpoint& b : profile.breakpoints) grid.push_back(b.s);
    for (double s : phi.s) grid.push_back(s);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [&](double a, double b) {
                               return std::abs(a - b) < 1e-15 * L;
                           }),
               grid.end());

    double dA = 0.0, dH = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double sa = grid[k], sb = grid[k + 1];
        const double d = sb - sa;
        if (d <= 0.0) continue;
        const double theta_a = profile.theta(sa);
        const double m = profile.slope_at(sa);
        const double x_a = ev.x(sa);
        const double pa = phi(sa);
        const double q = (phi(sb) - pa) / d;
        const double m0s = moment_sin(0, theta_a, m, d);
        const double m1s = moment_sin(1, theta_a, m, d);
        const double m0c = moment_cos(0, theta_a, m, d);
        const double m1c = moment_cos(1, theta_a, m, d);
        const double m2c = moment_cos(2, theta_a, m, d);
        // int phi sin(theta)
        const double phi_sin = pa * m0s + q * m1s;
        // int phi x: int x = x_a d + d M0c - M1c, int u x = x_a d^2/2 + (d^2 M0c - M2c)/2
        const double int_x = x_a * d + d * m0c - m1c;
        const double int_ux = 0.5 * x_a * d * d + 0.5 * (d * d * m0c - m2c);
        const double phi_x = pa * int_x + q * int_ux;
        dA += phi_sin + m * phi_x;
        dH += m * phi_sin;
    }
    dA *= 2.0 * kPi;
    dH *= 2.0 * kPi;

    // Finite differences share the resample-and-reconstruct pipeline with
    // the t = 0 baseline.
    const Profile base = reconstructed(profile, phi, 0.0, n_grid, 1e-5);
    const double A0 = area(base);
    const double H0 = total_mean_curvature(base);

    std::vector<VariationReport> reports;
    reports.reserve(steps.size());
    for (double t : steps) {
        const Profile plus = reconstructed(profile, phi, t, n_grid, 1e-5);
        VariationReport r;
        r.step = t;
        r.analytic_dA = dA;
        r.analytic_dH = dH;
        r.fd_dA = (area(plus) - A0) / t;
        r.fd_dH = (total_mean_curvature(plus) - H0) / t;
        const double denomA = std::max(std::abs(dA), 1e-300);
        const double denomH = std::max(std::abs(dH), 1e-300);
        r.relative_errors = {std::abs(r.fd_dA - dA) / denomA,
                             std::abs(r.fd_dH - dH) / denomH};
        reports.push_back(r);
    }
    return reports;
}

}  // namespace axicurv
