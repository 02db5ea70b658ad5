#include "axicurv/inequalities.hpp"

#include <cmath>

#include "axicurv/geometry.hpp"

namespace axicurv {

namespace {

using detail::moment_cos;
using detail::moment_sin;

constexpr int kSphereSamples = 4096;

}  // namespace

MinkowskiCheck minkowski_check(const Profile& profile, double tol) {
    const double A = area(profile);
    const double gap = total_mean_curvature(profile) - std::sqrt(4.0 * kPi * A);
    return {gap, gap >= -tol};
}

BonnesenCheck bonnesen_check(const Profile& profile, double lambda) {
    const double L = profile.length;
    const double l = lambda > 0.0 ? lambda : L / kPi;
    const CurveEval ev = evaluate_curve(profile);

    const double A = 2.0 * kPi * ev.prefix_int_x.back();
    const double tmc = total_mean_curvature(profile);
    const double value = 4.0 * kPi * l * l - 2.0 * l * tmc + A;

    double id1 = 0.0;
    double quad = 0.0;  // int (l theta - s)^2 theta_dot sin theta ds
    for (std::size_t i = 0; i + 1 < profile.breakpoints.size(); ++i) {
        const Breakpoint& a = profile.breakpoints[i];
        const Breakpoint& b = profile.breakpoints[i + 1];
        const double d = b.s - a.s;
        const double m = ev.slopes[i];
        const double ic = moment_cos(0, a.theta, m, d);
        const double is = moment_sin(0, a.theta, m, d);
        const double m1c = moment_cos(1, a.theta, m, d);
        const double int_x = ev.bp_x[i] * d + d * ic - m1c;
        id1 += (l * m - 1.0) * (l * is - int_x);
        // (l theta - s) restricted to the segment is A0 + B u.
        const double A0 = l * a.theta - a.s;
        const double B = l * m - 1.0;
        quad += m * (A0 * A0 * is + 2.0 * A0 * B * moment_sin(1, a.theta, m, d) +
                     B * B * moment_sin(2, a.theta, m, d));
    }
    const double id2 =
        2.0 * kPi * (0.5 * (l * kPi - L) * (l * kPi - L) - 0.5 * quad);
    return {l, value, 2.0 * kPi * id1, id2};
}

bool detect_sphere(const Profile& profile, double tol) {
    const double L = profile.length;
    for (int k = 0; k <= kSphereSamples; ++k) {
        const double s = L * k / kSphereSamples;
        if (std::abs(profile.theta(s) - kPi * s / L) > tol) return false;
    }
    return true;
}

double critical_point_residual(const Profile& profile) {
    const CurveEval ev = evaluate_curve(profile);
    const double lambda_hat = std::sqrt(kPi / (2.0 * kPi * ev.prefix_int_x.back()));
    double residual = 0.0;
    for (std::size_t i = 0; i + 1 < profile.breakpoints.size(); ++i) {
        const Breakpoint& a = profile.breakpoints[i];
        const Breakpoint& b = profile.breakpoints[i + 1];
        const double s_mid = 0.5 * (a.s + b.s);
        const double k2 = ev.slopes[i];
        const double k1 = std::sin(profile.theta(s_mid)) / ev.x(s_mid);
        const double H = 0.5 * (k1 + k2);
        residual = std::max(residual, std::abs(k1 * k2 - 2.0 * lambda_hat * H));
    }
    return residual;
}

InequalityReport inequality_report(const Profile& profile, double sphere_tol) {
    InequalityReport rep;
    const double A = area(profile);
    const double tmc = total_mean_curvature(profile);
    const double bound = std::sqrt(4.0 * kPi * A);
    rep.minkowski_gap = tmc - bound;
    rep.abs_minkowski_gap = total_abs_mean_curvature(profile) - bound;
    const BonnesenCheck bc = bonnesen_check(profile);
    rep.bonnesen_value = bc.value;
    rep.bonnesen_discriminant = tmc * tmc - 4.0 * kPi * A;
    rep.identity_residuals = bc.residuals();
    rep.critical_residual = critical_point_residual(profile);
    rep.sphere_tol = sphere_tol;
    rep.is_sphere = detect_sphere(profile, sphere_tol);
    return rep;
}

}  // namespace axicurv
