#include "axicurv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace axicurv {

namespace {

using detail::moment_cos;
using detail::moment_sin;

// 16-node Gauss-Legendre rule on [-1, 1] (half of the symmetric table).
constexpr double kGlNode[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGlWeight[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

struct Segment {
    double s_a, d, theta_a, m, x_a;
};

std::vector<Segment> segments_of(const Profile& p, const CurveEval& ev) {
    std::vector<Segment> segs(p.segment_count());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Breakpoint& a = p.breakpoints[i];
        const Breakpoint& b = p.breakpoints[i + 1];
        segs[i] = {a.s, b.s - a.s, a.theta, ev.slopes[i], ev.bp_x[i]};
    }
    return segs;
}

// |H| integrand restricted to one segment, as a function of the offset u.
double g_of(const Segment& sg, double u) {
    const double theta = sg.theta_a + sg.m * u;
    const double x = sg.x_a + moment_cos(0, sg.theta_a, sg.m, u);
    return std::sin(theta) + sg.m * x;
}

double integrate_abs_g(const Segment& sg, double root_tol) {
    // Bracket the sign changes of g on a 256-point sub-grid, refine by
    // bisection, then integrate |g| with Gauss-Legendre on each piece.
    constexpr int kScan = 256;
    std::vector<double> cuts{0.0};
    double u_prev = 0.0;
    double g_prev = g_of(sg, 0.0);
    for (int k = 1; k <= kScan; ++k) {
        const double u = sg.d * k / kScan;
        const double g = g_of(sg, u);
        if ((g_prev < 0.0 && g > 0.0) || (g_prev > 0.0 && g < 0.0)) {
            double lo = u_prev, hi = u, glo = g_prev;
            while (hi - lo > root_tol) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g_of(sg, mid);
                if ((glo < 0.0) == (gm < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        u_prev = u;
        g_prev = g;
    }
    cuts.push_back(sg.d);

    double total = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double a = cuts[p], b = cuts[p + 1];
        if (b <= a) continue;
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double piece = 0.0;
        for (int q = 0; q < 8; ++q)
            piece += kGlWeight[q] *
                     (std::abs(g_of(sg, c - h * kGlNode[q])) +
                      std::abs(g_of(sg, c + h * kGlNode[q])));
        total += piece * h;
    }
    return total;
}

}  // namespace

double MethodPair::residual() const { return std::abs(value - alternate); }

MethodPair area_methods(const Profile& profile) {
    const CurveEval ev = evaluate_curve(profile);
    const double direct = 2.0 * kPi * ev.prefix_int_x.back();
    double parts = 0.0;
    for (const Segment& sg : segments_of(profile, ev))
        parts += sg.s_a * moment_cos(0, sg.theta_a, sg.m, sg.d) +
                 moment_cos(1, sg.theta_a, sg.m, sg.d);
    return {direct, -2.0 * kPi * parts};
}

double area(const Profile& profile) { return area_methods(profile).value; }

MethodPair total_mean_curvature_methods(const Profile& profile) {
    const CurveEval ev = evaluate_curve(profile);
    double direct = 0.0, f_form = 0.0;
    for (const Segment& sg : segments_of(profile, ev)) {
        const double ic = moment_cos(0, sg.theta_a, sg.m, sg.d);
        const double is = moment_sin(0, sg.theta_a, sg.m, sg.d);
        const double m1c = moment_cos(1, sg.theta_a, sg.m, sg.d);
        const double int_x = sg.x_a * sg.d + sg.d * ic - m1c;
        direct += is + sg.m * int_x;
        // int theta cos(theta) ds = theta_a * I_c + m * M1_c
        f_form += is - (sg.theta_a * ic + sg.m * m1c);
    }
    return {kPi * direct, kPi * f_form};
}

double total_mean_curvature(const Profile& profile) {
    return total_mean_curvature_methods(profile).value;
}

double total_abs_mean_curvature(const Profile& profile) {
    const CurveEval ev = evaluate_curve(profile);
    const double root_tol = 1e-12 * profile.length;
    double total = 0.0;
    for (const Segment& sg : segments_of(profile, ev))
        total += integrate_abs_g(sg, root_tol);
    return kPi * total;
}

double total_gauss_curvature(const Profile& profile) {
    const CurveEval ev = evaluate_curve(profile);
    double total = 0.0;
    for (const Segment& sg : segments_of(profile, ev))
        total += sg.m * moment_sin(0, sg.theta_a, sg.m, sg.d);
    return 2.0 * kPi * total;
}

PrincipalCurvatures principal_curvatures(const Profile& profile, double s,
                                         Side side) {
    const double L = profile.length;
    double kappa2;
    if (side == Side::left && s > 0.0) {
        std::size_t i = profile.segment_of(s);
        const double s_i = profile.breakpoints[i].s;
        if (s == s_i && i > 0) i -= 1;
        kappa2 = profile.slope(i);
    } else {
        kappa2 = profile.slope_at(s);
    }
    if (s <= 0.0) return {profile.slope(0), profile.slope(0)};
    if (s >= L) {
        const double m = profile.slope(profile.segment_count() - 1);
        return {m, side == Side::right ? kappa2 : m};
    }
    const CurveEval ev = evaluate_curve(profile);
    return {std::sin(profile.theta(s)) / ev.x(s), kappa2};
}

GeometricSummary summarize_unchecked(const Profile& profile) {
    const CurveEval ev = evaluate_curve(profile);
    GeometricSummary s;
    s.area = 2.0 * kPi * ev.prefix_int_x.back();
    s.total_mean_curvature = total_mean_curvature(profile);
    s.total_abs_mean_curvature = total_abs_mean_curvature(profile);
    s.total_gauss_curvature = total_gauss_curvature(profile);
    s.generating_length = profile.length;
    s.apex_height = ev.bp_z.back();
    return s;
}

GeometricSummary summarize(const Profile& profile, double tol) {
    if (!validate(profile, tol).admissible())
        throw std::invalid_argument("summarize: profile is not admissible");
    return summarize_unchecked(profile);
}

}  // namespace axicurv
