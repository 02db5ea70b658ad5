#include "axicurv/profile.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "axicurv/parallel.hpp"

namespace axicurv {

std::size_t Profile::segment_of(double s) const {
    // Last breakpoint belongs to the last segment.
    if (s >= breakpoints.back().s) return breakpoints.size() - 2;
    auto it = std::upper_bound(
        breakpoints.begin(), breakpoints.end(), s,
        [](double v, const Breakpoint& b) { return v < b.s; });
    std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
    return idx == 0 ? 0 : idx - 1;
}

double Profile::slope(std::size_t segment) const {
    const Breakpoint& a = breakpoints[segment];
    const Breakpoint& b = breakpoints[segment + 1];
    return (b.theta - a.theta) / (b.s - a.s);
}

double Profile::theta(double s) const {
    std::size_t i = segment_of(s);
    const Breakpoint& a = breakpoints[i];
    return a.theta + slope(i) * (s - a.s);
}

double Profile::slope_at(double s) const {
    if (s >= breakpoints.back().s) return slope(breakpoints.size() - 2);
    return slope(segment_of(s));
}

double Profile::lipschitz_modulus() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        m = std::max(m, std::abs(slope(i)));
    return m;
}

bool Profile::is_nondecreasing(double slope_tol) const {
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (slope(i) < -slope_tol) return false;
    return true;
}

double Profile::theta_min() const {
    double v = breakpoints.front().theta;
    for (const Breakpoint& b : breakpoints) v = std::min(v, b.theta);
    return v;
}

double Profile::theta_max() const {
    double v = breakpoints.front().theta;
    for (const Breakpoint& b : breakpoints) v = std::max(v, b.theta);
    return v;
}

Profile make_profile(double length, std::vector<Breakpoint> breakpoints) {
    if (!std::isfinite(length) || length <= 0.0)
        throw std::invalid_argument("profile length must be positive and finite");
    if (breakpoints.size() < 2)
        throw std::invalid_argument("profile needs at least two breakpoints");
    for (const Breakpoint& b : breakpoints)
        if (!std::isfinite(b.s) || !std::isfinite(b.theta))
            throw std::invalid_argument("non-finite breakpoint");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i].s < breakpoints[i + 1].s))
            throw std::invalid_argument("breakpoint abscissae must be strictly increasing");
    const double snap = 1e-12 * length;
    if (std::abs(breakpoints.front().s) > snap)
        throw std::invalid_argument("first breakpoint must sit at s = 0");
    if (std::abs(breakpoints.back().s - length) > snap)
        throw std::invalid_argument("last breakpoint must sit at s = L");
    breakpoints.front().s = 0.0;
    breakpoints.back().s = length;
    return Profile{length, std::move(breakpoints)};
}

Profile sphere_profile(double radius) {
    if (!(radius > 0.0))
        throw std::invalid_argument("sphere radius must be positive");
    return make_profile(kPi * radius, {{0.0, 0.0}, {kPi * radius, kPi}});
}

Profile scaled(const Profile& p, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("scale factor must be positive");
    std::vector<Breakpoint> bps = p.breakpoints;
    for (Breakpoint& b : bps) b.s *= t;
    return make_profile(p.length * t, std::move(bps));
}

Profile reversed(const Profile& p) {
    std::vector<Breakpoint> bps(p.breakpoints.size());
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const Breakpoint& src = p.breakpoints[bps.size() - 1 - i];
        bps[i] = {p.length - src.s, kPi - src.theta};
    }
    return make_profile(p.length, std::move(bps));
}

namespace detail {

namespace {

// Series sum_j (-1)^j t^(2j) / ((2j)! (2j+k+1)); converges to ~1 ulp for
// |t| <= 0.5 within a dozen terms.
double series_C(int k, double t) {
    const double t2 = t * t;
    double num = 1.0;  // t^(2j) / (2j)!
    double sum = 1.0 / (k + 1);
    for (int j = 1; j < 16; ++j) {
        num *= -t2 / ((2 * j - 1) * (2 * j));
        const double term = num / (2 * j + k + 1);
        sum += term;
        if (std::abs(term) < 1e-20) break;
    }
    return sum;
}

double series_S(int k, double t) {
    const double t2 = t * t;
    double num = t;  // t^(2j+1) / (2j+1)!
    double sum = t / (k + 2);
    for (int j = 1; j < 16; ++j) {
        num *= -t2 / ((2 * j) * (2 * j + 1));
        const double term = num / (2 * j + k + 2);
        sum += term;
        if (std::abs(term) < 1e-20) break;
    }
    return sum;
}

}  // namespace

double trig_C(int k, double t) {
    if (std::abs(t) < 0.5) return series_C(k, t);
    const double st = std::sin(t), ct = std::cos(t);
    switch (k) {
        case 0: return st / t;
        case 1: return (ct + t * st - 1.0) / (t * t);
        case 2: return (2.0 * t * ct + (t * t - 2.0) * st) / (t * t * t);
        default: break;
    }
    throw std::invalid_argument("trig_C: unsupported moment order");
}

double trig_S(int k, double t) {
    if (std::abs(t) < 0.5) return series_S(k, t);
    const double st = std::sin(t), ct = std::cos(t);
    switch (k) {
        case 0: return (1.0 - ct) / t;
        case 1: return (st - t * ct) / (t * t);
        case 2: return ((2.0 - t * t) * ct + 2.0 * t * st - 2.0) / (t * t * t);
        default: break;
    }
    throw std::invalid_argument("trig_S: unsupported moment order");
}

double moment_cos(int k, double theta_a, double m, double d) {
    const double t = m * d;
    double dk = d;
    for (int i = 0; i < k; ++i) dk *= d;
    return dk * (std::cos(theta_a) * trig_C(k, t) - std::sin(theta_a) * trig_S(k, t));
}

double moment_sin(int k, double theta_a, double m, double d) {
    const double t = m * d;
    double dk = d;
    for (int i = 0; i < k; ++i) dk *= d;
    return dk * (std::sin(theta_a) * trig_C(k, t) + std::cos(theta_a) * trig_S(k, t));
}

}  // namespace detail

SegmentIntegrals segment_integrals(double theta_a, double theta_b, double ds) {
    if (!std::isfinite(theta_a) || !std::isfinite(theta_b) || !std::isfinite(ds) ||
        ds <= 0.0)
        throw std::invalid_argument("segment_integrals: non-finite input or ds <= 0");
    const double m = (theta_b - theta_a) / ds;
    return {detail::moment_cos(0, theta_a, m, ds),
            detail::moment_sin(0, theta_a, m, ds)};
}

CurveEval evaluate_curve(const Profile& profile) {
    CurveEval ev;
    ev.profile = profile;
    const std::size_t n = profile.breakpoints.size();
    ev.bp_x.resize(n);
    ev.bp_z.resize(n);
    ev.prefix_int_x.resize(n);
    ev.slopes.resize(n - 1);
    ev.bp_x[0] = ev.bp_z[0] = ev.prefix_int_x[0] = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Breakpoint& a = profile.breakpoints[i];
        const Breakpoint& b = profile.breakpoints[i + 1];
        const double d = b.s - a.s;
        const double m = (b.theta - a.theta) / d;
        ev.slopes[i] = m;
        const double ic = detail::moment_cos(0, a.theta, m, d);
        const double is = detail::moment_sin(0, a.theta, m, d);
        ev.bp_x[i + 1] = ev.bp_x[i] + ic;
        ev.bp_z[i + 1] = ev.bp_z[i] + is;
        // int_seg x ds = x_a d + int_0^d (d-u) cos(theta_a + m u) du
        const double jx = d * ic - detail::moment_cos(1, a.theta, m, d);
        ev.prefix_int_x[i + 1] = ev.prefix_int_x[i] + ev.bp_x[i] * d + jx;
    }
    return ev;
}

double CurveEval::x(double s) const {
    const std::size_t i = profile.segment_of(s);
    const Breakpoint& a = profile.breakpoints[i];
    const double u = s - a.s;
    if (u <= 0.0) return bp_x[i];
    return bp_x[i] + detail::moment_cos(0, a.theta, slopes[i], u);
}

double CurveEval::z(double s) const {
    const std::size_t i = profile.segment_of(s);
    const Breakpoint& a = profile.breakpoints[i];
    const double u = s - a.s;
    if (u <= 0.0) return bp_z[i];
    return bp_z[i] + detail::moment_sin(0, a.theta, slopes[i], u);
}

namespace {

constexpr int kIntersectionSamples = 4096;

}  // namespace

AdmissibilityReport validate(const Profile& profile, double tol) {
    AdmissibilityReport report;
    const double L = profile.length;
    const CurveEval ev = evaluate_curve(profile);

    const double theta0 = profile.breakpoints.front().theta;
    const double thetaL = profile.breakpoints.back().theta;
    report.cond_boundary_angles =
        std::abs(theta0) <= tol && std::abs(thetaL - kPi) <= tol;
    if (!report.cond_boundary_angles) {
        if (std::abs(theta0) > tol)
            report.diagnostics.push_back({"theta(0) != 0", 0.0, theta0});
        if (std::abs(thetaL - kPi) > tol)
            report.diagnostics.push_back({"theta(L) != pi", L, thetaL});
    }

    const double xL = ev.bp_x.back();
    const double zL = ev.bp_z.back();
    report.cond_endpoints = std::abs(xL) <= tol * L && zL > tol * L;
    if (std::abs(xL) > tol * L)
        report.diagnostics.push_back({"x(L) != 0", L, xL});
    if (!(zL > tol * L))
        report.diagnostics.push_back({"z(L) <= 0", L, zL});

    // theta is piecewise linear, so its range is decided at breakpoints.
    const double tmin = profile.theta_min();
    const double tmax = profile.theta_max();
    const bool theta_in_band = tmin >= -tol && tmax <= kPi + tol;

    // x > 0 on the interior, sampled at spacing L/4096.
    bool positive = true;
    std::vector<double> xs(kIntersectionSamples + 1), zs(kIntersectionSamples + 1);
    for (int k = 0; k <= kIntersectionSamples; ++k) {
        const double s = L * k / kIntersectionSamples;
        xs[k] = ev.x(s);
        zs[k] = ev.z(s);
        if (k > 0 && k < kIntersectionSamples && !(xs[k] > 0.0)) {
            if (positive)
                report.diagnostics.push_back({"x <= 0 in ]0,L[", s, xs[k]});
            positive = false;
        }
    }

    bool injective = true;
    if (theta_in_band) {
        // Granted: a curve generated by theta valued in [0,pi] is simple.
    } else if (positive) {
        injective = !par::polyline_self_intersects(xs, zs);
        if (!injective)
            report.diagnostics.push_back({"generating curve self-intersects", -1.0, 0.0});
    } else {
        injective = false;
    }
    report.cond_positive_simple = positive && injective;

    const bool admissible = report.admissible();
    report.is_axiconvex = admissible && theta_in_band;
    report.is_inner_convex = admissible && profile.is_nondecreasing(tol / L);
    return report;
}

double Mesh::total_area() const {
    double area = 0.0;
    for (const auto& f : faces) {
        const auto& a = vertices[f[0]];
        const auto& b = vertices[f[1]];
        const auto& c = vertices[f[2]];
        const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
        const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
        const double cx = uy * vz - uz * vy;
        const double cy = uz * vx - ux * vz;
        const double cz = ux * vy - uy * vx;
        area += 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
    }
    return area;
}

Mesh build_mesh(const Profile& profile, int n_s, int n_t, double tol) {
    if (n_s < 2 || n_t < 3)
        throw std::invalid_argument("mesh grid needs n_s >= 2 and n_t >= 3");
    const AdmissibilityReport rep = validate(profile, tol);
    if (!rep.admissible())
        throw std::invalid_argument("mesh export requires an admissible profile");

    const CurveEval ev = evaluate_curve(profile);
    const double L = profile.length;
    Mesh mesh;
    mesh.vertices.push_back({0.0, 0.0, 0.0});  // south pole
    for (int i = 1; i + 1 < n_s; ++i) {
        const double s = L * i / (n_s - 1);
        const double x = ev.x(s), z = ev.z(s);
        for (int j = 0; j < n_t; ++j) {
            const double t = 2.0 * kPi * j / n_t;
            mesh.vertices.push_back({x * std::cos(t), x * std::sin(t), z});
        }
    }
    mesh.vertices.push_back({0.0, 0.0, ev.bp_z.back()});  // north pole
    const int top = static_cast<int>(mesh.vertices.size()) - 1;

    auto ring = [&](int i, int j) { return 1 + (i - 1) * n_t + (j % n_t); };
    if (n_s == 2) return mesh;  // two poles, no faces to span
    for (int j = 0; j < n_t; ++j)
        mesh.faces.push_back({0, ring(1, j + 1), ring(1, j)});
    for (int i = 1; i + 2 < n_s; ++i) {
        for (int j = 0; j < n_t; ++j) {
            mesh.faces.push_back({ring(i, j), ring(i, j + 1), ring(i + 1, j)});
            mesh.faces.push_back({ring(i, j + 1), ring(i + 1, j + 1), ring(i + 1, j)});
        }
    }
    for (int j = 0; j < n_t; ++j)
        mesh.faces.push_back({top, ring(n_s - 2, j), ring(n_s - 2, j + 1)});
    return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& out) {
    out.precision(17);
    for (const auto& v : mesh.vertices)
        out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void export_mesh(const Profile& profile, int n_s, int n_t, std::ostream& out,
                 double tol) {
    write_obj(build_mesh(profile, n_s, n_t, tol), out);
}

}  // namespace axicurv
