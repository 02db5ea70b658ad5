#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

// Axisymmetric surfaces represented by the generating angle of their
// profile curve. The angle theta is piecewise linear in arclength s on
// [0, L]; the surface is swept by rotating the curve
//   gamma(s) = (x(s), z(s)),  x' = cos theta,  z' = sin theta
// about the z axis. Everything downstream (areas, curvature integrals,
// rearrangements) is computed from this representation with per-segment
// closed forms, so the only floating error is round-off.

namespace axicurv {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Breakpoint {
    double s;
    double theta;
};

struct Profile {
    double length = 0.0;
    std::vector<Breakpoint> breakpoints;

    std::size_t segment_count() const { return breakpoints.size() - 1; }

    // Index i with s in [s_i, s_{i+1}); the last segment is closed on the right.
    std::size_t segment_of(double s) const;

    double theta(double s) const;
    // Right-continuous at breakpoints; at s = L the left slope is returned.
    double slope_at(double s) const;
    double slope(std::size_t segment) const;

    double lipschitz_modulus() const;
    bool is_nondecreasing(double slope_tol = 0.0) const;
    double theta_min() const;
    double theta_max() const;
};

// Throws std::invalid_argument on structural problems: fewer than two
// breakpoints, non-finite entries, non-increasing abscissae, endpoints
// not at 0 and L (snapped when within 1e-12 * L).
Profile make_profile(double length, std::vector<Breakpoint> breakpoints);

// Sphere of radius R: theta(s) = s / R on [0, pi R].
Profile sphere_profile(double radius);

// Scale arclength by t > 0 (area scales by t^2, total mean curvature by t).
Profile scaled(const Profile& p, double t);

// s -> pi - theta(L - s): same surface reflected in z.
Profile reversed(const Profile& p);

struct SegmentIntegrals {
    double int_cos;
    double int_sin;
};

// Integrals of cos(theta) and sin(theta) over one linear segment of length
// ds where theta goes from theta_a to theta_b. Exact up to round-off; the
// small-slope limit is handled by a series branch inside the trig moments.
SegmentIntegrals segment_integrals(double theta_a, double theta_b, double ds);

namespace detail {

// Normalized trig moments over one segment:
//   C_k(t) = int_0^1 v^k cos(t v) dv,   S_k(t) = int_0^1 v^k sin(t v) dv.
// Closed forms for |t| >= 0.5, series otherwise (both accurate to ~1 ulp).
double trig_C(int k, double t);
double trig_S(int k, double t);

// int_0^d u^k cos(theta_a + m u) du and the sine version.
double moment_cos(int k, double theta_a, double m, double d);
double moment_sin(int k, double theta_a, double m, double d);

}  // namespace detail

// Cached evaluator for x(s), z(s) with closed-form per-segment
// antiderivatives. x and z are continuous across segment boundaries by
// construction (prefix sums of segment integrals).
struct CurveEval {
    Profile profile;
    std::vector<double> bp_x;          // x at breakpoints
    std::vector<double> bp_z;          // z at breakpoints
    std::vector<double> prefix_int_x;  // int_0^{s_i} x ds
    std::vector<double> slopes;        // theta slope per segment

    double x(double s) const;
    double z(double s) const;
    double theta(double s) const { return profile.theta(s); }
    double theta_dot(double s) const { return profile.slope_at(s); }
};

CurveEval evaluate_curve(const Profile& profile);

struct Diagnostic {
    std::string condition;
    double s;
    double value;
};

struct AdmissibilityReport {
    bool cond_boundary_angles = false;  // theta(0) = 0 and theta(L) = pi
    bool cond_endpoints = false;        // x(L) = 0 and z(L) > 0
    bool cond_positive_simple = false;  // x > 0 on ]0,L[ and curve injective
    bool is_axiconvex = false;          // admissible and theta valued in [0,pi]
    bool is_inner_convex = false;       // admissible and theta non-decreasing
    std::vector<Diagnostic> diagnostics;

    bool admissible() const {
        return cond_boundary_angles && cond_endpoints && cond_positive_simple;
    }
};

// Failures are reported, never thrown. Injectivity is granted without a
// geometric test when theta is valued in [0,pi]; otherwise a polyline
// self-intersection scan at spacing <= L/4096 decides it.
AdmissibilityReport validate(const Profile& profile, double tol = 1e-9);

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based triangle indices

    double total_area() const;
};

// Samples X(s,t) = (x cos t, x sin t, z) on a uniform grid with the poles
// collapsed to single vertices. Vertex count is (n_s - 2) * n_t + 2.
// Throws std::invalid_argument when the profile is not admissible or the
// grid is degenerate (n_s < 2, n_t < 3).
Mesh build_mesh(const Profile& profile, int n_s, int n_t, double tol = 1e-9);

// Wavefront-style "v x y z" / "f i j k" lines (1-based indices).
void write_obj(const Mesh& mesh, std::ostream& out);
void export_mesh(const Profile& profile, int n_s, int n_t, std::ostream& out,
                 double tol = 1e-9);

}  // namespace axicurv
