#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "axicurv/geometry.hpp"
#include "axicurv/profile.hpp"

// The two explicit families that defeat the plain total-mean-curvature
// bound: a sphere with a small inward-glued spherical cap (the dimple,
// whose aggregated copies drive int H dA to -infinity at fixed area), and
// the double sphere (two concentric spheres glued near the axis, driving
// int H dA to 0+ within the axisymmetric class).

namespace axicurv {

class infeasible_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct DimpleSolution {
    double R;        // big-sphere radius
    double eps;      // dimple radius
    double phi_eps;  // pi/2 - eps
    double phi_R;    // solved gluing angle
    double s0;       // gluing segment length
    Profile profile;
    GeometricSummary summary;
    // Continuity checks of x and z at the two junctions against the
    // piecewise closed forms, relative to R.
    double junction_residual;
};

// ((R + eps) cos x - R) / sin x; the gluing condition is
// f(phi_R) + f(phi_eps) = 0.
double dimple_gluing_f(double x, double R, double eps);

// Requires 0 < eps < R/2. Throws infeasible_error when the bisection
// bracket on ]0, pi/2[ carries no sign change.
DimpleSolution build_dimple(double R, double eps);

struct PackingCount {
    std::int64_t K;  // slice count parameter, floor(pi R / (8 eps) - 1/2)
    std::int64_t N;  // number of disjoint patches
    bool degenerate; // K = 0, empty sum
};

// Requires eps < pi R / 8.
PackingCount dimple_packing_count(double R, double eps);

struct MultiDimpleAggregate {
    std::int64_t N;
    double total_mean_curvature;  // 4 pi R - pi (2 - pi/2) N eps
    double area;                  // 4 pi R^2 + pi N eps^2
    double t_eps;                 // sqrt(A0 / area)
    double rescaled_mean_curvature;
};

// First-order per-dimple contributions aggregated onto the sphere values;
// requires 4 pi R^2 = A0 and at least one patch.
MultiDimpleAggregate multi_dimple_aggregate(double R, double eps, double A0);

struct DoubleSphereSolution {
    double r;
    double delta;  // = 2 r
    double A0;
    double R;      // positive root of the area polynomial
    Profile profile;
    GeometricSummary summary;
};

// Throws infeasible_error when no root with R > 2r exists.
DoubleSphereSolution build_double_sphere(double r, double A0);

struct LadderPoint {
    double param;
    double value;
};

enum class ExpansionModel {
    linear,    // c0 + c1 * eps
    quadratic  // c0 + c1 * eps^2
};

struct AsymptoticFit {
    double c0 = 0.0;
    double c1 = 0.0;
    int exponent = 1;
    double max_residual = 0.0;            // over the fit window
    int window = 0;                       // points used (smallest params)
    bool ill_conditioned = false;
    std::vector<double> pairwise_slopes;  // successive-difference estimates
};

// Least-squares fit of c0 + c1 * param^p over the `window` smallest
// parameters (the higher-order remainder would bias a fit across the whole
// ladder). Requires >= 4 points.
AsymptoticFit fit_asymptotics(std::vector<LadderPoint> points,
                              ExpansionModel model, int window = 3);

}  // namespace axicurv
