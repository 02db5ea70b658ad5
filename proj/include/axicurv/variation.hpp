#pragma once

#include <functional>
#include <vector>

#include "axicurv/profile.hpp"

// First-variation checks: the analytic derivatives of area and total mean
// curvature under a normal perturbation speed phi,
//   d(area) = int 2 H phi dA,   d(int H dA) = int K phi dA,
// compared against first-order finite differences of the functionals on
// perturbed profiles. The perturbed curve is resampled and its canonical
// angle representation rebuilt from chord angles, so the reconstruction is
// applied at t = 0 as well and its bias differences out.

namespace axicurv {

struct PerturbationField {
    std::vector<double> s;
    std::vector<double> value;  // piecewise linear between samples

    double operator()(double at) const;

    static PerturbationField constant(const Profile& profile, double v);
    // Samples f on the profile's breakpoint grid refined to n points.
    static PerturbationField from_function(
        const Profile& profile, const std::function<double(double)>& f,
        int n = 256);
};

// Moves each resampled curve point by t * phi(s) * n(s) with the outward
// normal n = (sin theta, -cos theta), then rebuilds the profile from chord
// angles and chord lengths. Throws std::runtime_error("perturbation step
// too large...") when the perturbed profile fails validation.
Profile perturb_profile(const Profile& profile, const PerturbationField& phi,
                        double t, int n_grid = 8192,
                        double validate_tol = 1e-5);

struct VariationReport {
    double analytic_dA = 0.0;
    double fd_dA = 0.0;
    double analytic_dH = 0.0;
    double fd_dH = 0.0;
    double step = 0.0;
    std::pair<double, double> relative_errors{0.0, 0.0};
};

// One report per step. The mean-curvature variation requires phi to vanish
// near interior slope discontinuities (the formula needs more smoothness
// than a kinked profile has); a violation throws std::invalid_argument.
std::vector<VariationReport> first_variation_check(
    const Profile& profile, const PerturbationField& phi,
    const std::vector<double>& steps, int n_grid = 8192);

}  // namespace axicurv
