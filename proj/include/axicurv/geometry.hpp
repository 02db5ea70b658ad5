#pragma once

#include "axicurv/profile.hpp"

// Integral functionals of a profile. Smooth integrands are evaluated with
// per-segment closed forms; only the |H| integrand goes through quadrature
// (sign changes bracketed, then Gauss-Legendre per sign-constant piece).
// Where two formulas exist they are both computed so the residual can be
// used as a self-check.

namespace axicurv {

struct GeometricSummary {
    double area = 0.0;                      // A = 2 pi int x ds
    double total_mean_curvature = 0.0;      // int H dA
    double total_abs_mean_curvature = 0.0;  // int |H| dA
    double total_gauss_curvature = 0.0;     // int K dA
    double generating_length = 0.0;
    double apex_height = 0.0;               // z(L)
};

struct MethodPair {
    double value;      // returned value (direct formula)
    double alternate;  // independent formula
    double residual() const;
};

// direct: 2 pi int x ds. alternate: -2 pi int s cos(theta) ds (valid when
// x(L) = 0; both are closed forms).
MethodPair area_methods(const Profile& profile);
double area(const Profile& profile);

// direct: pi int (sin theta + theta_dot x) ds. alternate: pi int F(theta) ds
// with F(x) = sin x - x cos x (needs x(0) = x(L) = 0).
MethodPair total_mean_curvature_methods(const Profile& profile);
double total_mean_curvature(const Profile& profile);

double total_abs_mean_curvature(const Profile& profile);

// 2 pi int theta_dot sin(theta) ds, accumulated per segment (not the
// telescoped shortcut), so Gauss-Bonnet doubles as a self-test.
double total_gauss_curvature(const Profile& profile);

struct PrincipalCurvatures {
    double kappa1;  // sin(theta)/x, extended by the pole limit theta_dot
    double kappa2;  // segment slope
};

enum class Side { left, right };

PrincipalCurvatures principal_curvatures(const Profile& profile, double s,
                                         Side side = Side::right);

// Validates first; throws std::invalid_argument if not admissible.
GeometricSummary summarize(const Profile& profile, double tol = 1e-9);
// Computes the functionals regardless of admissibility (diagnostics).
GeometricSummary summarize_unchecked(const Profile& profile);

}  // namespace axicurv
