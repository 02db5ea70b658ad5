#pragma once

#include <utility>

#include "axicurv/profile.hpp"

// Evaluation of the inequalities and identities satisfied by the
// functionals: the total-mean-curvature lower bound sqrt(4 pi A) (plain and
// absolute variants), the Bonnesen quadratic with the two integral
// identities from its proof, the sphere equality case, and the
// critical-point relation K = 2 lambda H with lambda = sqrt(pi / A).

namespace axicurv {

struct InequalityReport {
    double minkowski_gap = 0.0;      // int H dA - sqrt(4 pi A)
    double abs_minkowski_gap = 0.0;  // int |H| dA - sqrt(4 pi A)
    double bonnesen_value = 0.0;     // 4 pi l^2 - 2 l int H dA + A at l = L/pi
    double bonnesen_discriminant = 0.0;  // (int H dA)^2 - 4 pi A
    std::pair<double, double> identity_residuals{0.0, 0.0};
    double critical_residual = 0.0;  // max_s |K - 2 sqrt(pi/A) H|
    bool is_sphere = false;
    double sphere_tol = 0.0;
};

struct MinkowskiCheck {
    double gap;
    bool holds;
};

MinkowskiCheck minkowski_check(const Profile& profile, double tol = 1e-9);

struct BonnesenCheck {
    double lambda;
    double value;  // 4 pi lambda^2 - 2 lambda int H dA + A, direct
    double identity1;  // 2 pi int (l sin theta - x)(l theta_dot - 1) ds
    double identity2;  // 2 pi [ (l pi - L)^2/2 - int (l theta - s)^2 K x ds / 2 ]
    std::pair<double, double> residuals() const {
        return {value - identity1, value - identity2};
    }
};

// lambda <= 0 selects the canonical multiplier L / pi. The two identity
// forms hold for any admissible profile at any lambda; the sign value <= 0
// is guaranteed only for inner-convex profiles at lambda = L / pi.
BonnesenCheck bonnesen_check(const Profile& profile, double lambda = -1.0);

// max over 4096 samples of |theta(s) - pi s / L| <= tol.
bool detect_sphere(const Profile& profile, double tol);

// max over segment midpoints of |kappa1 kappa2 - 2 sqrt(pi/A) H|.
double critical_point_residual(const Profile& profile);

InequalityReport inequality_report(const Profile& profile,
                                   double sphere_tol = 1e-6);

}  // namespace axicurv
