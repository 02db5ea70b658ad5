#pragma once

#include <string>
#include <vector>

#include "axicurv/profile.hpp"

// Two rearrangements of the generating angle. The monotone rearrangement
// samples theta on a uniform grid and sorts (the discrete distribution is
// preserved exactly; the interpolant carries an O(1/n_grid) gap to the
// continuum rearrangement). The fold reflects theta into [0,pi] with
// breakpoints inserted at the exact crossings of multiples of pi, so its
// output is piecewise linear with zero sampling error.

namespace axicurv {

enum class RearrangeMode { monotone, fold };

struct RearrangedProfile {
    Profile source;
    Profile result;
    RearrangeMode mode;
    int grid_resolution;  // 0 for fold
};

// Requires theta valued in [0,pi] and n_grid >= 1024. A source that is
// already non-decreasing is returned unchanged (rearrangement of a monotone
// map is the map itself).
RearrangedProfile monotone_rearrange(const Profile& profile, int n_grid = 4096);

RearrangedProfile fold(const Profile& profile);

// Pointwise fold of a single angle value.
double fold_angle(double theta);

// Exact measure |{s : theta(s) >= c}| of a piecewise-linear profile.
double measure_at_level(const Profile& profile, double c);

struct RearrangementChecks {
    bool monotone_ok = false;
    double modulus_source = 0.0;
    double modulus_result = 0.0;
    bool modulus_ok = false;  // result modulus <= source modulus (rel 1e-6)
    // |int F(theta) - int F(theta*)| for F = sin, cos, x -> sin x - x cos x.
    double residual_sin = 0.0;
    double residual_cos = 0.0;
    double residual_F = 0.0;
    // Hardy-Littlewood instance: int s (1 - cos theta) ds on both sides.
    double hl_source = 0.0;
    double hl_result = 0.0;
    bool hl_ok = false;
    double equimeasure_max_dev = 0.0;
    double area_source = 0.0;
    double area_result = 0.0;
    std::vector<std::string> violations;
};

RearrangementChecks check_rearrangement_properties(const Profile& source,
                                                   const Profile& result,
                                                   int n_levels = 64);

}  // namespace axicurv
