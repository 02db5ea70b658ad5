#pragma once

#include <cstdint>
#include <vector>

// Data-parallel kernels with serial reference implementations. The OpenMP
// variants give identical results to the serial ones (per-item work is
// independent, integer reductions are order-free); the serial versions stay
// as the reference for tests and for the benchmark comparison.

namespace axicurv {

struct Profile;
struct GeometricSummary;

namespace par {

// All-pairs proper-intersection scan over an open polyline. Adjacent
// segments (sharing an endpoint) are skipped.
bool polyline_self_intersects_serial(const std::vector<double>& xs,
                                     const std::vector<double>& zs);
bool polyline_self_intersects(const std::vector<double>& xs,
                              const std::vector<double>& zs);

// Geometric summaries for a batch of profiles, results ordered by index.
std::vector<GeometricSummary> batch_summarize_serial(
    const std::vector<Profile>& profiles);
std::vector<GeometricSummary> batch_summarize(
    const std::vector<Profile>& profiles);

// sum_{k=-K}^{K-1} floor((pi R / 2 eps) * cos(4 k eps / R)).
std::int64_t patch_count_sum_serial(double radius, double eps, std::int64_t K);
std::int64_t patch_count_sum(double radius, double eps, std::int64_t K);

int max_threads();

}  // namespace par
}  // namespace axicurv
