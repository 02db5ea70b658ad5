#include "axicurv/parallel.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "axicurv/geometry.hpp"
#include "axicurv/profile.hpp"

namespace axicurv::par {

namespace {

inline double orient(double ax, double ay, double bx, double by, double cx,
                     double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

inline bool on_segment(double ax, double ay, double bx, double by, double px,
                       double py) {
    return std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
           std::min(ay, by) <= py && py <= std::max(ay, by);
}

bool segments_intersect(double ax, double ay, double bx, double by, double cx,
                        double cy, double dx, double dy) {
    const double o1 = orient(ax, ay, bx, by, cx, cy);
    const double o2 = orient(ax, ay, bx, by, dx, dy);
    const double o3 = orient(cx, cy, dx, dy, ax, ay);
    const double o4 = orient(cx, cy, dx, dy, bx, by);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
        ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    if (o1 == 0 && on_segment(ax, ay, bx, by, cx, cy)) return true;
    if (o2 == 0 && on_segment(ax, ay, bx, by, dx, dy)) return true;
    if (o3 == 0 && on_segment(cx, cy, dx, dy, ax, ay)) return true;
    if (o4 == 0 && on_segment(cx, cy, dx, dy, bx, by)) return true;
    return false;
}

inline bool pair_hits(const std::vector<double>& xs, const std::vector<double>& zs,
                      std::size_t i, std::size_t j) {
    return segments_intersect(xs[i], zs[i], xs[i + 1], zs[i + 1], xs[j], zs[j],
                              xs[j + 1], zs[j + 1]);
}

}  // namespace

bool polyline_self_intersects_serial(const std::vector<double>& xs,
                                     const std::vector<double>& zs) {
    const std::size_t n = xs.size() - 1;  // segment count
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j)
            if (pair_hits(xs, zs, i, j)) return true;
    return false;
}

bool polyline_self_intersects(const std::vector<double>& xs,
                              const std::vector<double>& zs) {
#ifndef _OPENMP
    return polyline_self_intersects_serial(xs, zs);
#else
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(xs.size()) - 1;
    std::atomic<bool> hit{false};
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n - 2; ++i) {
        if (hit.load(std::memory_order_relaxed)) continue;
        for (std::ptrdiff_t j = i + 2; j < n; ++j) {
            if (pair_hits(xs, zs, static_cast<std::size_t>(i),
                          static_cast<std::size_t>(j))) {
                hit.store(true, std::memory_order_relaxed);
                break;
            }
        }
    }
    return hit.load();
#endif
}

std::vector<GeometricSummary> batch_summarize_serial(
    const std::vector<Profile>& profiles) {
    std::vector<GeometricSummary> out(profiles.size());
    for (std::size_t i = 0; i < profiles.size(); ++i)
        out[i] = summarize_unchecked(profiles[i]);
    return out;
}

std::vector<GeometricSummary> batch_summarize(
    const std::vector<Profile>& profiles) {
    std::vector<GeometricSummary> out(profiles.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(profiles.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            summarize_unchecked(profiles[static_cast<std::size_t>(i)]);
    return out;
}

std::int64_t patch_count_sum_serial(double radius, double eps, std::int64_t K) {
    const double per_slice = kPi * radius / (2.0 * eps);
    std::int64_t total = 0;
    for (std::int64_t k = -K; k < K; ++k)
        total += static_cast<std::int64_t>(
            std::floor(per_slice * std::cos(4.0 * k * eps / radius)));
    return total;
}

std::int64_t patch_count_sum(double radius, double eps, std::int64_t K) {
    const double per_slice = kPi * radius / (2.0 * eps);
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t k = -K; k < K; ++k)
        total += static_cast<std::int64_t>(
            std::floor(per_slice * std::cos(4.0 * k * eps / radius)));
    return total;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace axicurv::par
