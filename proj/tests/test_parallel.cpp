#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "axicurv/families.hpp"
#include "axicurv/geometry.hpp"
#include "axicurv/parallel.hpp"
#include "axicurv/random_profiles.hpp"

using namespace axicurv;

namespace {

// Polyline samples of a profile's generating curve.
void sample_curve(const Profile& p, int n, std::vector<double>& xs,
                  std::vector<double>& zs) {
    const CurveEval ev = evaluate_curve(p);
    xs.resize(n + 1);
    zs.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double s = p.length * k / n;
        xs[k] = ev.x(s);
        zs[k] = ev.z(s);
    }
}

}  // namespace

TEST_CASE("self-intersection kernel agrees with the serial reference") {
    std::vector<double> xs, zs;

    sample_curve(sphere_profile(1.0), 4096, xs, zs);
    CHECK_FALSE(par::polyline_self_intersects_serial(xs, zs));
    CHECK(par::polyline_self_intersects(xs, zs) ==
          par::polyline_self_intersects_serial(xs, zs));

    sample_curve(build_double_sphere(0.05, 8 * kPi).profile, 4096, xs, zs);
    CHECK_FALSE(par::polyline_self_intersects_serial(xs, zs));
    CHECK(par::polyline_self_intersects(xs, zs) ==
          par::polyline_self_intersects_serial(xs, zs));

    // A figure-eight-like polyline that does cross itself.
    xs = {0.0, 1.0, 1.0, 0.0, 0.5};
    zs = {0.0, 1.0, 0.0, 1.0, 0.5};
    CHECK(par::polyline_self_intersects_serial(xs, zs));
    CHECK(par::polyline_self_intersects(xs, zs));
}

TEST_CASE("crossing curves are caught at fine sampling") {
    const Profile bad = make_profile(
        4.0, {{0.0, 0.0}, {0.8, -2.2}, {1.8, 2.8}, {2.8, -0.4}, {4.0, kPi}});
    std::vector<double> xs, zs;
    sample_curve(bad, 4096, xs, zs);
    CHECK(par::polyline_self_intersects_serial(xs, zs));
    CHECK(par::polyline_self_intersects(xs, zs));
}

TEST_CASE("batch summaries match the serial reference bit for bit") {
    auto profiles = random_suite(ProfileClass::admissible, 24, 7);
    const auto serial = par::batch_summarize_serial(profiles);
    const auto parallel = par::batch_summarize(profiles);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].area == parallel[i].area);
        CHECK(serial[i].total_mean_curvature == parallel[i].total_mean_curvature);
        CHECK(serial[i].total_abs_mean_curvature ==
              parallel[i].total_abs_mean_curvature);
        CHECK(serial[i].total_gauss_curvature ==
              parallel[i].total_gauss_curvature);
        CHECK(serial[i].apex_height == parallel[i].apex_height);
    }
}

TEST_CASE("patch-count reduction matches the serial reference") {
    for (double eps : {0.05, 0.01, 1e-3, 1e-4}) {
        const auto K = static_cast<std::int64_t>(
            std::floor(kPi / (8.0 * eps) - 0.5));
        CHECK(par::patch_count_sum(1.0, eps, K) ==
              par::patch_count_sum_serial(1.0, eps, K));
    }
    CHECK(par::max_threads() >= 1);
}
