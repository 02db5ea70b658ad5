#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "axicurv/families.hpp"
#include "axicurv/geometry.hpp"
#include "axicurv/inequalities.hpp"
#include "axicurv/random_profiles.hpp"
#include "axicurv/rearrange.hpp"

using namespace axicurv;

namespace {

// Non-monotone axiconvex example: up to pi, down to pi/2, back to pi.
Profile zigzag() {
    const double L = kPi;
    return make_profile(
        L, {{0.0, 0.0}, {L / 3, kPi}, {2 * L / 3, kPi / 2}, {L, kPi}});
}

}  // namespace

TEST_CASE("monotone rearrangement of a monotone profile is the identity") {
    const Profile p = sphere_profile(1.0);
    const RearrangedProfile rr = monotone_rearrange(p, 4096);
    REQUIRE(rr.result.breakpoints.size() == p.breakpoints.size());
    for (std::size_t i = 0; i < p.breakpoints.size(); ++i) {
        CHECK(rr.result.breakpoints[i].s == p.breakpoints[i].s);
        CHECK(rr.result.breakpoints[i].theta == p.breakpoints[i].theta);
    }
}

TEST_CASE("monotone rearrangement sorts the sampled values") {
    const Profile p = zigzag();
    const int n = 4096;
    const RearrangedProfile rr = monotone_rearrange(p, n);
    // Sorting oracle on the same sample grid.
    std::vector<double> samples(n + 1);
    for (int k = 0; k <= n; ++k) samples[k] = p.theta(p.length * k / n);
    std::sort(samples.begin(), samples.end());
    REQUIRE(rr.result.breakpoints.size() == samples.size());
    for (int k = 0; k <= n; ++k)
        CHECK(rr.result.breakpoints[k].theta == samples[k]);
    CHECK(rr.result.is_nondecreasing());
}

TEST_CASE("monotone rearrangement output validates as inner-convex") {
    // An admissible source is needed: rearranging preserves int cos(theta),
    // so x*(L) closes only when x(L) does. (The zigzag above is a sorting
    // example, not an admissible profile.)
    auto suite = random_suite(ProfileClass::axiconvex, 3, 2024);
    for (const Profile& p : suite) {
        const RearrangedProfile rr = monotone_rearrange(p, 8192);
        // Endpoint closure of the interpolant carries the sampling budget.
        const AdmissibilityReport rep =
            validate(rr.result, 1.0 / rr.grid_resolution);
        CHECK(rep.admissible());
        CHECK(rep.is_inner_convex);
    }
}

TEST_CASE("monotone rearrangement rejects angles outside [0,pi]") {
    const DoubleSphereSolution ds = build_double_sphere(0.1, 8 * kPi);
    CHECK_THROWS_AS(monotone_rearrange(ds.profile, 4096), std::invalid_argument);
    CHECK_THROWS_AS(monotone_rearrange(sphere_profile(1.0), 512),
                    std::invalid_argument);
}

TEST_CASE("rearrangement checks pass on the sphere with zero slack") {
    const Profile p = sphere_profile(1.0);
    const RearrangedProfile rr = monotone_rearrange(p, 4096);
    const RearrangementChecks ck = check_rearrangement_properties(p, rr.result);
    CHECK(ck.monotone_ok);
    CHECK(ck.modulus_ok);
    CHECK(ck.hl_ok);
    CHECK(ck.residual_F == 0.0);
    CHECK(ck.hl_source == ck.hl_result);
    CHECK(ck.equimeasure_max_dev == 0.0);
    CHECK(ck.violations.empty());
}

TEST_CASE("rearrangement checks on the zigzag example") {
    const Profile p = zigzag();
    const RearrangedProfile rr = monotone_rearrange(p, 1 << 19);
    const RearrangementChecks ck = check_rearrangement_properties(p, rr.result);
    CHECK(ck.monotone_ok);
    CHECK(ck.modulus_ok);
    // The steepest slope (first segment) appears alone near level 0, so the
    // modulus is reproduced here.
    CHECK(ck.modulus_result ==
          doctest::Approx(ck.modulus_source).epsilon(1e-6));
    CHECK(ck.residual_sin <= 1e-8);
    CHECK(ck.residual_cos <= 1e-8);
    CHECK(ck.residual_F <= 1e-8);
    // Strict Hardy-Littlewood gap for a genuinely non-monotone profile,
    // confirmed by quadrature on both sides.
    CHECK(ck.hl_result > ck.hl_source + 1e-3);
    CHECK(ck.area_result >= ck.area_source - 1e-9);
    CHECK(ck.equimeasure_max_dev <= p.length / 4096);
}

TEST_CASE("equimeasurability holds at 64 levels on random axiconvex profiles") {
    auto suite = random_suite(ProfileClass::axiconvex, 10, 777);
    for (const Profile& p : suite) {
        const RearrangedProfile rr = monotone_rearrange(p, 1 << 19);
        const RearrangementChecks ck =
            check_rearrangement_properties(p, rr.result);
        CHECK(ck.equimeasure_max_dev <= p.length / 4096);
        CHECK(ck.residual_F <= 1e-8);
        CHECK(ck.hl_ok);
        CHECK(ck.area_result >= ck.area_source - 1e-9);
        CHECK(ck.modulus_ok);
    }
}

TEST_CASE("non-increasing rearrangement is the reflected non-decreasing one") {
    const Profile p = zigzag();
    const int n = 2048;
    std::vector<double> samples(n + 1);
    for (int k = 0; k <= n; ++k) samples[k] = p.theta(p.length * k / n);
    std::vector<double> asc = samples, desc = samples;
    std::sort(asc.begin(), asc.end());
    std::sort(desc.begin(), desc.end(), std::greater<>());
    for (int k = 0; k <= n; ++k)
        CHECK(asc[k] == desc[n - k]);  // u*(s) = u#(L - s) at sample level
}

TEST_CASE("fold is the identity on axiconvex profiles") {
    const Profile p = zigzag();
    const RearrangedProfile rr = fold(p);
    REQUIRE(rr.result.breakpoints.size() == p.breakpoints.size());
    for (std::size_t i = 0; i < p.breakpoints.size(); ++i)
        CHECK(rr.result.breakpoints[i].theta ==
              doctest::Approx(p.breakpoints[i].theta).epsilon(1e-15));
}

TEST_CASE("fold reflects angle values into [0,pi]") {
    CHECK(fold_angle(3 * kPi / 2) == doctest::Approx(kPi / 2));
    CHECK(fold_angle(-0.4) == doctest::Approx(0.4));
    CHECK(fold_angle(2 * kPi + 0.3) == doctest::Approx(0.3));
    CHECK(fold_angle(kPi) == doctest::Approx(kPi));
    CHECK(fold_angle(2 * kPi) == doctest::Approx(0.0));
}

TEST_CASE("fold of the double sphere keeps x and lifts z") {
    const DoubleSphereSolution ds = build_double_sphere(0.1, 8 * kPi);
    const RearrangedProfile rr = fold(ds.profile);
    const double L = ds.profile.length;
    CHECK(rr.result.theta_min() >= -1e-15);
    CHECK(rr.result.theta_max() <= kPi + 1e-15);

    const CurveEval src = evaluate_curve(ds.profile);
    const CurveEval out = evaluate_curve(rr.result);
    for (int k = 0; k <= 4096; ++k) {
        const double s = L * k / 4096;
        CHECK(std::abs(out.x(s) - src.x(s)) <= 1e-12 * L);
        CHECK(out.z(s) >= src.z(s) - 1e-12 * L);
        CHECK(std::abs(std::cos(rr.result.theta(s)) -
                       std::cos(ds.profile.theta(s))) <= 1e-12);
    }
    // x agrees at every breakpoint of the folded profile.
    for (const Breakpoint& b : rr.result.breakpoints)
        CHECK(std::abs(out.x(b.s) - src.x(b.s)) <= 1e-12 * L);

    const AdmissibilityReport rep = validate(rr.result);
    CHECK(rep.admissible());
    CHECK(rep.is_axiconvex);
}

TEST_CASE("fold handles negative angle excursions") {
    const Profile p = make_profile(
        4.0, {{0.0, 0.0}, {0.9, -0.8}, {2.4, 2.2}, {4.0, kPi}});
    const RearrangedProfile rr = fold(p);
    CHECK(rr.result.theta_min() >= -1e-15);
    CHECK(rr.result.theta_max() <= kPi + 1e-15);
    const CurveEval src = evaluate_curve(p);
    const CurveEval out = evaluate_curve(rr.result);
    for (int k = 0; k <= 1024; ++k) {
        const double s = p.length * k / 1024;
        CHECK(std::abs(out.x(s) - src.x(s)) <= 1e-12 * p.length);
        CHECK(out.z(s) >= src.z(s) - 1e-12 * p.length);
    }
    // |slopes| are preserved piecewise, so the modulus is unchanged.
    CHECK(rr.result.lipschitz_modulus() ==
          doctest::Approx(p.lipschitz_modulus()).epsilon(1e-12));
}

TEST_CASE("fold output bounds the absolute mean curvature from below") {
    const DoubleSphereSolution ds = build_double_sphere(0.05, 8 * kPi);
    const RearrangedProfile rr = fold(ds.profile);
    const double folded_H = total_mean_curvature(rr.result);
    const double abs_H = total_abs_mean_curvature(ds.profile);
    CHECK(folded_H <= abs_H + 1e-8);
    CHECK(area(rr.result) == doctest::Approx(area(ds.profile)).epsilon(1e-12));
}

TEST_CASE("near-equality forces the fold+monotone profile towards the sphere") {
    const Profile p = sphere_profile(1.0);
    const RearrangedProfile folded = fold(p);
    const RearrangedProfile mono = monotone_rearrange(folded.result, 4096);
    CHECK(detect_sphere(mono.result, 1e-12));

    // A small wiggle: the abs gap stays small and the straightened profile
    // stays close to linear.
    std::vector<Breakpoint> bps;
    const int n = 64;
    for (int k = 0; k <= n; ++k) {
        const double s = kPi * k / n;
        const double wiggle = 1e-4 * std::sin(8.0 * s) * std::sin(s);
        bps.push_back({s, s + wiggle});
    }
    const Profile wig = make_profile(kPi, std::move(bps));
    const GeometricSummary sum = summarize_unchecked(wig);
    const double gap =
        sum.total_abs_mean_curvature - std::sqrt(4 * kPi * sum.area);
    CHECK(gap >= 0.0);
    CHECK(gap < 1e-4);
    const RearrangedProfile mono2 =
        monotone_rearrange(fold(wig).result, 1 << 15);
    double dev = 0.0;
    for (int k = 0; k <= 4096; ++k) {
        const double s = kPi * k / 4096;
        dev = std::max(dev, std::abs(mono2.result.theta(s) - s));
    }
    CHECK(dev < 1e-2);
}
