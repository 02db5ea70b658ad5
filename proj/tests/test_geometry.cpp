#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "axicurv/families.hpp"
#include "axicurv/geometry.hpp"
#include "axicurv/random_profiles.hpp"
#include "oracles.hpp"

using namespace axicurv;

namespace {

// Double sphere with free radius R (the builder solves R from the area;
// here the piece geometry itself is under test).
Profile double_sphere_raw(double r, double delta, double R) {
    const double L = 2 * delta + kPi * (2 * R - r);
    return make_profile(L, {{0.0, 0.0},
                            {delta, 0.0},
                            {delta + kPi * R, kPi},
                            {delta + kPi * (R + r), 2 * kPi},
                            {delta + kPi * (2 * R - r), kPi},
                            {L, kPi}});
}

}  // namespace

TEST_CASE("sphere closed forms") {
    for (double R : {0.5, 1.0, 3.0}) {
        const GeometricSummary s = summarize(sphere_profile(R));
        CHECK(std::abs(s.area - 4 * kPi * R * R) <= 1e-10 * 4 * kPi * R * R);
        CHECK(std::abs(s.total_mean_curvature - 4 * kPi * R) <= 1e-10 * 4 * kPi * R);
        CHECK(std::abs(s.total_abs_mean_curvature - 4 * kPi * R) <=
              1e-10 * 4 * kPi * R);
        CHECK(std::abs(s.total_gauss_curvature - 4 * kPi) <= 1e-10 * 4 * kPi);
        CHECK(s.apex_height == doctest::Approx(2 * R));
    }
}

TEST_CASE("area by parts matches the analytic value on the sphere") {
    const MethodPair a = area_methods(sphere_profile(1.0));
    CHECK(a.value == doctest::Approx(4 * kPi).epsilon(1e-14));
    CHECK(a.alternate == doctest::Approx(4 * kPi).epsilon(1e-14));
    CHECK(a.residual() <= 1e-12);
}

TEST_CASE("F-form total mean curvature equals the analytic antiderivative value") {
    // pi int_0^pi (sin s - s cos s) ds = pi [2 cos s + ... ] = 4 pi, from the
    // antiderivative s sin s + 2 cos s of the integrand.
    const MethodPair h = total_mean_curvature_methods(sphere_profile(1.0));
    CHECK(h.value == doctest::Approx(4 * kPi).epsilon(1e-14));
    CHECK(h.alternate == doctest::Approx(4 * kPi).epsilon(1e-14));
}

TEST_CASE("double-sphere functionals match the closed forms") {
    const double r = 0.1, delta = 0.2, R = 1.0;
    const Profile p = double_sphere_raw(r, delta, R);
    const double area_expected =
        2 * kPi * delta * delta + 2 * kPi * kPi * delta * (2 * R - r) +
        4 * kPi * (R * R - r * r + (R - 2 * r) * (R - 2 * r));
    const double tmc_expected = 4 * kPi * r + kPi * kPi * delta;
    CHECK(area(p) == doctest::Approx(area_expected).epsilon(1e-12));
    CHECK(total_mean_curvature(p) == doctest::Approx(tmc_expected).epsilon(1e-12));
    CHECK(total_gauss_curvature(p) == doctest::Approx(4 * kPi).epsilon(1e-12));
}

TEST_CASE("absolute total mean curvature against a 1e6-panel Simpson oracle") {
    const double r = 0.1, delta = 0.2, R = 1.0;
    const Profile p = double_sphere_raw(r, delta, R);
    const CurveEval ev = evaluate_curve(p);
    double oracle = 0.0;
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        const double sa = p.breakpoints[i].s, sb = p.breakpoints[i + 1].s;
        const double m = p.slope(i);
        oracle += oracles::simpson(
            [&](double s) {
                return std::abs(std::sin(p.theta(s)) + m * ev.x(s));
            },
            sa, sb, 1000000);
    }
    oracle *= kPi;
    const double value = total_abs_mean_curvature(p);
    CHECK(value == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(value >= std::abs(total_mean_curvature(p)));
}

TEST_CASE("axiconvex profiles have abs mean curvature >= mean curvature") {
    auto suite = random_suite(ProfileClass::axiconvex, 20, 99);
    for (const Profile& p : suite) {
        const GeometricSummary s = summarize_unchecked(p);
        CHECK(s.total_abs_mean_curvature >=
              s.total_mean_curvature - 1e-10 * std::abs(s.total_mean_curvature));
    }
}

TEST_CASE("principal curvatures on spheres, cylinders, and the double sphere") {
    const Profile s2 = sphere_profile(2.0);
    const PrincipalCurvatures pc = principal_curvatures(s2, kPi);
    CHECK(pc.kappa1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pc.kappa2 == doctest::Approx(0.5).epsilon(1e-12));

    // Quarter circle, unit vertical run at x = 1, then quarter circle out.
    const Profile cyl = make_profile(
        kPi + 1.0,
        {{0.0, 0.0}, {kPi / 2, kPi / 2}, {kPi / 2 + 1.0, kPi / 2}, {kPi + 1.0, kPi}});
    const PrincipalCurvatures mid = principal_curvatures(cyl, kPi / 2 + 0.5);
    CHECK(mid.kappa1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(mid.kappa2) < 1e-15);

    const double r = 0.1, delta = 0.2, R = 1.0;
    const Profile ds = double_sphere_raw(r, delta, R);
    const double s_inner = delta + kPi * (R + r) + 0.1;  // fourth piece
    CHECK(principal_curvatures(ds, s_inner).kappa2 ==
          doctest::Approx(-1.0 / (R - 2 * r)).epsilon(1e-12));
}

TEST_CASE("kappa1 takes the slope limit at the poles") {
    const Profile p = sphere_profile(0.5);
    CHECK(principal_curvatures(p, 0.0).kappa1 == doctest::Approx(2.0));
    CHECK(principal_curvatures(p, p.length).kappa1 == doctest::Approx(2.0));
}

TEST_CASE("one-sided curvature queries at a breakpoint") {
    const Profile cyl = make_profile(
        kPi + 1.0,
        {{0.0, 0.0}, {kPi / 2, kPi / 2}, {kPi / 2 + 1.0, kPi / 2}, {kPi + 1.0, kPi}});
    const double s_bp = kPi / 2;
    CHECK(principal_curvatures(cyl, s_bp, Side::left).kappa2 ==
          doctest::Approx(1.0));
    CHECK(std::abs(principal_curvatures(cyl, s_bp, Side::right).kappa2) < 1e-15);
}

TEST_CASE("gauss curvature integral diagnoses truncated profiles") {
    const Profile half = make_profile(kPi / 2, {{0.0, 0.0}, {kPi / 2, kPi / 2}});
    CHECK(total_gauss_curvature(half) == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK_THROWS_AS(summarize(half), std::invalid_argument);
    CHECK(summarize_unchecked(half).total_gauss_curvature ==
          doctest::Approx(2 * kPi));
}

TEST_CASE("reversal symmetry: reflected profile has the same summary") {
    const DoubleSphereSolution ds = build_double_sphere(0.1, 8 * kPi);
    const GeometricSummary a = summarize_unchecked(ds.profile);
    const GeometricSummary b = summarize_unchecked(reversed(ds.profile));
    const double scale = std::max(1.0, a.area);
    CHECK(std::abs(a.area - b.area) <= 1e-10 * scale);
    CHECK(std::abs(a.total_mean_curvature - b.total_mean_curvature) <= 1e-10 * scale);
    CHECK(std::abs(a.total_abs_mean_curvature - b.total_abs_mean_curvature) <=
          1e-10 * scale);
    CHECK(std::abs(a.total_gauss_curvature - b.total_gauss_curvature) <=
          1e-10 * scale);
    CHECK(std::abs(a.apex_height - b.apex_height) <= 1e-10 * scale);
}

TEST_CASE("scaling law: t^2 on area, t on mean curvature, none on gauss") {
    std::mt19937_64 rng(5);
    const Profile p = random_profile(ProfileClass::axiconvex, rng);
    const double t = 2.75;
    const Profile q = scaled(p, t);
    CHECK(area(q) == doctest::Approx(t * t * area(p)).epsilon(1e-11));
    CHECK(total_mean_curvature(q) ==
          doctest::Approx(t * total_mean_curvature(p)).epsilon(1e-11));
    CHECK(total_abs_mean_curvature(q) ==
          doctest::Approx(t * total_abs_mean_curvature(p)).epsilon(1e-9));
    CHECK(total_gauss_curvature(q) ==
          doctest::Approx(total_gauss_curvature(p)).epsilon(1e-12));
}

TEST_CASE("method pairs stay consistent on random admissible profiles") {
    auto suite = random_suite(ProfileClass::admissible, 25, 123);
    for (const Profile& p : suite) {
        const MethodPair a = area_methods(p);
        CHECK(a.residual() <= 1e-9 * std::max(1.0, std::abs(a.value)));
    }
    auto axi = random_suite(ProfileClass::axiconvex, 25, 321);
    for (const Profile& p : axi) {
        const MethodPair h = total_mean_curvature_methods(p);
        CHECK(h.residual() <= 1e-9 * std::max(1.0, std::abs(h.value)));
    }
}
