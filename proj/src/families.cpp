#include "axicurv/families.hpp"

#include <algorithm>
#include <cmath>

#include "axicurv/parallel.hpp"

namespace axicurv {

double dimple_gluing_f(double x, double R, double eps) {
    return ((R + eps) * std::cos(x) - R) / std::sin(x);
}

DimpleSolution build_dimple(double R, double eps) {
    if (!(R > 0.0) || !(eps > 0.0) || !(eps < 0.5 * R))
        throw infeasible_error("build_dimple: requires 0 < eps < R/2");

    const double phi_eps = 0.5 * kPi - eps;
    const double target = dimple_gluing_f(phi_eps, R, eps);
    auto g = [&](double x) { return dimple_gluing_f(x, R, eps) + target; };

    double lo = 1e-12, hi = 0.5 * kPi - 1e-12;
    double g_lo = g(lo), g_hi = g(hi);
    if (!(g_lo > 0.0 && g_hi < 0.0) && !(g_lo < 0.0 && g_hi > 0.0))
        throw infeasible_error("build_dimple: no sign change for phi_R bracket");
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((g_lo < 0.0) == (gm < 0.0)) {
            lo = mid;
            g_lo = gm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-14 * std::max(1.0, mid)) break;
    }
    const double phi_R = 0.5 * (lo + hi);

    const double s0 = (phi_R + phi_eps) *
                      (R * std::sin(phi_R) - eps * std::sin(phi_eps)) /
                      (std::sin(phi_R) + std::sin(phi_eps));
    if (!(s0 >= 0.0))
        throw infeasible_error("build_dimple: negative gluing length");

    const double s1 = R * (kPi - phi_R);
    const double s2 = s1 + s0;
    const double L = eps * phi_eps + s0 + s1;
    Profile profile = make_profile(
        L, {{0.0, 0.0}, {s1, kPi - phi_R}, {s2, kPi + phi_eps}, {L, kPi}});

    // Re-verify the gluing against the piecewise closed forms.
    const CurveEval ev = evaluate_curve(profile);
    double res = std::abs(ev.x(s1) - R * std::sin(phi_R));
    res = std::max(res, std::abs(ev.z(s1) - R * (1.0 + std::cos(phi_R))));
    res = std::max(res, std::abs(ev.x(s2) - eps * std::sin(phi_eps)));
    res = std::max(res, std::abs(ev.z(s2) - (2.0 * R - eps * std::cos(phi_eps))));
    res = std::max(res, std::abs(ev.z(L) - (2.0 * R - eps)));
    res = std::max(res, std::abs(ev.x(L)));

    DimpleSolution sol{R, eps, phi_eps, phi_R, s0, profile,
                       summarize_unchecked(profile), res / R};
    return sol;
}

PackingCount dimple_packing_count(double R, double eps) {
    if (!(eps < kPi * R / 8.0))
        throw std::invalid_argument("dimple_packing_count: need eps < pi R / 8");
    const auto K =
        static_cast<std::int64_t>(std::floor(kPi * R / (8.0 * eps) - 0.5));
    if (K <= 0) return {0, 0, true};
    return {K, par::patch_count_sum(R, eps, K), false};
}

MultiDimpleAggregate multi_dimple_aggregate(double R, double eps, double A0) {
    if (std::abs(4.0 * kPi * R * R - A0) > 1e-9 * A0)
        throw std::invalid_argument(
            "multi_dimple_aggregate: normalization requires 4 pi R^2 = A0");
    const PackingCount pc = dimple_packing_count(R, eps);
    if (pc.degenerate)
        throw std::invalid_argument("multi_dimple_aggregate: no patch fits");
    const double n = static_cast<double>(pc.N);
    MultiDimpleAggregate agg;
    agg.N = pc.N;
    agg.total_mean_curvature =
        4.0 * kPi * R - kPi * (2.0 - 0.5 * kPi) * n * eps;
    agg.area = 4.0 * kPi * R * R + kPi * n * eps * eps;
    agg.t_eps = std::sqrt(A0 / agg.area);
    agg.rescaled_mean_curvature = agg.t_eps * agg.total_mean_curvature;
    return agg;
}

DoubleSphereSolution build_double_sphere(double r, double A0) {
    if (!(r > 0.0) || !(A0 > 0.0))
        throw std::invalid_argument("build_double_sphere: r and A0 must be positive");
    const double delta = 2.0 * r;
    // Area polynomial in R with delta = 2r:
    //   8 pi R^2 + 8 pi r (pi - 2) R + 4 pi r^2 (5 - pi) - A0 = 0.
    const double a = 8.0 * kPi;
    const double b = 8.0 * kPi * r * (kPi - 2.0);
    const double c = 4.0 * kPi * r * r * (5.0 - kPi) - A0;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0)
        throw infeasible_error("build_double_sphere: negative discriminant");
    const double R = (-b + std::sqrt(disc)) / (2.0 * a);
    if (!(R - 2.0 * r > 0.0))
        throw infeasible_error("build_double_sphere: root violates R > 2r");

    const double L = 2.0 * delta + kPi * (2.0 * R - r);
    const double s1 = delta;
    const double s2 = delta + kPi * R;
    const double s3 = delta + kPi * (R + r);
    const double s4 = delta + kPi * (2.0 * R - r);
    Profile profile =
        make_profile(L, {{0.0, 0.0},
                         {s1, 0.0},
                         {s2, kPi},
                         {s3, 2.0 * kPi},
                         {s4, kPi},
                         {L, kPi}});
    return {r, delta, A0, R, profile, summarize_unchecked(profile)};
}

AsymptoticFit fit_asymptotics(std::vector<LadderPoint> points,
                              ExpansionModel model, int window) {
    if (points.size() < 4)
        throw std::invalid_argument("fit_asymptotics: need at least 4 ladder points");
    std::sort(points.begin(), points.end(),
              [](const LadderPoint& a, const LadderPoint& b) {
                  return a.param < b.param;
              });
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i].param == points[i + 1].param)
            throw std::invalid_argument("fit_asymptotics: duplicate parameters");

    AsymptoticFit fit;
    fit.exponent = model == ExpansionModel::linear ? 1 : 2;
    fit.window = std::min<int>(std::max(window, 2),
                               static_cast<int>(points.size()));

    auto basis = [&](double p) {
        return model == ExpansionModel::linear ? p : p * p;
    };

    // Normal equations on the window of smallest parameters.
    double sx = 0, sxx = 0, sy = 0, sxy = 0;
    const int n = fit.window;
    for (int i = 0; i < n; ++i) {
        const double xb = basis(points[static_cast<std::size_t>(i)].param);
        const double y = points[static_cast<std::size_t>(i)].value;
        sx += xb;
        sxx += xb * xb;
        sy += y;
        sxy += xb * y;
    }
    const double det = n * sxx - sx * sx;
    const double scale = n * sxx + sx * sx;
    fit.ill_conditioned = std::abs(det) < 1e-12 * std::max(1.0, scale);
    if (!fit.ill_conditioned) {
        fit.c1 = (n * sxy - sx * sy) / det;
        fit.c0 = (sy - fit.c1 * sx) / n;
    }
    for (int i = 0; i < n; ++i) {
        const LadderPoint& pt = points[static_cast<std::size_t>(i)];
        fit.max_residual = std::max(
            fit.max_residual, std::abs(fit.c0 + fit.c1 * basis(pt.param) - pt.value));
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double dx = basis(points[i + 1].param) - basis(points[i].param);
        fit.pairwise_slopes.push_back((points[i + 1].value - points[i].value) / dx);
    }
    return fit;
}

}  // namespace axicurv
