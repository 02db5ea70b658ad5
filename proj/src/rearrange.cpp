#include "axicurv/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "axicurv/geometry.hpp"

namespace axicurv {

namespace {

using detail::moment_cos;
using detail::moment_sin;

struct Integrals {
    double sin = 0.0;
    double cos = 0.0;
    double F = 0.0;               // int (sin theta - theta cos theta) ds
    double s_one_minus_cos = 0.0; // int s (1 - cos theta) ds
};

Integrals closed_form_integrals(const Profile& p) {
    Integrals out;
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
        const Breakpoint& a = p.breakpoints[i];
        const Breakpoint& b = p.breakpoints[i + 1];
        const double d = b.s - a.s;
        const double m = (b.theta - a.theta) / d;
        const double ic = moment_cos(0, a.theta, m, d);
        const double is = moment_sin(0, a.theta, m, d);
        const double m1c = moment_cos(1, a.theta, m, d);
        out.sin += is;
        out.cos += ic;
        out.F += is - (a.theta * ic + m * m1c);
        out.s_one_minus_cos -= a.s * ic + m1c;
    }
    out.s_one_minus_cos += 0.5 * p.length * p.length;
    return out;
}

}  // namespace

RearrangedProfile monotone_rearrange(const Profile& profile, int n_grid) {
    if (n_grid < 1024)
        throw std::invalid_argument("monotone_rearrange: n_grid must be >= 1024");
    // Range is decided at breakpoints for piecewise-linear theta.
    if (profile.theta_min() < -1e-12 || profile.theta_max() > kPi + 1e-12)
        throw std::invalid_argument(
            "monotone_rearrange: theta must be valued in [0,pi]; use fold mode "
            "for general profiles");
    if (profile.is_nondecreasing())
        return {profile, profile, RearrangeMode::monotone, n_grid};

    const double L = profile.length;
    std::vector<double> samples(static_cast<std::size_t>(n_grid) + 1);
    for (int k = 0; k <= n_grid; ++k)
        samples[static_cast<std::size_t>(k)] = profile.theta(L * k / n_grid);
    std::sort(samples.begin(), samples.end());

    std::vector<Breakpoint> bps(samples.size());
    for (int k = 0; k <= n_grid; ++k)
        bps[static_cast<std::size_t>(k)] = {L * k / n_grid,
                                            samples[static_cast<std::size_t>(k)]};
    return {profile, make_profile(L, std::move(bps)), RearrangeMode::monotone,
            n_grid};
}

double fold_angle(double theta) {
    const double j = std::floor(theta / kPi);
    const long long ji = static_cast<long long>(j);
    const double r = theta - j * kPi;
    return (ji % 2 == 0) ? r : kPi - r;
}

RearrangedProfile fold(const Profile& profile) {
    std::vector<Breakpoint> nodes;
    nodes.reserve(profile.breakpoints.size() * 2);
    nodes.push_back(profile.breakpoints.front());
    for (std::size_t i = 0; i + 1 < profile.breakpoints.size(); ++i) {
        const Breakpoint& a = profile.breakpoints[i];
        const Breakpoint& b = profile.breakpoints[i + 1];
        const double m = (b.theta - a.theta) / (b.s - a.s);
        if (m != 0.0) {
            // Exact abscissae where theta crosses a multiple of pi.
            const double lo = std::min(a.theta, b.theta);
            const double hi = std::max(a.theta, b.theta);
            long long k_first = static_cast<long long>(std::ceil(lo / kPi));
            long long k_last = static_cast<long long>(std::floor(hi / kPi));
            std::vector<Breakpoint> crossings;
            for (long long k = k_first; k <= k_last; ++k) {
                const double level = k * kPi;
                if (level <= lo || level >= hi) continue;
                const double s = a.s + (level - a.theta) / m;
                if (s <= a.s || s >= b.s) continue;
                crossings.push_back({s, level});
            }
            if (m < 0.0) std::reverse(crossings.begin(), crossings.end());
            for (const Breakpoint& c : crossings)
                if (c.s > nodes.back().s) nodes.push_back(c);
        }
        if (b.s > nodes.back().s) nodes.push_back(b);
    }

    // Each sub-segment now lies in one band [j pi, (j+1) pi]; reflect the
    // odd bands.
    std::vector<Breakpoint> folded(nodes.size());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double mid = 0.5 * (nodes[i].theta + nodes[i + 1].theta);
        const long long j = static_cast<long long>(std::floor(mid / kPi));
        const double base = static_cast<double>(j) * kPi;
        const bool even = ((j % 2) + 2) % 2 == 0;
        if (even) {
            folded[i] = {nodes[i].s, nodes[i].theta - base};
            folded[i + 1] = {nodes[i + 1].s, nodes[i + 1].theta - base};
        } else {
            folded[i] = {nodes[i].s, base + kPi - nodes[i].theta};
            folded[i + 1] = {nodes[i + 1].s, base + kPi - nodes[i + 1].theta};
        }
    }
    return {profile, make_profile(profile.length, std::move(folded)),
            RearrangeMode::fold, 0};
}

double measure_at_level(const Profile& profile, double c) {
    double measure = 0.0;
    for (std::size_t i = 0; i + 1 < profile.breakpoints.size(); ++i) {
        const Breakpoint& a = profile.breakpoints[i];
        const Breakpoint& b = profile.breakpoints[i + 1];
        const double d = b.s - a.s;
        if (a.theta == b.theta) {
            if (a.theta >= c) measure += d;
            continue;
        }
        const double m = (b.theta - a.theta) / d;
        const double u = std::clamp((c - a.theta) / m, 0.0, d);
        measure += (m > 0.0) ? d - u : u;
    }
    return measure;
}

RearrangementChecks check_rearrangement_properties(const Profile& source,
                                                   const Profile& result,
                                                   int n_levels) {
    RearrangementChecks ck;
    ck.monotone_ok = result.is_nondecreasing(1e-12);
    if (!ck.monotone_ok) ck.violations.push_back("result not non-decreasing");

    ck.modulus_source = source.lipschitz_modulus();
    ck.modulus_result = result.lipschitz_modulus();
    // Rearrangement cannot expand the modulus; it may shrink it when the
    // steepest slope never appears alone at any level.
    ck.modulus_ok =
        ck.modulus_result <= ck.modulus_source * (1.0 + 1e-6) + 1e-300;
    if (!ck.modulus_ok)
        ck.violations.push_back("Lipschitz modulus grew: " +
                                std::to_string(ck.modulus_result) + " > " +
                                std::to_string(ck.modulus_source));

    const Integrals a = closed_form_integrals(source);
    const Integrals b = closed_form_integrals(result);
    ck.residual_sin = std::abs(a.sin - b.sin);
    ck.residual_cos = std::abs(a.cos - b.cos);
    ck.residual_F = std::abs(a.F - b.F);
    ck.hl_source = a.s_one_minus_cos;
    ck.hl_result = b.s_one_minus_cos;
    const double hl_slack = 1e-12 * source.length * source.length * kPi;
    ck.hl_ok = ck.hl_result >= ck.hl_source - hl_slack;
    if (!ck.hl_ok)
        ck.violations.push_back(
            "Hardy-Littlewood instance violated by " +
            std::to_string(ck.hl_source - ck.hl_result));

    for (int j = 1; j <= n_levels; ++j) {
        const double c = kPi * j / (n_levels + 1);
        const double dev =
            std::abs(measure_at_level(source, c) - measure_at_level(result, c));
        ck.equimeasure_max_dev = std::max(ck.equimeasure_max_dev, dev);
    }

    ck.area_source = area(source);
    ck.area_result = area(result);
    return ck;
}

}  // namespace axicurv
