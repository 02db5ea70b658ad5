#include "axicurv/random_profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace axicurv {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    // 53-bit mantissa draw; avoids distribution objects so the stream is
    // identical across standard libraries.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// x(L) of the warped profile s_k = L * u_k^alpha with fixed angles.
double x_end(const std::vector<double>& u, const std::vector<double>& th,
             double L, double alpha) {
    double x = 0.0;
    double s_prev = 0.0;
    for (std::size_t k = 1; k < u.size(); ++k) {
        const double s = L * std::pow(u[k], alpha);
        const double d = s - s_prev;
        x += segment_integrals(th[k - 1], th[k], d).int_cos;
        s_prev = s;
    }
    return x;
}

struct WarpResult {
    bool ok;
    Profile profile;
};

WarpResult warp_to_closure(const std::vector<double>& u,
                           const std::vector<double>& th, double L) {
    double lo = 1.0 / 64.0, hi = 64.0;
    double g_lo = x_end(u, th, L, lo);
    double g_hi = x_end(u, th, L, hi);
    if (!(g_lo > 0.0 && g_hi < 0.0)) return {false, {}};
    double alpha = 1.0;
    for (int it = 0; it < 200; ++it) {
        alpha = 0.5 * (lo + hi);
        const double g = x_end(u, th, L, alpha);
        if (std::abs(g) <= 1e-14 * L) break;
        if (g > 0.0)
            lo = alpha;
        else
            hi = alpha;
    }
    std::vector<Breakpoint> bps(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
        bps[k] = {L * std::pow(u[k], alpha), th[k]};
    bps.front().s = 0.0;
    bps.back().s = L;
    Profile p = make_profile(L, std::move(bps));
    if (p.lipschitz_modulus() > 1e6 / L) return {false, {}};
    return {true, std::move(p)};
}

Profile draw_once(ProfileClass cls, std::mt19937_64& rng, bool& ok) {
    const int n = 8 + static_cast<int>(rng() % 7);  // segments
    const double L = uniform(rng, 1.5, 4.0);
    std::vector<double> u(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        u[static_cast<std::size_t>(k)] = static_cast<double>(k) / n;

    std::vector<double> th(u.size());
    th.front() = 0.0;
    th.back() = kPi;
    switch (cls) {
        case ProfileClass::inner_convex: {
            std::vector<double> inc(static_cast<std::size_t>(n));
            double sum = 0.0;
            for (double& w : inc) {
                w = uniform(rng, 0.05, 1.0);
                sum += w;
            }
            double acc = 0.0;
            for (int k = 1; k < n; ++k) {
                acc += inc[static_cast<std::size_t>(k - 1)];
                th[static_cast<std::size_t>(k)] = kPi * acc / sum;
            }
            break;
        }
        case ProfileClass::axiconvex:
            for (int k = 1; k < n; ++k)
                th[static_cast<std::size_t>(k)] = uniform(rng, 0.03, kPi - 0.03);
            break;
        case ProfileClass::admissible: {
            const double amp = uniform(rng, 0.8, 1.6);
            for (int k = 1; k < n; ++k)
                th[static_cast<std::size_t>(k)] =
                    kPi * k / n + amp * uniform(rng, -1.0, 1.0);
            break;
        }
    }

    WarpResult w = warp_to_closure(u, th, L);
    if (!w.ok) {
        ok = false;
        return {};
    }
    const AdmissibilityReport rep = validate(w.profile);
    ok = rep.admissible();
    if (cls == ProfileClass::inner_convex) ok = ok && rep.is_inner_convex;
    if (cls == ProfileClass::axiconvex) ok = ok && rep.is_axiconvex;
    return w.profile;
}

}  // namespace

Profile random_profile(ProfileClass cls, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        bool ok = false;
        Profile p = draw_once(cls, rng, ok);
        if (ok) return p;
    }
    throw std::runtime_error("random_profile: rejection sampling stalled");
}

std::vector<Profile> random_suite(ProfileClass cls, int count,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Profile> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_profile(cls, rng));
    return out;
}

}  // namespace axicurv
