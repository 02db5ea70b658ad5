// Wall-time comparison of the OpenMP kernels against their serial
// reference implementations. Sizes are desk scale but large enough for the
// parallel loops to matter.

#include <chrono>
#include <cstdio>
#include <vector>

#include "axicurv/families.hpp"
#include "axicurv/geometry.hpp"
#include "axicurv/parallel.hpp"
#include "axicurv/profile.hpp"
#include "axicurv/random_profiles.hpp"

using namespace axicurv;

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_of(F&& f, int repeats) {
    const double t0 = now();
    for (int i = 0; i < repeats; ++i) f();
    return (now() - t0) / repeats;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %9.4f ms   omp %9.4f ms   speedup %.2fx\n", name,
                serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", par::max_threads());

    {
        const Profile ds = build_double_sphere(0.05, 8.0 * kPi).profile;
        const CurveEval ev = evaluate_curve(ds);
        const int n = 8192;
        std::vector<double> xs(n + 1), zs(n + 1);
        for (int k = 0; k <= n; ++k) {
            const double s = ds.length * k / n;
            xs[k] = ev.x(s);
            zs[k] = ev.z(s);
        }
        volatile bool sink = false;
        const double ts = time_of(
            [&] { sink = par::polyline_self_intersects_serial(xs, zs); }, 3);
        const double tp =
            time_of([&] { sink = par::polyline_self_intersects(xs, zs); }, 3);
        (void)sink;
        report("self-intersection 8192", ts, tp);
    }

    {
        const auto profiles = random_suite(ProfileClass::admissible, 256, 9);
        std::vector<GeometricSummary> sink;
        const double ts =
            time_of([&] { sink = par::batch_summarize_serial(profiles); }, 3);
        const double tp =
            time_of([&] { sink = par::batch_summarize(profiles); }, 3);
        report("batch summaries 256", ts, tp);
    }

    {
        const double eps = 1e-7;
        const auto K = static_cast<std::int64_t>(kPi / (8.0 * eps) - 0.5);
        volatile std::int64_t sink = 0;
        const double ts =
            time_of([&] { sink = par::patch_count_sum_serial(1.0, eps, K); }, 3);
        const double tp =
            time_of([&] { sink = par::patch_count_sum(1.0, eps, K); }, 3);
        (void)sink;
        report("patch count 7.8e6 terms", ts, tp);
    }
    return 0;
}
