// Serial vs OpenMP timings for contact detection and the alpha sweep.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "swim/calibrate.hpp"
#include "swim/contact_detect.hpp"
#include "swim/pipeline.hpp"

using namespace swim;

namespace {

template <class F>
double best_of(int runs, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < runs; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel)
{
    std::printf("%-22s %10.4f %10.4f %8.2fx\n", name, serial, parallel, serial / parallel);
}

} // namespace

int main()
{
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

    const auto config = cambridge_default();
    Rng world_rng = Rng::derive(config.rng_seed, 0);
    const World world = generate_world(config, world_rng);
    const auto timeline = run_mobility(config, world);
    const auto ranges = config.radio_ranges();

    std::size_t sink = 0;
    const double ds = best_of(5, [&] { sink += detect_contacts_serial(timeline, ranges).records.size(); });
    const double dp = best_of(5, [&] { sink += detect_contacts(timeline, ranges).records.size(); });
    row("detect_contacts", ds, dp);

    const auto target = simulated_curve(config);
    const std::vector<double> alphas{0.1, 0.3, 0.5, 0.7, 0.9};
    const double ss = best_of(1, [&] { sink += alpha_sweep(config, target, alphas, 3, Execution::serial).points.size(); });
    const double sp = best_of(1, [&] { sink += alpha_sweep(config, target, alphas, 3, Execution::parallel).points.size(); });
    row("alpha_sweep (5x3)", ss, sp);

    return sink == 0;
}
