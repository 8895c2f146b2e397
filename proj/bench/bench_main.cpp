// Times the OpenMP kernels against their serial references on the same
// inputs and prints one table row per kernel. Results must agree exactly;
// the run aborts if they do not.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "ogc/convexity.hpp"
#include "ogc/distance.hpp"
#include "ogc/transforms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ogc;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm-up
    const auto start = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %12.2f %12.2f %9.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-34s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

    {
        auto g = random_cactus(400, 42);
        DistanceMatrix a, b;
        const double ts = time_ms([&] { a = all_pairs_distances(g, Execution::Serial); }, 5);
        const double tp = time_ms([&] { b = all_pairs_distances(g, Execution::Parallel); }, 5);
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (a.at(u, v) != b.at(u, v)) {
                    std::fprintf(stderr, "distance mismatch\n");
                    return 1;
                }
            }
        }
        row("all-pairs BFS, cactus n=400", ts, tp);
    }
    {
        auto g = random_tournament(200, 7);
        DistanceMatrix a, b;
        const double ts = time_ms([&] { a = all_pairs_distances(g, Execution::Serial); }, 5);
        const double tp = time_ms([&] { b = all_pairs_distances(g, Execution::Parallel); }, 5);
        row("all-pairs BFS, tournament n=200", ts, tp);
    }
    {
        auto g = tight_example(5);
        SolveOptions ser{24, Execution::Serial};
        SolveOptions par{24, Execution::Parallel};
        SolveResult a, b;
        const double ts = time_ms([&] { a = min_hull_set(g, ser); }, 3);
        const double tp = time_ms([&] { b = min_hull_set(g, par); }, 3);
        if (a.witness != b.witness || a.nodes_explored != b.nodes_explored) {
            std::fprintf(stderr, "solver mismatch\n");
            return 1;
        }
        row("exact ohn, tight example k=5", ts, tp);
    }
    {
        auto g = random_tournament(16, 3);
        SolveOptions ser{24, Execution::Serial};
        SolveOptions par{24, Execution::Parallel};
        SolveResult a, b;
        const double ts = time_ms([&] { a = min_geodetic_set(g, ser); }, 3);
        const double tp = time_ms([&] { b = min_geodetic_set(g, par); }, 3);
        if (a.witness != b.witness) {
            std::fprintf(stderr, "solver mismatch\n");
            return 1;
        }
        row("exact ogn, tournament n=16", ts, tp);
    }
    return 0;
}
