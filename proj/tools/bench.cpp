// Compares the parallel kernels against serial execution of the same inputs
// (and against the independent reference implementations where one exists).
// With a single hardware thread the speedups hover around 1x by design; the
// table is still useful as a regression record for kernel cost.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ghgeom/correspondence.hpp"
#include "ghgeom/generators.hpp"
#include "ghgeom/interval_union.hpp"
#include "ghgeom/metric_tree.hpp"
#include "ghgeom/reference.hpp"
#include "ghgeom/ultrametric.hpp"

using namespace ghgeom;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_ms(F&& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        fn();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

void print_row(const char* name, double serial_ms, double parallel_ms, double diff) {
    std::printf("%-28s %10.2f %12.2f %8.2fx %12.3e\n", name, serial_ms, parallel_ms,
                serial_ms / std::max(parallel_ms, 1e-9), diff);
}

}  // namespace

int main() {
    const int threads = max_threads();
    std::printf("hardware threads: %d\n\n", threads);
    std::printf("%-28s %10s %12s %9s %12s\n", "kernel", "serial/ms", "parallel/ms", "speedup",
                "max |diff|");

    // Correspondence distortion: OMP kernel vs the plain-loop oracle.
    {
        FiniteMetricSpace x = random_euclidean_space(300, 11);
        FiniteMetricSpace y = random_euclidean_space(300, 12);
        std::mt19937_64 rng(13);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 300; ++i) pairs.push_back({i, i});
        for (int k = 0; k < 300; ++k)
            pairs.push_back({static_cast<int>(rng() % 300), static_cast<int>(rng() % 300)});
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        Correspondence r(300, 300, pairs);
        double serial_value = 0.0, parallel_value = 0.0;
        const double serial_ms =
            time_best_ms([&] { serial_value = reference::distortion_plain(r, x, y); });
        set_threads(threads);
        const double parallel_ms = time_best_ms([&] { parallel_value = distortion(r, x, y); });
        print_row("distortion 300x300", serial_ms, parallel_ms,
                  std::fabs(serial_value - parallel_value));
    }

    // Minimax matrix: single-linkage merge fill vs the Floyd DP oracle.
    {
        FiniteMetricSpace x = random_euclidean_space(400, 21);
        Matrix a, b;
        const double serial_ms = time_best_ms([&] { a = reference::minimax_floyd(x.matrix()); });
        const double parallel_ms = time_best_ms([&] { b = minimax_matrix(x); });
        double diff = 0.0;
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j) diff = std::max(diff, std::fabs(a(i, j) - b(i, j)));
        print_row("minimax 400 pts", serial_ms, parallel_ms, diff);
    }

    // Envelope Hausdorff between unions: one thread vs all threads.
    {
        MetricTree tree = random_tree(240, 31);
        IntervalUnion a = IntervalUnion::from_points(tree, random_tree_subset(tree, 60, 32));
        IntervalUnion b = IntervalUnion::from_points(tree, random_tree_subset(tree, 60, 33));
        double va = 0.0, vb = 0.0;
        set_threads(1);
        const double serial_ms = time_best_ms([&] { va = hausdorff_subsets(a, b); });
        set_threads(threads);
        const double parallel_ms = time_best_ms([&] { vb = hausdorff_subsets(a, b); });
        print_row("union hausdorff n=240", serial_ms, parallel_ms, std::fabs(va - vb));
    }

    // Exact GH search: serial engine vs parallel engine.
    {
        FiniteMetricSpace x = random_euclidean_space(5, 41);
        FiniteMetricSpace y = random_euclidean_space(6, 42);
        double va = 0.0, vb = 0.0;
        const double serial_ms = time_best_ms(
            [&] { va = gh_exact(x, y, GhBudget{30}, GhEngine::Serial).value; });
        const double parallel_ms = time_best_ms(
            [&] { vb = gh_exact(x, y, GhBudget{30}, GhEngine::Parallel).value; });
        print_row("gh_exact 5x6", serial_ms, parallel_ms, std::fabs(va - vb));
    }

    if (threads == 1)
        std::printf("\nnote: single hardware thread; parallel timings equal serial modulo "
                    "scheduling overhead.\n");
    return 0;
}
