// Timing comparison of the parallel enumeration and search kernels against
// their serial reference implementations. Results are environment-dependent;
// correctness equality is asserted before timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "infassoc/associahedron.hpp"
#include "infassoc/complexnav.hpp"

using namespace infassoc;

namespace {

template <typename F> double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

template <typename F> double best_of(int repeats, F&& f) {
    double best = 0;
    for (int i = 0; i < repeats; ++i) {
        const double t = seconds(f);
        if (i == 0 || t < best) best = t;
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 11;
    const int repeats = 3;

    if (enumerate_tessellations_serial(n) != enumerate_tessellations(n)) {
        std::fprintf(stderr, "enumeration mismatch at n=%d\n", n);
        return 1;
    }
    report((std::string("enumerate faces n=") + std::to_string(n)).c_str(),
           best_of(repeats, [&] { enumerate_tessellations_serial(n); }),
           best_of(repeats, [&] { enumerate_tessellations(n); }));

    report((std::string("face lattice n=") + std::to_string(n)).c_str(),
           best_of(repeats, [&] { face_lattice_serial(n); }),
           best_of(repeats, [&] { face_lattice(n); }));

    // flip distance across a 12-corner window: base tessellation to a fan
    std::vector<Dyadic> pts;
    for (int m : {0, 1, 2, 3, 4, 6, 8, 12, 16, 20, 24, 28}) pts.push_back(Dyadic::from_parts(m, 5));
    StandardPartition window = StandardPartition::from_breakpoints(pts);

    std::vector<std::pair<int, int>> fan;
    for (int j = 4; j <= 12; ++j) fan.emplace_back(2, j);
    FTessellation from = FTessellation::base();
    FTessellation to = tessellation_in_window(window, fan);
    WindowPolicy w{window};

    const int d_serial = bfs_distance_serial(from, to, w);
    const int d_parallel = bfs_distance(from, to, w);
    if (d_serial != d_parallel) {
        std::fprintf(stderr, "distance mismatch: %d vs %d\n", d_serial, d_parallel);
        return 1;
    }
    std::printf("window flip distance = %d\n", d_serial);
    report("flip BFS, 12-corner window",
           best_of(repeats, [&] { bfs_distance_serial(from, to, w); }),
           best_of(repeats, [&] { bfs_distance(from, to, w); }));
    return 0;
}
