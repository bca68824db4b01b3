// Compares the serial reference scan, the OpenMP scan and the orbit-folded
// enumeration on a few representative codes.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twc/code.hpp"

using namespace twc;
using clk = std::chrono::steady_clock;

static double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

static void bench(uint64_t p, unsigned h, uint64_t d) {
    Ring R = Ring::init(p, h);
    CodeSpec spec = CodeSpec::make(p, h, d);

    auto t0 = clk::now();
    WeightDistribution serial = weight_distribution_serial(spec, R);
    auto t1 = clk::now();

    EnumOptions par;
    par.override_budget = true;
    WeightDistribution parallel = weight_distribution_enum(spec, R, par);
    auto t2 = clk::now();

    EnumOptions orb;
    orb.use_orbits = true;
    orb.override_budget = true;
    orb.cross_check = false;
    WeightDistribution orbit = weight_distribution_enum(spec, R, orb);
    auto t3 = clk::now();

    bool agree = serial == parallel && serial == orbit;
    std::printf("p=%2llu h=%u d=%2llu  serial %8.3fs  openmp %8.3fs  orbit %8.3fs  %s\n",
                (unsigned long long)p, h, (unsigned long long)d,
                seconds(t0, t1), seconds(t1, t2), seconds(t2, t3),
                agree ? "agree" : "DISAGREE");
}

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp not enabled; parallel path falls back to serial\n");
#endif
    bench(5, 3, 1);
    bench(7, 3, 1);
    bench(7, 3, 2);
    bench(11, 3, 1);
    return 0;
}
