// OpenMP kernels against their serial references.
#include "sigcurve/kernels.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

using namespace sigcurve;
using namespace sigcurve::kernels;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double par, double ser, bool same) {
    std::printf("%-34s omp %9.4f s  serial %9.4f s  speedup %5.2f  %s\n", name, par, ser, ser / par,
                same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::mt19937_64 rng(1);

    for (size_t n : {200, 800}) {
        std::vector<Rat> a(n), b(n);
        for (size_t i = 0; i < n; ++i) {
            a[i] = rat(long(rng() % 2000001) - 1000000, long(rng() % 997 + 1));
            b[i] = rat(long(rng() % 2000001) - 1000000, long(rng() % 991 + 1));
        }
        std::vector<Rat> p, s;
        double tp = best_of(3, [&] { p = convolve(a, b, n); });
        double ts = best_of(3, [&] { s = convolve_serial(a, b, n); });
        char name[64];
        std::snprintf(name, sizeof name, "rational convolution n=%zu", n);
        report(name, tp, ts, p == s);
    }

    const uint64_t prime = (uint64_t(1) << 61) - 1;
    for (size_t dim : {300, 700}) {
        std::vector<uint64_t> m(dim * (dim + 20));
        for (auto& x : m) x = rng() % prime;
        auto mp = m, ms = m;
        std::vector<size_t> pp, ps;
        double tp = best_of(1, [&] { pp = row_reduce_mod(mp, dim, dim + 20, prime); });
        double ts = best_of(1, [&] { ps = row_reduce_mod_serial(ms, dim, dim + 20, prime); });
        char name[64];
        std::snprintf(name, sizeof name, "row reduction mod p %zux%zu", dim, dim + 20);
        report(name, tp, ts, pp == ps && mp == ms);
    }
}
