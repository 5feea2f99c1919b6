// Timing comparison of the serial reference kernels against the OpenMP
// ones. Outputs one row per kernel with both times and the speedup, and
// verifies the two paths agree before reporting.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qseries/kernels.hpp"
#include "qseries/partitions.hpp"
#include "qseries/series.hpp"

using namespace qseries;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int g_threads = 2;

void report(const char* name, std::size_t n, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-24s n=%-9zu serial %9.2f ms   parallel(%d) %9.2f ms   speedup %5.2fx   %s\n", name, n,
                serial_ms, g_threads, parallel_ms, serial_ms / parallel_ms, agree ? "outputs-match" : "MISMATCH");
}

void bench_conv_u64(std::size_t P, u64 m) {
    std::mt19937_64 rng(7);
    std::vector<u64> a(P), b(P), out_s(P), out_p(P);
    for (auto& x : a) x = rng() % m;
    for (auto& x : b) x = rng() % m;

    auto t0 = Clock::now();
    kernels::conv_serial(a.data(), b.data(), out_s.data(), P, m);
    double ts = ms_since(t0);
    t0 = Clock::now();
    kernels::conv_parallel(a.data(), b.data(), out_p.data(), P, m, g_threads);
    double tp = ms_since(t0);
    report("dense conv (mod)", P, ts, tp, out_s == out_p);
}

void bench_conv_mpz(std::size_t P) {
    std::mt19937_64 rng(11);
    std::vector<mpz_class> a(P), b(P), out_s(P), out_p(P);
    for (auto& x : a) x = mpz_class(static_cast<long>(rng() % 2000)) - 1000;
    for (auto& x : b) x = mpz_class(static_cast<long>(rng() % 2000)) - 1000;

    auto t0 = Clock::now();
    kernels::conv_serial(a.data(), b.data(), out_s.data(), P);
    double ts = ms_since(t0);
    t0 = Clock::now();
    kernels::conv_parallel(a.data(), b.data(), out_p.data(), P, g_threads);
    double tp = ms_since(t0);
    report("dense conv (exact)", P, ts, tp, out_s == out_p);
}

void bench_sparse_u64(std::size_t P, u64 m) {
    std::mt19937_64 rng(13);
    std::vector<u64> a(P), out_s(P), out_p(P);
    for (auto& x : a) x = rng() % m;
    auto terms = pentagonal_terms(1, P);

    auto t0 = Clock::now();
    kernels::sparse_mul_serial(a.data(), P, terms.data(), terms.size(), out_s.data(), m);
    double ts = ms_since(t0);
    t0 = Clock::now();
    kernels::sparse_mul_parallel(a.data(), P, terms.data(), terms.size(), out_p.data(), m, g_threads);
    double tp = ms_since(t0);
    report("sparse mul (mod)", P, ts, tp, out_s == out_p);
}

void bench_sparse_mpz(std::size_t P) {
    std::mt19937_64 rng(17);
    std::vector<mpz_class> a(P), out_s(P), out_p(P);
    for (auto& x : a) x = mpz_class(static_cast<long>(rng() % 2000)) - 1000;
    auto terms = pentagonal_terms(1, P);

    auto t0 = Clock::now();
    kernels::sparse_mul_serial(a.data(), P, terms.data(), terms.size(), out_s.data());
    double ts = ms_since(t0);
    t0 = Clock::now();
    kernels::sparse_mul_parallel(a.data(), P, terms.data(), terms.size(), out_p.data(), g_threads);
    double tp = ms_since(t0);
    report("sparse mul (exact)", P, ts, tp, out_s == out_p);
}

void bench_count(std::size_t n) {
    std::mt19937_64 rng(19);
    std::vector<u64> a(n);
    for (auto& x : a) x = rng() % 4;

    auto t0 = Clock::now();
    u64 cs = kernels::count_residue_serial(a.data(), n, 0);
    double ts = ms_since(t0);
    t0 = Clock::now();
    u64 cp = kernels::count_residue_parallel(a.data(), n, 0, g_threads);
    double tp = ms_since(t0);
    report("residue count", n, ts, tp, cs == cp);
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    g_threads = omp_get_max_threads();
#endif
    if (argc > 1) g_threads = std::atoi(argv[1]);
    if (g_threads < 2) g_threads = 2;

    std::printf("kernel benchmark, serial reference vs OpenMP (%d threads)\n\n", g_threads);
    bench_conv_u64(12000, 9);
    bench_conv_mpz(1500);
    bench_sparse_u64(2000000, 9);
    bench_sparse_mpz(200000);
    bench_count(10000000);

    std::printf("\nend-to-end: abar stream t=3 mod 4, P=500000\n");
    for (int w : {1, g_threads}) {
        kernels::set_workers(w);
        auto t0 = Clock::now();
        auto s = coeffs_abar_mod(3, 4, 500000);
        std::printf("  workers=%d: %9.2f ms (checksum %llu)\n", w, ms_since(t0),
                    static_cast<unsigned long long>(kernels::count_residue(s.coeffs().data(), s.precision(), 0)));
    }
    return 0;
}
