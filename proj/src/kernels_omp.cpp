// OpenMP kernels. Every output element is independent, so the loops
// parallelize over the output index with a static schedule.

#include "qseries/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qseries::kernels {

void conv_parallel(const mpz_class* a, const mpz_class* b, mpz_class* out, std::size_t nout, int threads) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long n = 0; n < static_cast<long long>(nout); ++n) {
        mpz_class acc = 0;
        for (long long i = 0; i <= n; ++i) {
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
        }
        out[n] = acc;
    }
#else
    (void)threads;
    conv_serial(a, b, out, nout);
#endif
}

void conv_parallel(const u64* a, const u64* b, u64* out, std::size_t nout, u64 m, int threads) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long n = 0; n < static_cast<long long>(nout); ++n) {
        u64 acc = 0;
        for (long long i = 0; i <= n; ++i) {
            acc = (acc + a[i] * b[n - i]) % m;
        }
        out[n] = acc;
    }
#else
    (void)threads;
    conv_serial(a, b, out, nout, m);
#endif
}

void sparse_mul_parallel(const mpz_class* a, std::size_t n, const Term* t, std::size_t nt, mpz_class* out,
                         int threads) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < nt; ++j) {
            long long e = t[j].exp;
            if (e > i) break;
            long long c = t[j].coeff;
            if (c >= 0) {
                mpz_addmul_ui(acc.get_mpz_t(), a[i - e].get_mpz_t(), static_cast<unsigned long>(c));
            } else {
                mpz_submul_ui(acc.get_mpz_t(), a[i - e].get_mpz_t(), static_cast<unsigned long>(-c));
            }
        }
        out[i] = acc;
    }
#else
    (void)threads;
    sparse_mul_serial(a, n, t, nt, out);
#endif
}

void sparse_mul_parallel(const u64* a, std::size_t n, const Term* t, std::size_t nt, u64* out, u64 m,
                         int threads) {
#ifdef _OPENMP
    // reduce the tiny term coefficients once, outside the hot loop
    std::vector<u64> cc(nt);
    for (std::size_t j = 0; j < nt; ++j) {
        long long c = t[j].coeff % static_cast<long long>(m);
        if (c < 0) c += static_cast<long long>(m);
        cc[j] = static_cast<u64>(c);
    }
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < nt; ++j) {
            long long e = t[j].exp;
            if (e > i) break;
            acc = (acc + a[i - e] * cc[j]) % m;
        }
        out[i] = acc;
    }
#else
    (void)threads;
    sparse_mul_serial(a, n, t, nt, out, m);
#endif
}

u64 count_residue_parallel(const u64* a, std::size_t n, u64 r, int threads) {
#ifdef _OPENMP
    u64 total = 0;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : total)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        if (a[i] == r) ++total;
    }
    return total;
#else
    (void)threads;
    return count_residue_serial(a, n, r);
#endif
}

} // namespace qseries::kernels
