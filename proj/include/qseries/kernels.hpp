#pragma once

// Hot inner loops for truncated series arithmetic, in two flavours:
// a serial reference implementation and an OpenMP-parallel one. The
// `*_serial` functions are the ground truth the parallel kernels are
// tested against; production entry points dispatch on the worker count.
//
// Dense convolution and sparse multiplication are data-parallel over the
// output index. The sparse-divide recurrence is order-dependent and only
// exists in serial form.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qseries::kernels {

using u64 = std::uint64_t;

// Process-wide worker count used by the dispatching entry points.
// 1 = serial reference (the default, for reproducible timing).
int workers();
void set_workers(int w);

// One term of a sparse series: coefficient * q^exp. Coefficients of the
// theta/pentagonal generators are tiny (+-1, +-2).
struct Term {
    long long exp;
    long long coeff;
};

// out[n] = sum_{i+j=n} a[i]*b[j] for n < nout; requires nout <= na and nout <= nb.
void conv_serial(const mpz_class* a, const mpz_class* b, mpz_class* out, std::size_t nout);
void conv_parallel(const mpz_class* a, const mpz_class* b, mpz_class* out, std::size_t nout, int threads);
void conv(const mpz_class* a, const mpz_class* b, mpz_class* out, std::size_t nout);

void conv_serial(const u64* a, const u64* b, u64* out, std::size_t nout, u64 m);
void conv_parallel(const u64* a, const u64* b, u64* out, std::size_t nout, u64 m, int threads);
void conv(const u64* a, const u64* b, u64* out, std::size_t nout, u64 m);

// out[n] = sum_t terms[t].coeff * a[n - terms[t].exp]; out and a must not alias.
void sparse_mul_serial(const mpz_class* a, std::size_t n, const Term* t, std::size_t nt, mpz_class* out);
void sparse_mul_parallel(const mpz_class* a, std::size_t n, const Term* t, std::size_t nt, mpz_class* out,
                         int threads);
void sparse_mul(const mpz_class* a, std::size_t n, const Term* t, std::size_t nt, mpz_class* out);

void sparse_mul_serial(const u64* a, std::size_t n, const Term* t, std::size_t nt, u64* out, u64 m);
void sparse_mul_parallel(const u64* a, std::size_t n, const Term* t, std::size_t nt, u64* out, u64 m,
                         int threads);
void sparse_mul(const u64* a, std::size_t n, const Term* t, std::size_t nt, u64* out, u64 m);

// In-place division by a sparse series with constant term 1:
// b[n] -= sum_{exp>=1} coeff * b[n-exp]. Sequential recurrence.
void sparse_div(mpz_class* b, std::size_t n, const Term* t, std::size_t nt);
void sparse_div(u64* b, std::size_t n, const Term* t, std::size_t nt, u64 m);

// #{i < n : a[i] == r}
u64 count_residue_serial(const u64* a, std::size_t n, u64 r);
u64 count_residue_parallel(const u64* a, std::size_t n, u64 r, int threads);
u64 count_residue(const u64* a, std::size_t n, u64 r);

} // namespace qseries::kernels
