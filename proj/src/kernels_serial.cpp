// Serial reference kernels. Kept deliberately plain: these define the
// expected output of the parallel kernels.

#include "qseries/kernels.hpp"

#include <atomic>

namespace qseries::kernels {

namespace {
std::atomic<int> g_workers{1};
}

int workers() { return g_workers.load(std::memory_order_relaxed); }

void set_workers(int w) { g_workers.store(w < 1 ? 1 : w, std::memory_order_relaxed); }

void conv_serial(const mpz_class* a, const mpz_class* b, mpz_class* out, std::size_t nout) {
    for (std::size_t n = 0; n < nout; ++n) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
        }
        out[n] = acc;
    }
}

void conv_serial(const u64* a, const u64* b, u64* out, std::size_t nout, u64 m) {
    for (std::size_t n = 0; n < nout; ++n) {
        u64 acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            acc = (acc + a[i] * b[n - i]) % m;
        }
        out[n] = acc;
    }
}

namespace {

// coeff in {+-1, +-2, ...}: use addmul/submul with the absolute value
inline void mpz_acc_term(mpz_class& acc, const mpz_class& x, long long c) {
    if (c >= 0) {
        mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
    } else {
        mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
    }
}

} // namespace

void sparse_mul_serial(const mpz_class* a, std::size_t n, const Term* t, std::size_t nt, mpz_class* out) {
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < nt; ++j) {
            long long e = t[j].exp;
            if (e > static_cast<long long>(i)) break; // terms sorted ascending
            mpz_acc_term(acc, a[i - e], t[j].coeff);
        }
        out[i] = acc;
    }
}

void sparse_mul_serial(const u64* a, std::size_t n, const Term* t, std::size_t nt, u64* out, u64 m) {
    for (std::size_t i = 0; i < n; ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < nt; ++j) {
            long long e = t[j].exp;
            if (e > static_cast<long long>(i)) break;
            u64 c = static_cast<u64>(((t[j].coeff % static_cast<long long>(m)) + static_cast<long long>(m)) %
                                     static_cast<long long>(m));
            acc = (acc + a[i - e] * c) % m;
        }
        out[i] = acc;
    }
}

void sparse_div(mpz_class* b, std::size_t n, const Term* t, std::size_t nt) {
    // t[0] must be {0, 1}; the recurrence subtracts the trailing terms.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j < nt; ++j) {
            long long e = t[j].exp;
            if (e > static_cast<long long>(i)) break;
            mpz_acc_term(b[i], b[i - e], -t[j].coeff);
        }
    }
}

void sparse_div(u64* b, std::size_t n, const Term* t, std::size_t nt, u64 m) {
    for (std::size_t i = 0; i < n; ++i) {
        u64 acc = b[i];
        for (std::size_t j = 1; j < nt; ++j) {
            long long e = t[j].exp;
            if (e > static_cast<long long>(i)) break;
            long long c = -t[j].coeff;
            u64 cc = static_cast<u64>(((c % static_cast<long long>(m)) + static_cast<long long>(m)) %
                                      static_cast<long long>(m));
            acc = (acc + b[i - e] * cc) % m;
        }
        b[i] = acc;
    }
}

u64 count_residue_serial(const u64* a, std::size_t n, u64 r) {
    u64 c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == r) ++c;
    }
    return c;
}

// Dispatchers

void conv(const mpz_class* a, const mpz_class* b, mpz_class* out, std::size_t nout) {
    int w = workers();
    if (w > 1) {
        conv_parallel(a, b, out, nout, w);
    } else {
        conv_serial(a, b, out, nout);
    }
}

void conv(const u64* a, const u64* b, u64* out, std::size_t nout, u64 m) {
    int w = workers();
    if (w > 1) {
        conv_parallel(a, b, out, nout, m, w);
    } else {
        conv_serial(a, b, out, nout, m);
    }
}

void sparse_mul(const mpz_class* a, std::size_t n, const Term* t, std::size_t nt, mpz_class* out) {
    int w = workers();
    if (w > 1) {
        sparse_mul_parallel(a, n, t, nt, out, w);
    } else {
        sparse_mul_serial(a, n, t, nt, out);
    }
}

void sparse_mul(const u64* a, std::size_t n, const Term* t, std::size_t nt, u64* out, u64 m) {
    int w = workers();
    if (w > 1) {
        sparse_mul_parallel(a, n, t, nt, out, m, w);
    } else {
        sparse_mul_serial(a, n, t, nt, out, m);
    }
}

u64 count_residue(const u64* a, std::size_t n, u64 r) {
    int w = workers();
    if (w > 1) return count_residue_parallel(a, n, r, w);
    return count_residue_serial(a, n, r);
}

} // namespace qseries::kernels
