#include "qseries/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace qseries {

HeckeContext hecke_context_B11k(int k, u64 modulus) {
    HeckeContext ctx;
    ctx.ell = family_weight(Family::B, 1, 1, k); // 2^{k-1} + 1
    ctx.chi = character_of(build_B(1, 1, k));
    ctx.modulus = modulus;
    return ctx;
}

SeriesMod hecke_Tp(const SeriesMod& f, u64 p, const HeckeContext& ctx) {
    if (!is_prime(p)) throw std::invalid_argument("hecke_Tp: p must be prime");
    if (ctx.ell < 1) throw std::invalid_argument("hecke_Tp: weight must be >= 1");
    if (f.ring().m != ctx.modulus) throw std::invalid_argument("hecke_Tp: context modulus mismatch");
    if (f.e24() != 0) throw std::invalid_argument("hecke_Tp: series must have integer exponents (fold first)");
    std::size_t P = f.precision();
    if (P < p) {
        throw PrecisionError("hecke_Tp: precision " + std::to_string(P) + " < p = " + std::to_string(p));
    }

    const ModRing& ring = f.ring();
    u64 M = ring.m;
    int chi_p = ctx.chi.eval(static_cast<long long>(p));
    u64 pell = pow_mod(p % M, static_cast<u64>(ctx.ell - 1), M);
    u64 factor = 0; // chi(p) p^{ell-1} mod M
    if (chi_p == 1) {
        factor = pell;
    } else if (chi_p == -1) {
        factor = ring.neg(pell);
    }

    std::size_t newP = (P - 1) / p + 1;
    std::vector<u64> b(newP, 0);
    for (std::size_t n = 0; n < newP; ++n) {
        u64 v = f.coeffs()[n * p];
        if (n % p == 0) {
            v = ring.add(v, ring.mul(factor, f.coeffs()[n / p]));
        }
        b[n] = v;
    }
    return SeriesMod(ring, std::move(b), 0);
}

namespace {

std::size_t nonzero_count(const SeriesMod& f) {
    std::size_t c = 0;
    for (u64 v : f.coeffs()) {
        if (v != 0) ++c;
    }
    return c;
}

} // namespace

NilpotencyReport nilpotency_probe_series(SeriesMod f, const HeckeContext& ctx,
                                         const std::vector<u64>& primes) {
    for (u64 p : primes) {
        if (!is_prime(p) || gcd_ll(static_cast<long long>(p), 6) != 1) {
            throw std::invalid_argument("probe primes must be primes coprime to 6");
        }
    }
    NilpotencyReport rep;
    rep.primes = primes;
    rep.precision = f.precision();

    std::size_t nz = nonzero_count(f);
    rep.steps.push_back({0, nz, f.precision() - 1});
    if (nz == 0) {
        rep.reached_zero_at = 0;
        rep.verdict = "reached-zero-at-step-0";
        return rep;
    }

    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (f.precision() < primes[i]) {
            rep.window_exhausted = true;
            rep.verdict = "window-exhausted-at-step-" + std::to_string(i);
            return rep;
        }
        f = hecke_Tp(f, primes[i], ctx);
        nz = nonzero_count(f);
        rep.steps.push_back({primes[i], nz, f.precision() - 1});
        if (nz == 0) {
            rep.reached_zero_at = static_cast<int>(i) + 1;
            rep.verdict = "reached-zero-at-step-" + std::to_string(i + 1);
            return rep;
        }
    }
    rep.verdict = "not-reached-within-window";
    return rep;
}

NilpotencyReport nilpotency_probe(int family_k, const std::vector<u64>& primes, int t_exp, std::size_t P) {
    if (t_exp < 1) throw std::invalid_argument("t_exp must be >= 1");
    u64 M = static_cast<u64>(ipow(2, t_exp));
    HeckeContext ctx = hecke_context_B11k(family_k, M);
    SeriesMod f = eta_expand(build_B(1, 1, family_k), ModRing(M), P);
    NilpotencyReport rep = nilpotency_probe_series(std::move(f), ctx, primes);
    rep.family_k = family_k;
    rep.t_exp = t_exp;
    return rep;
}

Cong1Report verify_cong1_instance(const std::vector<u64>& primes, int d, long long n_range, int k,
                                  std::size_t P) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (n_range < 1) throw std::invalid_argument("n_range must be >= 1");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]) || gcd_ll(static_cast<long long>(primes[i]), 6) != 1) {
            throw std::invalid_argument("primes must be prime and coprime to 6");
        }
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            if (primes[i] == primes[j]) throw std::invalid_argument("primes must be distinct");
        }
    }

    Cong1Report rep;
    rep.primes = primes;
    rep.d = d;
    rep.k = k;
    rep.n_range = n_range;
    rep.precision = P;

    unsigned long long Q = 1;
    for (u64 p : primes) {
        if (Q > (~0ull) / p) throw std::overflow_error("prime product overflow");
        Q *= p;
    }
    rep.prime_product = Q;

    u64 M = static_cast<u64>(ipow(2, d));
    SeriesMod F = eta_expand(build_B(1, 1, k), ModRing(M), P);

    rep.n_max_checked = (Q >= P) ? 0 : std::min<long long>(n_range, static_cast<long long>((P - 1) / Q));
    rep.window_exhausted = rep.n_max_checked < n_range;

    for (long long n = 1; n <= rep.n_max_checked; ++n) {
        bool coprime = true;
        for (u64 p : primes) {
            if (n % static_cast<long long>(p) == 0) {
                coprime = false;
                break;
            }
        }
        if (!coprime) continue;
        unsigned long long idx = Q * static_cast<unsigned long long>(n);
        bool div24 = (idx % 24 == 0);
        ++rep.checked;
        if (div24) ++rep.checked_div24;
        if (F.at(static_cast<std::size_t>(idx)) != 0) {
            ++rep.failures;
            if (div24) ++rep.failures_div24;
            if (rep.failure_witnesses.size() < 10) rep.failure_witnesses.push_back(n);
        }
    }
    return rep;
}

} // namespace qseries
