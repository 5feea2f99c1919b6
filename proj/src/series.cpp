#include "qseries/series.hpp"

#include <algorithm>

namespace qseries {

u64 ModRing::inv_unit(u64 a) const {
    // extended Euclid on (a, m)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("non-invertible constant term modulo " + std::to_string(m));
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<u64>(t);
}

std::vector<kernels::Term> pentagonal_terms(long long k, std::size_t P) {
    if (k < 1) throw std::invalid_argument("pentagonal_terms: k must be >= 1");
    std::vector<kernels::Term> t;
    t.push_back({0, 1});
    for (long long j = 1;; ++j) {
        long long g1 = k * (j * (3 * j - 1) / 2);
        long long g2 = k * (j * (3 * j + 1) / 2);
        long long s = (j % 2 == 0) ? 1 : -1;
        if (g1 >= static_cast<long long>(P)) break;
        t.push_back({g1, s});
        if (g2 < static_cast<long long>(P)) t.push_back({g2, s});
    }
    return t;
}

std::vector<kernels::Term> theta_phi_terms(long long k, std::size_t P) {
    if (k < 1) throw std::invalid_argument("theta_phi_terms: k must be >= 1");
    std::vector<kernels::Term> t;
    t.push_back({0, 1});
    for (long long j = 1;; ++j) {
        long long e = k * j * j;
        if (e >= static_cast<long long>(P)) break;
        t.push_back({e, (j % 2 == 0) ? 2 : -2});
    }
    return t;
}

namespace {

template <class Ring>
BasicSeries<Ring> materialize(const Ring& ring, const std::vector<kernels::Term>& terms, std::size_t P) {
    std::vector<typename Ring::Coeff> c(P, ring.zero());
    for (const auto& t : terms) c[static_cast<std::size_t>(t.exp)] = ring.from_int(t.coeff);
    return BasicSeries<Ring>(ring, std::move(c), 0);
}

} // namespace

SeriesZ euler_product(long long k, std::size_t P) { return materialize(ZRing{}, pentagonal_terms(k, P), P); }

SeriesMod euler_product(const ModRing& ring, long long k, std::size_t P) {
    return materialize(ring, pentagonal_terms(k, P), P);
}

SeriesZ phi_neg(long long k, std::size_t P) { return materialize(ZRing{}, theta_phi_terms(k, P), P); }

SeriesMod phi_neg(const ModRing& ring, long long k, std::size_t P) {
    return materialize(ring, theta_phi_terms(k, P), P);
}

SeriesMod reduce_mod(const SeriesZ& a, u64 M) {
    ModRing ring(M);
    std::vector<u64> c(a.precision());
    for (std::size_t i = 0; i < a.precision(); ++i) c[i] = ring.from_mpz(a.coeffs()[i]);
    return SeriesMod(ring, std::move(c), a.e24());
}

SeriesMod reduce_mod(const SeriesMod& a, u64 M) {
    if (a.ring().m % M != 0) {
        throw std::invalid_argument("reduce_mod: modulus " + std::to_string(M) + " does not divide " +
                                    std::to_string(a.ring().m));
    }
    ModRing ring(M);
    std::vector<u64> c(a.precision());
    for (std::size_t i = 0; i < a.precision(); ++i) c[i] = a.coeffs()[i] % M;
    return SeriesMod(ring, std::move(c), a.e24());
}

namespace {

// Generic aligned comparison. fetch(series, i) must return the residue of
// the coefficient at index i (mod M), or throw PrecisionError.
template <class FetchA, class FetchB>
bool aligned_equal(long long e24a, std::size_t Pa, FetchA fa, long long e24b, std::size_t Pb, FetchB fb,
                   std::size_t through) {
    long long d = e24a - e24b;
    if (d % 24 != 0) {
        throw std::invalid_argument("series_equal: exponent prefactors differ by a non-multiple of 24");
    }
    long long h = d / 24; // a = q^h * a' in b's frame
    if (static_cast<long long>(through) >= static_cast<long long>(Pb)) {
        throw PrecisionError("series_equal: rhs known only through " + std::to_string(Pb - 1));
    }
    if (static_cast<long long>(through) - h >= static_cast<long long>(Pa)) {
        throw PrecisionError("series_equal: lhs known only through " +
                             std::to_string(static_cast<long long>(Pa - 1) + h) + " after alignment");
    }
    // If a sits lower than b (h < 0), its coefficients below b's base must vanish.
    for (long long i = h; i < 0; ++i) {
        if (fa(i - h) != 0) return false;
    }
    for (long long i = 0; i <= static_cast<long long>(through); ++i) {
        u64 va = (i - h < 0) ? 0 : fa(i - h);
        if (va != fb(i)) return false;
    }
    return true;
}

u64 mpz_mod_u(const mpz_class& v, u64 M) { return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(M)); }

} // namespace

bool series_equal_mod(const SeriesZ& a, const SeriesZ& b, u64 M, std::size_t through) {
    if (M < 2) throw std::invalid_argument("series_equal_mod: modulus must be >= 2");
    return aligned_equal(
        a.e24(), a.precision(), [&](long long i) { return mpz_mod_u(a.coeffs()[static_cast<std::size_t>(i)], M); },
        b.e24(), b.precision(), [&](long long i) { return mpz_mod_u(b.coeffs()[static_cast<std::size_t>(i)], M); },
        through);
}

bool series_equal_mod(const SeriesMod& a, const SeriesMod& b, u64 M, std::size_t through) {
    if (a.ring().m % M != 0 || b.ring().m % M != 0) {
        throw std::invalid_argument("series_equal_mod: M must divide both series moduli");
    }
    return aligned_equal(
        a.e24(), a.precision(), [&](long long i) { return a.coeffs()[static_cast<std::size_t>(i)] % M; },
        b.e24(), b.precision(), [&](long long i) { return b.coeffs()[static_cast<std::size_t>(i)] % M; }, through);
}

bool series_equal_mod(const SeriesZ& a, const SeriesMod& b, u64 M, std::size_t through) {
    if (b.ring().m % M != 0) {
        throw std::invalid_argument("series_equal_mod: M must divide the residue series modulus");
    }
    return aligned_equal(
        a.e24(), a.precision(), [&](long long i) { return mpz_mod_u(a.coeffs()[static_cast<std::size_t>(i)], M); },
        b.e24(), b.precision(), [&](long long i) { return b.coeffs()[static_cast<std::size_t>(i)] % M; }, through);
}

bool series_equal(const SeriesZ& a, const SeriesZ& b, std::size_t through) {
    long long d = a.e24() - b.e24();
    if (d % 24 != 0) {
        throw std::invalid_argument("series_equal: exponent prefactors differ by a non-multiple of 24");
    }
    long long h = d / 24;
    if (through >= b.precision()) throw PrecisionError("series_equal: rhs precision too small");
    if (static_cast<long long>(through) - h >= static_cast<long long>(a.precision())) {
        throw PrecisionError("series_equal: lhs precision too small after alignment");
    }
    for (long long i = h; i < 0; ++i) {
        if (a.coeffs()[static_cast<std::size_t>(i - h)] != 0) return false;
    }
    for (long long i = 0; i <= static_cast<long long>(through); ++i) {
        const mpz_class& va = (i - h < 0) ? mpz_class(0) : a.coeffs()[static_cast<std::size_t>(i - h)];
        if (va != b.coeffs()[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

} // namespace qseries
