#pragma once

// Truncated formal power series over two coefficient backends: exact
// arbitrary-precision integers (GMP) and fixed-modulus residues. A series
// stores coefficients through q^{P-1} plus an exponent prefactor e24, so
// the object represents q^{e24/24} * sum_n c[n] q^n. Requesting a
// coefficient at or beyond P is an error, never a silent zero.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qseries/errors.hpp"
#include "qseries/kernels.hpp"
#include "qseries/numbers.hpp"

namespace qseries {

struct ZRing {
    using Coeff = mpz_class;
    static constexpr bool is_modular = false;

    bool compatible(const ZRing&) const { return true; }
    Coeff zero() const { return mpz_class(0); }
    Coeff one() const { return mpz_class(1); }
    Coeff from_int(long long v) const {
        mpz_class x;
        mpz_set_si(x.get_mpz_t(), v);
        return x;
    }
    Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
    Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
    Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
    Coeff neg(const Coeff& a) const { return -a; }
    bool is_zero(const Coeff& a) const { return sgn(a) == 0; }
    bool equal(const Coeff& a, const Coeff& b) const { return a == b; }
    bool is_unit(const Coeff& a) const { return a == 1 || a == -1; }
    Coeff inv_unit(const Coeff& a) const {
        if (!is_unit(a)) throw std::domain_error("non-invertible constant term (exact backend needs +-1)");
        return a;
    }
};

struct ModRing {
    using Coeff = u64;
    static constexpr bool is_modular = true;

    u64 m;

    explicit ModRing(u64 modulus) : m(modulus) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        if (m > 0xFFFFFFFFull) throw std::invalid_argument("modulus must fit in 32 bits");
    }

    bool compatible(const ModRing& o) const { return m == o.m; }
    u64 zero() const { return 0; }
    u64 one() const { return 1 % m; }
    u64 from_int(long long v) const {
        long long r = v % static_cast<long long>(m);
        if (r < 0) r += static_cast<long long>(m);
        return static_cast<u64>(r);
    }
    u64 from_mpz(const mpz_class& v) const { return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)); }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= m ? s - m : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + m - b; }
    u64 mul(u64 a, u64 b) const { return (a * b) % m; }
    u64 neg(u64 a) const { return a == 0 ? 0 : m - a; }
    bool is_zero(u64 a) const { return a == 0; }
    bool equal(u64 a, u64 b) const { return a == b; }
    bool is_unit(u64 a) const { return gcd_ll(static_cast<long long>(a), static_cast<long long>(m)) == 1; }
    u64 inv_unit(u64 a) const;
};

template <class Ring>
class BasicSeries {
public:
    using Coeff = typename Ring::Coeff;

    BasicSeries(Ring ring, std::vector<Coeff> coeffs, long long e24 = 0)
        : ring_(std::move(ring)), c_(std::move(coeffs)), e24_(e24) {
        if (c_.empty()) throw std::invalid_argument("series precision must be >= 1");
    }

    static BasicSeries one(Ring ring, std::size_t precision) {
        if (precision == 0) throw std::invalid_argument("series precision must be >= 1");
        std::vector<Coeff> c(precision, ring.zero());
        c[0] = ring.one();
        return BasicSeries(std::move(ring), std::move(c), 0);
    }

    static BasicSeries zero(Ring ring, std::size_t precision) {
        if (precision == 0) throw std::invalid_argument("series precision must be >= 1");
        std::vector<Coeff> c(precision, ring.zero());
        return BasicSeries(std::move(ring), std::move(c), 0);
    }

    std::size_t precision() const { return c_.size(); }
    long long e24() const { return e24_; }
    const Ring& ring() const { return ring_; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    const Coeff& at(std::size_t n) const {
        if (n >= c_.size()) {
            throw PrecisionError("coefficient index " + std::to_string(n) + " >= precision " +
                                 std::to_string(c_.size()));
        }
        return c_[n];
    }

    BasicSeries truncated(std::size_t precision) const {
        if (precision == 0 || precision > c_.size()) {
            throw PrecisionError("cannot truncate precision " + std::to_string(c_.size()) + " to " +
                                 std::to_string(precision));
        }
        std::vector<Coeff> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(precision));
        return BasicSeries(ring_, std::move(c), e24_);
    }

    // Integer-exponent view: folds q^{e24/24} into the coefficient indices.
    // Requires 24 | e24 and a nonnegative shift.
    BasicSeries folded() const {
        if (e24_ % 24 != 0) throw std::domain_error("folded(): e24 not divisible by 24");
        long long h = e24_ / 24;
        if (h < 0) throw std::domain_error("folded(): negative leading exponent");
        if (h == 0) return *this;
        std::vector<Coeff> c(c_.size() + static_cast<std::size_t>(h), ring_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + static_cast<std::size_t>(h)] = c_[i];
        return BasicSeries(ring_, std::move(c), 0);
    }

    std::vector<Coeff>& coeffs_mut() { return c_; }
    void set_e24(long long e) { e24_ = e; }

private:
    Ring ring_;
    std::vector<Coeff> c_;
    long long e24_;
};

using SeriesZ = BasicSeries<ZRing>;
using SeriesMod = BasicSeries<ModRing>;

namespace detail {

template <class Ring>
void require_compatible(const Ring& a, const Ring& b) {
    if (!a.compatible(b)) throw std::invalid_argument("modulus mismatch between series operands");
}

} // namespace detail

// Coefficient-wise convolution through the smaller precision; e24 adds.
template <class Ring>
BasicSeries<Ring> mul(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b) {
    detail::require_compatible(a.ring(), b.ring());
    std::size_t P = std::min(a.precision(), b.precision());
    std::vector<typename Ring::Coeff> out(P, a.ring().zero());
    if constexpr (Ring::is_modular) {
        kernels::conv(a.coeffs().data(), b.coeffs().data(), out.data(), P, a.ring().m);
    } else {
        kernels::conv(a.coeffs().data(), b.coeffs().data(), out.data(), P);
    }
    return BasicSeries<Ring>(a.ring(), std::move(out), a.e24() + b.e24());
}

template <class Ring>
BasicSeries<Ring> add(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b) {
    detail::require_compatible(a.ring(), b.ring());
    if (a.e24() != b.e24()) throw std::invalid_argument("exponent prefactor mismatch in add/sub");
    std::size_t P = std::min(a.precision(), b.precision());
    std::vector<typename Ring::Coeff> out(P, a.ring().zero());
    for (std::size_t i = 0; i < P; ++i) out[i] = a.ring().add(a.coeffs()[i], b.coeffs()[i]);
    return BasicSeries<Ring>(a.ring(), std::move(out), a.e24());
}

template <class Ring>
BasicSeries<Ring> sub(const BasicSeries<Ring>& a, const BasicSeries<Ring>& b) {
    detail::require_compatible(a.ring(), b.ring());
    if (a.e24() != b.e24()) throw std::invalid_argument("exponent prefactor mismatch in add/sub");
    std::size_t P = std::min(a.precision(), b.precision());
    std::vector<typename Ring::Coeff> out(P, a.ring().zero());
    for (std::size_t i = 0; i < P; ++i) out[i] = a.ring().sub(a.coeffs()[i], b.coeffs()[i]);
    return BasicSeries<Ring>(a.ring(), std::move(out), a.e24());
}

template <class Ring>
BasicSeries<Ring> scale(const BasicSeries<Ring>& a, const typename Ring::Coeff& c) {
    std::vector<typename Ring::Coeff> out(a.precision(), a.ring().zero());
    for (std::size_t i = 0; i < a.precision(); ++i) out[i] = a.ring().mul(a.coeffs()[i], c);
    return BasicSeries<Ring>(a.ring(), std::move(out), a.e24());
}

// Linear recurrence b_n = -(1/a_0) * sum_{j>=1} a_j b_{n-j}; exactness
// preserving, no Newton iteration. e24 negates.
template <class Ring>
BasicSeries<Ring> inverse(const BasicSeries<Ring>& a) {
    const auto& ring = a.ring();
    std::size_t P = a.precision();
    auto inv0 = ring.inv_unit(a.coeffs()[0]);
    std::vector<typename Ring::Coeff> b(P, ring.zero());
    b[0] = inv0;
    for (std::size_t n = 1; n < P; ++n) {
        auto acc = ring.zero();
        for (std::size_t j = 1; j <= n; ++j) {
            acc = ring.add(acc, ring.mul(a.coeffs()[j], b[n - j]));
        }
        b[n] = ring.neg(ring.mul(inv0, acc));
    }
    return BasicSeries<Ring>(ring, std::move(b), -a.e24());
}

// Repeated-squaring power; e24 scales by e. Negative e inverts first.
template <class Ring>
BasicSeries<Ring> power(const BasicSeries<Ring>& a, long long e) {
    if (e == 0) return BasicSeries<Ring>::one(a.ring(), a.precision());
    if (e < 0) return power(inverse(a), -e);
    // highest bit first
    int top = 63;
    while (((e >> top) & 1) == 0) --top;
    BasicSeries<Ring> result = a;
    for (int bit = top - 1; bit >= 0; --bit) {
        result = mul(result, result);
        if ((e >> bit) & 1) result = mul(result, a);
    }
    return result;
}

// Substitution q -> q^k. Output known through q^{kP-1}; e24 scales by k.
template <class Ring>
BasicSeries<Ring> dilate(const BasicSeries<Ring>& a, long long k,
                         std::size_t cap = std::numeric_limits<std::size_t>::max()) {
    if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
    std::size_t P = std::min(cap, a.precision() * static_cast<std::size_t>(k));
    std::vector<typename Ring::Coeff> out(P, a.ring().zero());
    for (std::size_t n = 0; static_cast<std::size_t>(k) * n < P; ++n) {
        out[static_cast<std::size_t>(k) * n] = a.coeffs()[n];
    }
    return BasicSeries<Ring>(a.ring(), std::move(out), a.e24() * k);
}

// Multiply by a sparse polynomial (terms ascending in exponent).
template <class Ring>
BasicSeries<Ring> mul_sparse(const BasicSeries<Ring>& a, const std::vector<kernels::Term>& terms) {
    std::size_t P = a.precision();
    std::vector<typename Ring::Coeff> out(P, a.ring().zero());
    if constexpr (Ring::is_modular) {
        kernels::sparse_mul(a.coeffs().data(), P, terms.data(), terms.size(), out.data(), a.ring().m);
    } else {
        kernels::sparse_mul(a.coeffs().data(), P, terms.data(), terms.size(), out.data());
    }
    return BasicSeries<Ring>(a.ring(), std::move(out), a.e24());
}

// Divide by a sparse series whose constant term is 1.
template <class Ring>
BasicSeries<Ring> div_sparse(const BasicSeries<Ring>& a, const std::vector<kernels::Term>& terms) {
    if (terms.empty() || terms[0].exp != 0 || terms[0].coeff != 1) {
        throw std::invalid_argument("div_sparse: divisor must have constant term 1");
    }
    std::vector<typename Ring::Coeff> b(a.coeffs());
    if constexpr (Ring::is_modular) {
        kernels::sparse_div(b.data(), b.size(), terms.data(), terms.size(), a.ring().m);
    } else {
        kernels::sparse_div(b.data(), b.size(), terms.data(), terms.size());
    }
    return BasicSeries<Ring>(a.ring(), std::move(b), a.e24());
}

// Sparse generator term lists (exponents < P, ascending; e24 = 0).

// (q^k;q^k)_inf = 1 + sum_{j>=1} (-1)^j (q^{k j(3j-1)/2} + q^{k j(3j+1)/2})
std::vector<kernels::Term> pentagonal_terms(long long k, std::size_t P);

// phi(-q^k) = 1 + 2 sum_{j>=1} (-1)^j q^{k j^2}
std::vector<kernels::Term> theta_phi_terms(long long k, std::size_t P);

SeriesZ euler_product(long long k, std::size_t P);
SeriesMod euler_product(const ModRing& ring, long long k, std::size_t P);
SeriesZ phi_neg(long long k, std::size_t P);
SeriesMod phi_neg(const ModRing& ring, long long k, std::size_t P);

// Reduction into [0, M).
SeriesMod reduce_mod(const SeriesZ& a, u64 M);
SeriesMod reduce_mod(const SeriesMod& a, u64 M);

// Coefficient agreement through index `through`, mod M, after aligning the
// exponent prefactors. Throws PrecisionError if either side is not known
// that far, std::invalid_argument if the prefactors differ by a
// non-multiple of 24 (different fractional lattices).
bool series_equal_mod(const SeriesZ& a, const SeriesZ& b, u64 M, std::size_t through);
bool series_equal_mod(const SeriesMod& a, const SeriesMod& b, u64 M, std::size_t through);
bool series_equal_mod(const SeriesZ& a, const SeriesMod& b, u64 M, std::size_t through);

// Exact coefficient agreement through `through` (same alignment rules).
bool series_equal(const SeriesZ& a, const SeriesZ& b, std::size_t through);

} // namespace qseries
