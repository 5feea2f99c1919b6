#include "qseries/modform.hpp"

#include <algorithm>

#include "qseries/partitions.hpp"

namespace qseries {

namespace {

// gmpxx has no long long overloads; route through explicit conversions
mpz_class zz(long long v) {
    mpz_class x;
    mpz_set_si(x.get_mpz_t(), v);
    return x;
}

mpq_class qq(long long v) { return mpq_class(zz(v)); }

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

void require_family_params(int alpha, long long m, int k) {
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    if (m < 1 || gcd_ll(m, 6) != 1) throw std::invalid_argument("m must be positive with gcd(m,6)=1");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
}

} // namespace

int CharacterDescriptor::eval(long long d) const {
    long long ad = d < 0 ? -d : d;
    if (gcd_ll(ad, zero_radical) != 1) return 0;
    return kronecker(sign * squarefree_kernel, d);
}

long long weight_times_2(const EtaQuotient& E) { return E.weight_sum(); }

bool level_admissible(const EtaQuotient& E, long long N) {
    if (N < 1) return false;
    long long s2 = 0;
    for (const auto& [delta, r] : E.terms()) {
        if (N % delta != 0) return false;
        s2 += (N / delta) * r;
    }
    return E.e24() % 24 == 0 && s2 % 24 == 0;
}

long long minimal_level(const EtaQuotient& E) {
    if (E.e24() % 24 != 0) {
        throw std::domain_error("no admissible level: sum delta*r_delta = " + std::to_string(E.e24()) +
                                " is not divisible by 24");
    }
    long long L = E.lcm_delta();
    for (long long M = 1; M <= 24; ++M) {
        if (level_admissible(E, M * L)) return M * L;
    }
    // unreachable: M = 24 makes the second sum a multiple of 24
    throw std::logic_error("minimal_level: scan failed");
}

CharacterDescriptor character_of(const EtaQuotient& E) {
    long long ws = E.weight_sum();
    if (ws % 2 != 0) throw std::domain_error("character undefined for odd exponent sum");
    long long ell = ws / 2;

    CharacterDescriptor chi;
    chi.sign = (((ell % 2) + 2) % 2 == 0) ? 1 : -1;

    mpz_class num = 1, den = 1;
    std::map<long long, long long> parity; // prime -> exponent parity over odd-r deltas
    long long zero_rad = 1;
    for (const auto& [delta, r] : E.terms()) {
        mpz_class dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(delta),
                      static_cast<unsigned long>(r > 0 ? r : -r));
        if (r > 0) {
            num *= dp;
        } else {
            den *= dp;
        }
        for (long long p : prime_factors(delta)) {
            if (zero_rad % p != 0) zero_rad *= p;
        }
        if (r % 2 != 0) {
            long long rest = delta;
            for (long long p = 2; p * p <= rest; ++p) {
                while (rest % p == 0) {
                    parity[p] ^= 1;
                    rest /= p;
                }
            }
            if (rest > 1) parity[rest] ^= 1;
        }
    }
    chi.s = mpq_class(num, den);
    chi.s.canonicalize();
    long long kernel = 1;
    for (const auto& [p, e] : parity) {
        if (e != 0) kernel *= p;
    }
    chi.squarefree_kernel = kernel;
    chi.zero_radical = zero_rad;
    return chi;
}

int character_eval(const EtaQuotient& E, long long d) { return character_of(E).eval(d); }

mpq_class cusp_order(const EtaQuotient& E, long long N, long long d) {
    if (d < 1 || N < 1 || N % d != 0) throw std::invalid_argument("cusp_order: d must divide N");
    for (const auto& [delta, r] : E.terms()) {
        (void)r;
        if (N % delta != 0) throw std::invalid_argument("cusp_order: delta does not divide N");
    }
    long long g = gcd_ll(d, N / d);
    mpq_class acc(0);
    for (const auto& [delta, r] : E.terms()) {
        long long gd = gcd_ll(d, delta);
        mpq_class term(zz(gd) * zz(gd) * zz(r), zz(g) * zz(d) * zz(delta));
        term.canonicalize();
        acc += term;
    }
    mpq_class scale(zz(N), zz(24));
    scale.canonicalize();
    acc *= scale;
    return acc;
}

Certificate certify(const EtaQuotient& E, std::optional<long long> level) {
    long long ws = E.weight_sum();
    if (ws % 2 != 0) {
        throw std::domain_error("certify: odd exponent sum gives half-integral weight (out of scope)");
    }
    long long N;
    if (level) {
        N = *level;
    } else if (E.level_candidate()) {
        N = *E.level_candidate();
    } else {
        N = minimal_level(E);
    }
    if (!level_admissible(E, N)) {
        throw std::invalid_argument("certify: level " + std::to_string(N) +
                                    " does not satisfy the 24-divisibility conditions");
    }

    Certificate cert{E, ws, N, character_of(E), {}, true};
    auto divs = divisors(N);
    cert.cusps.resize(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) {
        CuspReport rep;
        rep.d = divs[i];
        rep.order = cusp_order(E, N, divs[i]);
        mpq_class scaled = rep.order * 24 * zz(N);
        scaled.canonicalize();
        if (scaled.get_den() != 1) throw std::logic_error("cusp order not integral after 24N scaling");
        rep.order24N = scaled.get_num();
        rep.nonnegative = sgn(rep.order) >= 0;
        cert.cusps[i] = rep;
    }
    for (const auto& c : cert.cusps) {
        if (!c.nonnegative) cert.holomorphic = false;
    }
    return cert;
}

EtaQuotient build_A(int alpha, long long m) {
    require_family_params(alpha, m, 1);
    long long d8 = 8 * ipow(3, alpha + 1) * m;
    return EtaQuotient({{d8, 2}, {2 * d8, -1}});
}

EtaQuotient build_B(int alpha, long long m, int k) {
    require_family_params(alpha, m, k);
    long long pow3m = ipow(3, alpha) * m;
    long long d8 = 8 * 3 * pow3m;  // 2^3 3^{alpha+1} m
    long long d16 = 2 * d8;        // 2^4 3^{alpha+1} m
    long long two_k = ipow(2, k);
    return EtaQuotient({{24, -2}, {48, 1}, {d8, 2 * pow3m + 2 * two_k}, {d16, -(pow3m + two_k)}});
}

EtaQuotient build_C(int alpha, long long m) {
    require_family_params(alpha, m, 1);
    long long d16 = 16 * ipow(3, alpha + 1) * m;
    return EtaQuotient({{d16, 3}, {3 * d16, -1}});
}

EtaQuotient build_D(int alpha, long long m, int k) {
    require_family_params(alpha, m, k);
    long long pow3m = ipow(3, alpha) * m;
    long long d8 = 8 * 3 * pow3m;   // 2^3 3^{alpha+1} m
    long long d16 = 2 * d8;         // 2^4 3^{alpha+1} m
    long long d48 = 3 * d16;        // 2^4 3^{alpha+2} m
    long long three_k = ipow(3, k);
    return EtaQuotient({{24, -2}, {48, 1}, {d8, 2 * pow3m}, {d16, 3 * three_k - pow3m}, {d48, -three_k}});
}

long long family_level(Family f, int alpha, long long m) {
    require_family_params(alpha, m, 1);
    if (f == Family::B) return 64 * ipow(3, alpha + 1) * m;
    return 16 * ipow(3, alpha + 2) * m;
}

long long family_weight(Family f, int alpha, long long m, int k) {
    require_family_params(alpha, m, k);
    long long pow3m = ipow(3, alpha) * m;
    if (f == Family::B) return (pow3m + ipow(2, k) - 1) / 2;
    return (pow3m - 1) / 2 + ipow(3, k);
}

CongruenceCheck verify_congruence_reduction(Family f, int alpha, long long m, int k, std::size_t P,
                                            std::optional<u64> modulus_override) {
    require_family_params(alpha, m, k);
    u64 M = modulus_override.value_or(
        static_cast<u64>(f == Family::B ? ipow(2, k + 1) : ipow(3, k + 1)));
    EtaQuotient E = (f == Family::B) ? build_B(alpha, m, k) : build_D(alpha, m, k);
    if (E.e24() != 0) throw std::logic_error("family quotient should have vanishing exponent prefactor");

    ModRing ring(M);
    SeriesMod expanded = eta_expand(E, ring, P);
    long long t = ipow(3, alpha) * m;
    std::size_t Pa = (P - 1) / 24 + 1;
    // t = 1 degenerates to abar_1 = phi(-q)/phi(-q) = 1
    SeriesMod ab = (t == 1) ? SeriesMod::one(ring, Pa) : coeffs_abar_mod(t, M, Pa);

    CongruenceCheck out;
    out.modulus = M;
    out.through = P - 1;
    out.holds = true;
    for (std::size_t n = 0; n < P; ++n) {
        u64 expected = (n % 24 == 0) ? ab.at(n / 24) : 0;
        if (expanded.at(n) != expected) {
            out.holds = false;
            out.first_mismatch = static_cast<long long>(n);
            break;
        }
    }
    return out;
}

namespace {

int valuation(long long& n, long long p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

mpq_class gcd_sq_ratio(long long d, long long a, long long b) {
    long long ga = gcd_ll(d, a);
    long long gb = gcd_ll(d, b);
    mpq_class r(zz(ga) * zz(ga), zz(gb) * zz(gb));
    r.canonicalize();
    return r;
}

} // namespace

LCaseReport verify_L_cases(Family f, int alpha, long long m, int k) {
    require_family_params(alpha, m, k);
    LCaseReport rep;
    rep.family = f;
    rep.alpha = alpha;
    rep.m = m;
    rep.k = k;
    rep.level = family_level(f, alpha, m);

    EtaQuotient E = (f == Family::B) ? build_B(alpha, m, k) : build_D(alpha, m, k);
    long long N = rep.level;
    long long pow3m = ipow(3, alpha) * m;
    long long d8 = 24 * pow3m;  // 2^3 3^{alpha+1} m
    long long d16 = 2 * d8;
    long long d48 = 3 * d16;

    rep.all_nonnegative = true;
    rep.all_sign_agree = true;
    rep.all_proportional = true;
    rep.all_case_bounds_ok = true;
    rep.zero_set_matches = true;

    for (long long d : divisors(N)) {
        LCaseRow row;
        row.d = d;
        long long rest = d;
        row.r1 = valuation(rest, 2);
        row.r2 = valuation(rest, 3);
        row.tpart = rest;

        long long normalizer_den; // gcd(d, reference delta)^2
        if (f == Family::B) {
            mpq_class G1 = gcd_sq_ratio(d, 24, d16);
            mpq_class G2 = gcd_sq_ratio(d, 48, d16);
            mpq_class G3 = gcd_sq_ratio(d, d8, d16);
            row.L = qq(pow3m) * (-4 * G1 + G2 + 4 * G3 - 1) + qq(ipow(2, k)) * (4 * G3 - 1);
            normalizer_den = gcd_ll(d, d16);
            row.case_id = (row.r1 <= 3) ? 1 : 2;
            if (row.case_id == 1) {
                row.case_bound_ok = (G3 == 1) && (G1 == G2) && (row.L >= qq(3 * ipow(2, k)));
                row.predicted_zero = false;
            } else {
                row.case_bound_ok = (G3 == mpq_class(1, 4)) && (G2 == 4 * G1) && (row.L == 0);
                row.predicted_zero = true;
            }
            // the positive factor relating the order sum to L
            mpq_class factor(zz(d16), zz(normalizer_den) * zz(normalizer_den));
            factor.canonicalize();
            long long g = gcd_ll(d, N / d);
            mpq_class order = cusp_order(E, N, d);
            row.order = order;
            mpq_class rhs = order * 24 * zz(g) * zz(d) * factor / zz(N);
            row.proportional = (row.L == rhs);
        } else {
            mpq_class G1 = gcd_sq_ratio(d, 24, d48);
            mpq_class G2 = gcd_sq_ratio(d, 48, d48);
            mpq_class G3 = gcd_sq_ratio(d, d8, d48);
            mpq_class G4 = gcd_sq_ratio(d, d16, d48);
            long long three_k = ipow(3, k);
            row.L = qq(3 * pow3m) * (-4 * G1 + G2 + 4 * G3 - G4) + qq(three_k) * (9 * G4 - 1);
            normalizer_den = gcd_ll(d, d48);
            if (row.r1 <= 3 && row.r2 <= alpha + 1) {
                row.case_id = 1;
                row.case_bound_ok = (G3 == 1) && (G4 == 1) && (G1 == G2) &&
                                    (row.L >= qq(8 * three_k));
                row.predicted_zero = false;
            } else if (row.r1 <= 3) {
                row.case_id = 2;
                mpq_class expect = qq(9 * pow3m) * (mpq_class(1, 9) - G1);
                row.case_bound_ok = (G3 == mpq_class(1, 9)) && (G4 == mpq_class(1, 9)) && (row.L == expect) &&
                                    (row.L >= 0);
                row.predicted_zero = (alpha == 0 && row.tpart == 1);
            } else if (row.r2 <= alpha + 1) {
                row.case_id = 3;
                row.case_bound_ok = (G3 == mpq_class(1, 4)) && (G4 == 4 * G3) && (G2 == 4 * G1) &&
                                    (row.L == qq(8 * three_k));
                row.predicted_zero = false;
            } else {
                row.case_id = 4;
                row.case_bound_ok = (G3 == mpq_class(1, 36)) && (G4 == 4 * G3) && (row.L == 0);
                row.predicted_zero = true;
            }
            mpq_class factor(zz(d48), zz(normalizer_den) * zz(normalizer_den));
            factor.canonicalize();
            long long g = gcd_ll(d, N / d);
            mpq_class order = cusp_order(E, N, d);
            row.order = order;
            mpq_class rhs = order * 24 * zz(g) * zz(d) * factor / zz(N);
            row.proportional = (row.L == rhs);
        }

        bool actual_zero = (sgn(row.order) == 0);
        row.sign_agrees = (sgn(row.L) == sgn(row.order));
        if (sgn(row.order) < 0) rep.all_nonnegative = false;
        if (!row.sign_agrees) rep.all_sign_agree = false;
        if (!row.proportional) rep.all_proportional = false;
        if (!row.case_bound_ok) rep.all_case_bounds_ok = false;
        if (actual_zero != row.predicted_zero) rep.zero_set_matches = false;

        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace qseries
