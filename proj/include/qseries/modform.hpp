#pragma once

// Certification of eta-quotients as holomorphic modular forms on
// Gamma_0(N): weight from the exponent sum, admissible levels from the two
// 24-divisibility conditions, nebentypus character as a Kronecker symbol,
// and exact rational cusp orders
//
//   (N/24) * sum_{delta|N} gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta)
//
// plus the B/D family constructions with their per-divisor case analyses.

#include <optional>
#include <string>

#include "qseries/eta.hpp"

namespace qseries {

// chi(d) = ((-1)^ell * s / d) with s = prod delta^{r_delta}. For negative
// exponents s is rational; the evaluation uses the product-of-symbols
// convention: chi(d) = 0 when d shares a prime with any delta carrying a
// nonzero exponent, otherwise the Kronecker symbol of the squarefree
// kernel times ((-1)^ell / d).
struct CharacterDescriptor {
    int sign = 1;                      // (-1)^ell
    mpq_class s;                       // prod delta^{r_delta}, exact
    long long squarefree_kernel = 1;   // squarefree part of prod_{r odd} delta
    long long zero_radical = 1;        // rad of prod_{r != 0} delta

    int eval(long long d) const;
};

struct CuspReport {
    long long d = 1;           // divisor of N; cusps c/d share this order
    mpq_class order;           // exact order of vanishing
    mpz_class order24N;        // 24 * N * order, always integral
    bool nonnegative = true;
};

struct Certificate {
    EtaQuotient quotient;
    long long weight_times_2 = 0;
    long long level = 1;
    CharacterDescriptor character;
    std::vector<CuspReport> cusps;
    bool holomorphic = false;
};

long long weight_times_2(const EtaQuotient& E);

// Both Theorem-style sums sum delta*r and sum (N/delta)*r vanish mod 24
// and every delta divides N.
bool level_admissible(const EtaQuotient& E, long long N);

// Smallest admissible N (a multiple of lcm(delta); scan stops at 24*lcm).
// Throws std::domain_error when sum delta*r_delta is not divisible by 24,
// in which case no N works.
long long minimal_level(const EtaQuotient& E);

CharacterDescriptor character_of(const EtaQuotient& E);
int character_eval(const EtaQuotient& E, long long d);

// Exact order of vanishing at cusps c/d (independent of c). Requires d|N.
mpq_class cusp_order(const EtaQuotient& E, long long N, long long d);

// Full certificate. Refuses odd exponent sums (half-integral weight).
// Level resolution: explicit argument, else the quotient's candidate,
// else the minimal admissible level.
Certificate certify(const EtaQuotient& E, std::optional<long long> level = std::nullopt);

enum class Family { B, D };

EtaQuotient build_A(int alpha, long long m);
EtaQuotient build_B(int alpha, long long m, int k);
EtaQuotient build_C(int alpha, long long m);
EtaQuotient build_D(int alpha, long long m, int k);

// The paper-facing closed forms for the two families.
long long family_level(Family f, int alpha, long long m);            // B: 2^6 3^{a+1} m, D: 2^4 3^{a+2} m
long long family_weight(Family f, int alpha, long long m, int k);    // B: (3^a m + 2^k - 1)/2, D: (3^a m - 1)/2 + 3^k

struct CongruenceCheck {
    bool holds = false;
    std::optional<long long> first_mismatch; // coefficient index of first disagreement
    std::size_t through = 0;                 // last index compared
    u64 modulus = 0;
};

// Expands the family quotient mod 2^{k+1} (B) or 3^{k+1} (D) and compares
// against abar_{3^alpha m}(n) placed at q^{24n}, through q^{P-1}.
CongruenceCheck verify_congruence_reduction(Family f, int alpha, long long m, int k, std::size_t P,
                                            std::optional<u64> modulus_override = std::nullopt);

struct LCaseRow {
    long long d = 1;
    int r1 = 0;             // 2-adic valuation of d
    int r2 = 0;             // 3-adic valuation of d
    long long tpart = 1;    // remaining factor, divides m
    int case_id = 0;
    mpq_class L;
    mpq_class order;
    bool sign_agrees = false;
    bool proportional = false; // L equals order times the positive normalizer
    bool case_bound_ok = false;
    bool predicted_zero = false;
};

struct LCaseReport {
    Family family = Family::B;
    int alpha = 0;
    long long m = 1;
    int k = 1;
    long long level = 1;
    std::vector<LCaseRow> rows;
    bool all_nonnegative = false;
    bool all_sign_agree = false;
    bool all_proportional = false;
    bool all_case_bounds_ok = false;
    bool zero_set_matches = false;

    bool ok() const {
        return all_nonnegative && all_sign_agree && all_proportional && all_case_bounds_ok && zero_set_matches;
    }
};

// Evaluates the gcd-ratio quantities G_i and the paper's L for every
// divisor of the family level, checks L >= 0, sign and proportionality
// against cusp_order, the per-case lower bounds, and that the zero set is
// exactly the predicted divisor classes.
LCaseReport verify_L_cases(Family f, int alpha, long long m, int k);

} // namespace qseries
