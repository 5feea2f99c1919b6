#pragma once

// Hecke operators T_p on q-expansions modulo a fixed modulus:
//   (f|T_p)(n) = a(pn) + chi(p) p^{ell-1} a(n/p),  a(n/p) = 0 unless p | n.
// Validity bookkeeping: input known through q^{P-1} yields output known
// through q^{floor((P-1)/p)}.

#include "qseries/modform.hpp"
#include "qseries/series.hpp"

namespace qseries {

struct HeckeContext {
    long long ell = 1;          // weight, >= 1
    CharacterDescriptor chi;
    u64 modulus = 2;
};

// Context for B_{1,1,k}: weight 2^{k-1}+1, character from the certificate.
HeckeContext hecke_context_B11k(int k, u64 modulus);

SeriesMod hecke_Tp(const SeriesMod& f, u64 p, const HeckeContext& ctx);

struct ProbeStep {
    u64 prime = 0;                 // 0 marks the initial state
    std::size_t nonzero_count = 0;
    std::size_t valid_through = 0; // last trustworthy index
};

struct NilpotencyReport {
    int family_k = 1;
    int t_exp = 1; // probes annihilation mod 2^t_exp
    std::vector<u64> primes;
    std::size_t precision = 0;
    std::vector<ProbeStep> steps;
    int reached_zero_at = -1; // step count, 0 = already zero; -1 = not reached
    bool window_exhausted = false;
    std::string verdict;
};

// Applies T_{p_1}, T_{p_2}, ... to B_{1,1,family_k} mod 2^{t_exp} and
// reports the first step after which the truncation is identically zero.
NilpotencyReport nilpotency_probe(int family_k, const std::vector<u64>& primes, int t_exp, std::size_t P);

// Same walk on a caller-supplied starting series.
NilpotencyReport nilpotency_probe_series(SeriesMod f, const HeckeContext& ctx,
                                         const std::vector<u64>& primes);

struct Cong1Report {
    std::vector<u64> primes;
    int d = 1;
    int k = 1;
    long long n_range = 0;
    std::size_t precision = 0;
    unsigned long long prime_product = 1;
    long long n_max_checked = 0;     // largest n the window allowed
    bool window_exhausted = false;   // n_max_checked < n_range
    long long checked = 0;           // coprime n actually tested
    long long failures = 0;
    std::vector<long long> failure_witnesses; // first few failing n
    long long checked_div24 = 0;     // subset with 24 | product*n
    long long failures_div24 = 0;
};

// Falsifiable instance check of F_k(p_1...p_r * n) == 0 (mod 2^d) for
// n <= n_range coprime to every listed prime, where F_k is the expansion
// of B_{1,1,k}. The constant c of the underlying theorem is unknown, so
// the report is parameterized by the attempted list length.
Cong1Report verify_cong1_instance(const std::vector<u64>& primes, int d, long long n_range, int k,
                                  std::size_t P);

} // namespace qseries
