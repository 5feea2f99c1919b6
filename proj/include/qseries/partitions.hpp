#pragma once

// Partitions, Ferrers-Young hook numbers, the brute-force t-core counting
// oracle, and coefficient streams for c_t(n) and abar_t(n).
//
//   sum c_t(n) q^n    = f_t^t / f_1
//   sum abar_t(n) q^n = phi^t(-q^t)/phi(-q) = f_2 f_t^{2t} / (f_1^2 f_{2t}^t)

#include <functional>

#include "qseries/series.hpp"

namespace qseries {

struct Partition {
    std::vector<int> parts; // non-increasing, positive
    int n = 0;              // sum of parts

    static Partition of(std::vector<int> parts);
};

Partition conjugate(const Partition& p);

struct HookDiagram {
    Partition partition;
    std::vector<std::vector<int>> hooks; // hooks[i][j] for node (i+1, j+1)
};

// H(i,j) = (parts[i] - j) + (conj[j] - i) + 1 with 1-based i, j.
HookDiagram hook_numbers(const Partition& p);

// No hook number divisible by t. The empty partition is vacuously t-core.
bool is_t_core(const Partition& p, long long t);

// Visit every partition of n (largest-part-first descent). n <= 60.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

// Exact c_t(n) by enumerating all partitions of n and checking hooks.
long long brute_tcore_count(int n, long long t);

SeriesZ coeffs_ct(long long t, std::size_t P);
SeriesMod coeffs_ct(const ModRing& ring, long long t, std::size_t P);

// f-form of abar_t (production path, sparse passes).
SeriesZ coeffs_abar(long long t, std::size_t P);

// phi-form of abar_t: phi(-q^t)^t * inverse(phi(-q)) via dense pow/inv.
// Independent route used to cross-check the f-form.
SeriesZ coeffs_abar_phi_form(long long t, std::size_t P);

// Residue backend, computed entirely in modular arithmetic.
SeriesMod coeffs_abar_mod(long long t, u64 M, std::size_t P);

} // namespace qseries
