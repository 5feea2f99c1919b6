#pragma once

// Empirical arithmetic-density measurements of abar_t(n) modulo prime
// powers, Ramanujan-type congruence scanning over arithmetic progressions,
// and a binary stream cache keyed by (t, M, P).

#include <optional>
#include <string>

#include "qseries/partitions.hpp"

namespace qseries {

struct DensityReport {
    long long t = 2;
    u64 M = 2;
    u64 r = 0;
    std::vector<u64> checkpoints;   // X values, ascending
    std::vector<u64> counts;        // #{0 <= n <= X : a(n) == r (mod M)}
    std::vector<mpq_class> ratios;  // counts / X, following the delta_r definition
    bool theorem_covered = false;
    std::string theorem_tag;
};

// Non-empty tag when (t, M) falls under a proved density-1 statement:
// t = 3^a m with gcd(m,6)=1 and M a power of 2 or 3, or t with all prime
// factors >= 5 and M a power of one of them.
std::string density_theorem_tag(long long t, u64 M);

// Counts come from the residue-backend stream (computed at max(X)+1 when
// no stream is supplied; a supplied stream must match modulus and reach).
DensityReport density_report(long long t, u64 M, u64 r, std::vector<u64> checkpoints,
                             const SeriesMod* stream = nullptr);

struct CongruenceCandidate {
    u64 A = 1;
    u64 B = 0;
    u64 M = 2;
    u64 tested_through = 0;   // X
    bool refuted = false;
    long long witness_n = -1; // step index n with a(An+B) != 0, when refuted
};

// All progressions An+B with A <= A_max, 0 <= B < A. Verified candidates
// are only ever "verified up to X"; refuted ones carry a concrete witness.
std::vector<CongruenceCandidate> congruence_scan(long long t, u64 M, u64 A_max, u64 X,
                                                 const SeriesMod* stream = nullptr);

// Binary layout: little-endian u64 header (t, M, P), then P residues as
// single bytes when M <= 256, else as little-endian u64 words.
void write_stream_cache(const std::string& path, long long t, const SeriesMod& s);
std::optional<SeriesMod> read_stream_cache(const std::string& path, long long t, u64 M, std::size_t min_P);

} // namespace qseries
