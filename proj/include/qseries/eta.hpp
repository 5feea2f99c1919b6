#pragma once

// Eta-quotients: finite maps delta -> r_delta with eta(delta z)^{r_delta}
// factors. Expansion produces q^{e24/24} * prod (q^d;q^d)_inf^{r_d} with
// e24 = sum delta * r_delta tracked as an integer count of 1/24 units.

#include <map>
#include <optional>

#include "qseries/series.hpp"

namespace qseries {

class EtaQuotient {
public:
    // Entries with zero exponent are dropped; duplicate deltas add.
    explicit EtaQuotient(const std::vector<std::pair<long long, long long>>& entries,
                         std::optional<long long> level_candidate = std::nullopt);

    const std::map<long long, long long>& terms() const { return terms_; }
    std::optional<long long> level_candidate() const { return level_candidate_; }

    long long e24() const;            // sum delta * r_delta
    long long weight_sum() const;     // sum r_delta (twice the weight)
    long long lcm_delta() const;
    long long max_delta() const;

private:
    std::map<long long, long long> terms_;
    std::optional<long long> level_candidate_;
};

// Expand through q^{P-1} of the tail; the returned series carries
// e24 = sum delta*r_delta. Constant terms are 1, so inversion never fails.
SeriesZ eta_expand(const EtaQuotient& E, std::size_t P);
SeriesMod eta_expand(const EtaQuotient& E, const ModRing& ring, std::size_t P);

} // namespace qseries
