#include "qseries/eta.hpp"

namespace qseries {

EtaQuotient::EtaQuotient(const std::vector<std::pair<long long, long long>>& entries,
                         std::optional<long long> level_candidate)
    : level_candidate_(level_candidate) {
    for (const auto& [delta, r] : entries) {
        if (delta < 1) throw std::invalid_argument("eta argument delta must be >= 1");
        terms_[delta] += r;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    if (terms_.empty()) throw std::invalid_argument("eta-quotient must have at least one factor");
    if (level_candidate_) {
        if (*level_candidate_ < 1) throw std::invalid_argument("level candidate must be positive");
        for (const auto& [delta, r] : terms_) {
            (void)r;
            if (*level_candidate_ % delta != 0) {
                throw std::invalid_argument("level candidate not divisible by delta " + std::to_string(delta));
            }
        }
    }
}

long long EtaQuotient::e24() const {
    long long s = 0;
    for (const auto& [delta, r] : terms_) s += delta * r;
    return s;
}

long long EtaQuotient::weight_sum() const {
    long long s = 0;
    for (const auto& [delta, r] : terms_) s += r;
    return s;
}

long long EtaQuotient::lcm_delta() const {
    long long l = 1;
    for (const auto& [delta, r] : terms_) {
        (void)r;
        l = lcm_ll(l, delta);
    }
    return l;
}

long long EtaQuotient::max_delta() const { return terms_.rbegin()->first; }

namespace {

template <class Ring>
BasicSeries<Ring> expand_impl(const EtaQuotient& E, const Ring& ring, std::size_t P) {
    auto acc = BasicSeries<Ring>::one(ring, P);
    for (const auto& [delta, r] : E.terms()) {
        auto terms = pentagonal_terms(delta, P);
        if (r > 0) {
            for (long long i = 0; i < r; ++i) acc = mul_sparse(acc, terms);
        } else {
            for (long long i = 0; i < -r; ++i) acc = div_sparse(acc, terms);
        }
    }
    acc.set_e24(E.e24());
    return acc;
}

} // namespace

SeriesZ eta_expand(const EtaQuotient& E, std::size_t P) { return expand_impl(E, ZRing{}, P); }

SeriesMod eta_expand(const EtaQuotient& E, const ModRing& ring, std::size_t P) {
    return expand_impl(E, ring, P);
}

} // namespace qseries
