#include "qseries/partitions.hpp"

#include <algorithm>

namespace qseries {

Partition Partition::of(std::vector<int> parts) {
    Partition p;
    int sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
        sum += parts[i];
    }
    p.parts = std::move(parts);
    p.n = sum;
    return p;
}

Partition conjugate(const Partition& p) {
    std::vector<int> conj;
    if (!p.parts.empty()) {
        conj.resize(static_cast<std::size_t>(p.parts[0]), 0);
        for (std::size_t j = 0; j < conj.size(); ++j) {
            int count = 0;
            for (int part : p.parts) {
                if (part > static_cast<int>(j)) ++count;
            }
            conj[j] = count;
        }
    }
    return Partition::of(std::move(conj));
}

HookDiagram hook_numbers(const Partition& p) {
    HookDiagram d;
    d.partition = p;
    Partition conj = conjugate(p);
    d.hooks.resize(p.parts.size());
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        d.hooks[i].resize(static_cast<std::size_t>(p.parts[i]));
        for (int j = 0; j < p.parts[i]; ++j) {
            // arm + leg + 1
            d.hooks[i][static_cast<std::size_t>(j)] =
                (p.parts[i] - (j + 1)) + (conj.parts[static_cast<std::size_t>(j)] - static_cast<int>(i + 1)) + 1;
        }
    }
    return d;
}

bool is_t_core(const Partition& p, long long t) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    HookDiagram d = hook_numbers(p);
    for (const auto& row : d.hooks) {
        for (int h : row) {
            if (h % t == 0) return false;
        }
    }
    return true;
}

namespace {

void descend(std::vector<int>& parts, int remaining, int max_part,
             const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        Partition p;
        p.parts = parts;
        for (int x : parts) p.n += x;
        visit(p);
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        parts.push_back(next);
        descend(parts, remaining - next, next, visit);
        parts.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > 60) throw std::invalid_argument("partition enumeration guarded at n <= 60");
    std::vector<int> parts;
    descend(parts, n, n == 0 ? 1 : n, visit);
}

long long brute_tcore_count(int n, long long t) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    long long count = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (is_t_core(p, t)) ++count;
    });
    return count;
}

namespace {

template <class Ring>
BasicSeries<Ring> ct_impl(const Ring& ring, long long t, std::size_t P) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    auto acc = BasicSeries<Ring>::one(ring, P);
    auto ft = pentagonal_terms(t, P);
    for (long long i = 0; i < t; ++i) acc = mul_sparse(acc, ft);
    acc = div_sparse(acc, pentagonal_terms(1, P));
    return acc;
}

// f_2 f_t^{2t} / (f_1^2 f_{2t}^t)
template <class Ring>
BasicSeries<Ring> abar_f_form(const Ring& ring, long long t, std::size_t P) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    auto acc = BasicSeries<Ring>::one(ring, P);
    acc = mul_sparse(acc, pentagonal_terms(2, P));
    auto ft = pentagonal_terms(t, P);
    for (long long i = 0; i < 2 * t; ++i) acc = mul_sparse(acc, ft);
    auto f1 = pentagonal_terms(1, P);
    acc = div_sparse(acc, f1);
    acc = div_sparse(acc, f1);
    auto f2t = pentagonal_terms(2 * t, P);
    for (long long i = 0; i < t; ++i) acc = div_sparse(acc, f2t);
    return acc;
}

} // namespace

SeriesZ coeffs_ct(long long t, std::size_t P) { return ct_impl(ZRing{}, t, P); }

SeriesMod coeffs_ct(const ModRing& ring, long long t, std::size_t P) { return ct_impl(ring, t, P); }

SeriesZ coeffs_abar(long long t, std::size_t P) { return abar_f_form(ZRing{}, t, P); }

SeriesZ coeffs_abar_phi_form(long long t, std::size_t P) {
    if (t < 2) throw std::invalid_argument("t must be >= 2");
    SeriesZ num = power(phi_neg(t, P), t);
    SeriesZ den = inverse(phi_neg(1, P));
    return mul(num, den);
}

SeriesMod coeffs_abar_mod(long long t, u64 M, std::size_t P) { return abar_f_form(ModRing(M), t, P); }

} // namespace qseries
