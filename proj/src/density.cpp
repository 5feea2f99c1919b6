#include "qseries/density.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace qseries {

namespace {

bool is_power_of(u64 M, u64 p) {
    if (M < 2) return false;
    while (M % p == 0) M /= p;
    return M == 1;
}

} // namespace

std::string density_theorem_tag(long long t, u64 M) {
    if (t < 2 || M < 2) return "";
    long long rest = t;
    int alpha = 0;
    while (rest % 3 == 0) {
        rest /= 3;
        ++alpha;
    }
    if (gcd_ll(rest, 6) == 1) {
        if (is_power_of(M, 2)) return "density-1 mod 2^k for t = 3^a m, gcd(m,6)=1";
        if (is_power_of(M, 3)) return "density-1 mod 3^k for t = 3^a m, gcd(m,6)=1";
    }
    // prior result: every prime factor of t at least 5, M a power of one of them
    long long n = t;
    bool all_ge5 = true;
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            if (p < 5) all_ge5 = false;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    if (all_ge5) {
        for (long long p : ps) {
            if (is_power_of(M, static_cast<u64>(p))) {
                return "density-1 mod p^j for t with prime factors >= 5 (prior result)";
            }
        }
    }
    return "";
}

DensityReport density_report(long long t, u64 M, u64 r, std::vector<u64> checkpoints,
                             const SeriesMod* stream) {
    if (checkpoints.empty()) throw std::invalid_argument("density_report: no checkpoints");
    if (r >= M) throw std::invalid_argument("density_report: residue r must satisfy 0 <= r < M");
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    if (checkpoints.front() < 1) throw std::invalid_argument("density_report: checkpoints must be >= 1");

    u64 maxX = checkpoints.back();
    SeriesMod local = [&] {
        if (stream) {
            if (stream->ring().m != M) throw std::invalid_argument("density_report: stream modulus mismatch");
            if (stream->precision() <= maxX) {
                throw PrecisionError("density_report: checkpoint " + std::to_string(maxX) +
                                     " exceeds stream precision " + std::to_string(stream->precision()));
            }
            return *stream;
        }
        return coeffs_abar_mod(t, M, static_cast<std::size_t>(maxX) + 1);
    }();

    DensityReport rep;
    rep.t = t;
    rep.M = M;
    rep.r = r;
    rep.checkpoints = checkpoints;
    rep.theorem_tag = density_theorem_tag(t, M);
    rep.theorem_covered = !rep.theorem_tag.empty();

    const u64* data = local.coeffs().data();
    u64 running = 0;
    u64 prev_end = 0; // count covers indices [0, X]
    for (u64 X : checkpoints) {
        running += kernels::count_residue(data + prev_end, static_cast<std::size_t>(X + 1 - prev_end), r);
        prev_end = X + 1;
        rep.counts.push_back(running);
        mpq_class ratio(running, X);
        ratio.canonicalize();
        rep.ratios.push_back(ratio);
    }
    return rep;
}

std::vector<CongruenceCandidate> congruence_scan(long long t, u64 M, u64 A_max, u64 X,
                                                 const SeriesMod* stream) {
    if (A_max < 1) throw std::invalid_argument("congruence_scan: A_max must be >= 1");
    if (X < 1) throw std::invalid_argument("congruence_scan: X must be >= 1");
    SeriesMod local = [&] {
        if (stream) {
            if (stream->ring().m != M) throw std::invalid_argument("congruence_scan: stream modulus mismatch");
            if (stream->precision() <= X) throw PrecisionError("congruence_scan: X exceeds stream precision");
            return *stream;
        }
        return coeffs_abar_mod(t, M, static_cast<std::size_t>(X) + 1);
    }();

    std::vector<CongruenceCandidate> out;
    for (u64 A = 1; A <= A_max; ++A) {
        for (u64 B = 0; B < A; ++B) {
            CongruenceCandidate c;
            c.A = A;
            c.B = B;
            c.M = M;
            c.tested_through = X;
            for (u64 n = 0, idx = B; idx <= X; ++n, idx += A) {
                if (local.coeffs()[idx] != 0) {
                    c.refuted = true;
                    c.witness_n = static_cast<long long>(n);
                    break;
                }
            }
            out.push_back(c);
        }
    }
    return out;
}

namespace {

void put_u64(std::ofstream& f, u64 v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    f.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64(std::ifstream& f, u64& v) {
    unsigned char b[8];
    if (!f.read(reinterpret_cast<char*>(b), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<u64>(b[i]) << (8 * i);
    return true;
}

} // namespace

void write_stream_cache(const std::string& path, long long t, const SeriesMod& s) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open cache file for writing: " + path);
    u64 M = s.ring().m;
    put_u64(f, static_cast<u64>(t));
    put_u64(f, M);
    put_u64(f, s.precision());
    if (M <= 256) {
        std::vector<unsigned char> bytes(s.precision());
        for (std::size_t i = 0; i < s.precision(); ++i) bytes[i] = static_cast<unsigned char>(s.coeffs()[i]);
        f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    } else {
        for (u64 v : s.coeffs()) put_u64(f, v);
    }
    if (!f) throw std::runtime_error("short write to cache file: " + path);
}

std::optional<SeriesMod> read_stream_cache(const std::string& path, long long t, u64 M, std::size_t min_P) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    u64 ht, hm, hp;
    if (!get_u64(f, ht) || !get_u64(f, hm) || !get_u64(f, hp)) return std::nullopt;
    if (ht != static_cast<u64>(t) || hm != M || hp < min_P) return std::nullopt;
    std::vector<u64> c(hp);
    if (M <= 256) {
        std::vector<unsigned char> bytes(hp);
        if (!f.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(hp))) return std::nullopt;
        for (std::size_t i = 0; i < hp; ++i) c[i] = bytes[i];
    } else {
        for (std::size_t i = 0; i < hp; ++i) {
            if (!get_u64(f, c[i])) return std::nullopt;
        }
    }
    return SeriesMod(ModRing(M), std::move(c), 0);
}

} // namespace qseries
