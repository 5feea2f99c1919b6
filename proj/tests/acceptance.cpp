// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit when
// any criterion fails. Tolerances and bounds are pinned in code.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qseries/density.hpp"
#include "qseries/hecke.hpp"
#include "qseries/modform.hpp"
#include "qseries/partitions.hpp"

using namespace qseries;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& desc, bool pass, double secs, const std::string& note = "") {
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", id, desc.c_str(), secs,
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass) ++failures;
}

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. series c_t coefficients equal brute-force hook counts, t in 2..7, n <= 30, < 10 s
void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (long long t = 2; t <= 7 && ok; ++t) {
        auto s = coeffs_ct(t, 31);
        for (int n = 0; n <= 30; ++n) {
            if (s.at(static_cast<std::size_t>(n)) != static_cast<long>(brute_tcore_count(n, t))) {
                ok = false;
                note = "mismatch at t=" + std::to_string(t) + ", n=" + std::to_string(n);
                break;
            }
        }
    }
    double dt = secs_since(t0);
    if (dt >= 10.0) {
        ok = false;
        note += " exceeded 10 s budget";
    }
    report(1, "c_t oracle equivalence, t in 2..7, n <= 30", ok, dt, note);
}

// 2. phi-form and f-form of abar_t agree, t in 2..8, P = 300, exact
void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (long long t = 2; t <= 8; ++t) {
        if (!series_equal(coeffs_abar(t, 300), coeffs_abar_phi_form(t, 300), 299)) {
            ok = false;
            note = "forms disagree at t=" + std::to_string(t);
            break;
        }
    }
    report(2, "generating-function identity, phi-form vs f-form, t in 2..8, P=300", ok, secs_since(t0), note);
}

// 3. f_1^{p^j} = f_p^{p^{j-1}} (mod p^j), p in {2,3,5}, j in {1,2,3}, P = 300
void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (long long p : {2, 3, 5}) {
        for (int j = 1; j <= 3; ++j) {
            u64 M = static_cast<u64>(ipow(p, j));
            ModRing ring(M);
            auto lhs = power(euler_product(ring, 1, 300), ipow(p, j));
            auto rhs = power(euler_product(ring, p, 300), ipow(p, j - 1));
            if (!series_equal_mod(lhs, rhs, M, 299)) {
                ok = false;
                note = "fails at p=" + std::to_string(p) + ", j=" + std::to_string(j);
            }
        }
    }
    report(3, "binomial congruence, p in {2,3,5}, j in {1,2,3}, P=300", ok, secs_since(t0), note);
}

// 4. B/D families certify holomorphic over the grid with the paper's
//    weights and levels; cusp orders vanish exactly on the predicted classes
void criterion4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (int a : {0, 1, 2}) {
        for (long long m : {1, 5, 7}) {
            for (int k : {1, 2, 3}) {
                auto fail = [&](const std::string& why) {
                    ok = false;
                    if (note.empty()) {
                        note = why + " at (alpha,m,k)=(" + std::to_string(a) + "," + std::to_string(m) + "," +
                               std::to_string(k) + ")";
                    }
                };
                // family B
                {
                    auto E = build_B(a, m, k);
                    long long N = family_level(Family::B, a, m);
                    if (!level_admissible(E, N)) fail("B paper level inadmissible");
                    auto cert = certify(E, N);
                    if (!cert.holomorphic) fail("B not holomorphic");
                    if (cert.weight_times_2 != ipow(3, a) * m + ipow(2, k) - 1) fail("B weight");
                    for (const auto& cusp : cert.cusps) {
                        long long rest = cusp.d;
                        int r1 = 0;
                        while (rest % 2 == 0) {
                            rest /= 2;
                            ++r1;
                        }
                        bool predicted = (r1 >= 4 && r1 <= 6); // Case 2
                        if ((sgn(cusp.order) == 0) != predicted) fail("B zero-class d=" + std::to_string(cusp.d));
                    }
                    if (!verify_L_cases(Family::B, a, m, k).ok()) fail("B L-case report");
                }
                // family D
                {
                    auto E = build_D(a, m, k);
                    long long N = family_level(Family::D, a, m);
                    if (!level_admissible(E, N)) fail("D paper level inadmissible");
                    auto cert = certify(E, N);
                    if (!cert.holomorphic) fail("D not holomorphic");
                    if (cert.weight_times_2 != ipow(3, a) * m - 1 + 2 * ipow(3, k)) fail("D weight");
                    for (const auto& cusp : cert.cusps) {
                        long long rest = cusp.d;
                        int r1 = 0, r2 = 0;
                        while (rest % 2 == 0) {
                            rest /= 2;
                            ++r1;
                        }
                        while (rest % 3 == 0) {
                            rest /= 3;
                            ++r2;
                        }
                        // Case 4 always; Case 2 only in its G_1 = 1/9 subclass
                        bool predicted = (r1 == 4 && r2 == a + 2) ||
                                         (r1 <= 3 && r2 == a + 2 && a == 0 && rest == 1);
                        if ((sgn(cusp.order) == 0) != predicted) fail("D zero-class d=" + std::to_string(cusp.d));
                    }
                    if (!verify_L_cases(Family::D, a, m, k).ok()) fail("D L-case report");
                }
            }
        }
    }
    double dt = secs_since(t0);
    if (dt >= 60.0) {
        ok = false;
        note += " exceeded 60 s budget";
    }
    report(4, "family certification grid {0,1,2}x{1,5,7}x{1,2,3}", ok, dt, note);
}

// 5. expanded B = dilated abar mod 2^{k+1} and D mod 3^{k+1} through q^1199
void criterion5() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (auto [a, m, k] : std::vector<std::tuple<int, long long, int>>{{0, 1, 1}, {1, 1, 1}, {0, 5, 1}}) {
        auto cb = verify_congruence_reduction(Family::B, a, m, k, 1200);
        auto cd = verify_congruence_reduction(Family::D, a, m, k, 1200);
        if (!cb.holds || !cd.holds) {
            ok = false;
            note = "reduction fails at (" + std::to_string(a) + "," + std::to_string(m) + "," +
                   std::to_string(k) + ")";
        }
    }
    report(5, "reduction identities B mod 2^{k+1}, D mod 3^{k+1}, P=1200", ok, secs_since(t0), note);
}

// 6. density trend: delta_0(10^5) > delta_0(10^3) for t in {3,9,15},
//    M in {2,4,3,9}; residue counts partition X+1
void criterion6() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (long long t : {3, 9, 15}) {
        for (u64 M : {2, 4, 3, 9}) {
            auto stream = coeffs_abar_mod(t, M, 100001);
            auto rep = density_report(t, M, 0, {1000, 100000}, &stream);
            // partition of residue counts at each checkpoint
            for (std::size_t i = 0; i < rep.checkpoints.size(); ++i) {
                u64 total = 0;
                for (u64 r = 0; r < M; ++r) {
                    total += kernels::count_residue(stream.coeffs().data(),
                                                    static_cast<std::size_t>(rep.checkpoints[i]) + 1, r);
                }
                if (total != rep.checkpoints[i] + 1) {
                    ok = false;
                    note = "counts do not partition X+1 at t=" + std::to_string(t) + ", M=" + std::to_string(M);
                }
            }
            bool strict = rep.ratios[1] > rep.ratios[0];
            std::printf("  criterion 6 cell t=%lld M=%llu: delta_0(10^3)=%s delta_0(10^5)=%s %s\n", t,
                        static_cast<unsigned long long>(M),
                        mpq_class(rep.ratios[0]).get_str().c_str(),
                        mpq_class(rep.ratios[1]).get_str().c_str(), strict ? "strict-increase" : "NOT-strict");
            if (!strict) {
                ok = false;
                if (note.empty()) {
                    note = "no strict increase at t=" + std::to_string(t) + ", M=" + std::to_string(M);
                    if (M == 2) {
                        note += " (abar_t(n) is even for every n >= 1, so delta_0 is identically 1: the"
                                " stated strict inequality cannot hold at M=2)";
                    }
                }
            }
        }
    }
    double dt = secs_since(t0);
    if (dt >= 300.0) {
        ok = false;
        note += " exceeded 5 min budget";
    }
    report(6, "density trend at X=10^3 vs 10^5 with partition check", ok, dt, note);
}

// 7. T_p linearity and commutativity on B_{1,1,1} mod 4 from P = 10^4
void criterion7() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    HeckeContext ctx = hecke_context_B11k(1, 4);
    SeriesMod B = eta_expand(build_B(1, 1, 1), ModRing(4), 10000);
    std::vector<u64> ps{5, 7, 11, 13};
    for (u64 p : ps) {
        auto lin = hecke_Tp(add(B, scale(B, 2)), p, ctx);
        auto rhs = add(hecke_Tp(B, p, ctx), scale(hecke_Tp(B, p, ctx), 2));
        if (!series_equal_mod(lin, rhs, 4, lin.precision() - 1)) {
            ok = false;
            note = "linearity fails at p=" + std::to_string(p);
        }
        auto sc = hecke_Tp(scale(B, 3), p, ctx);
        auto sc2 = scale(hecke_Tp(B, p, ctx), 3);
        if (!series_equal_mod(sc, sc2, 4, sc.precision() - 1)) {
            ok = false;
            note = "scaling fails at p=" + std::to_string(p);
        }
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            auto apq = hecke_Tp(hecke_Tp(B, ps[i], ctx), ps[j], ctx);
            auto aqp = hecke_Tp(hecke_Tp(B, ps[j], ctx), ps[i], ctx);
            std::size_t common = std::min(apq.precision(), aqp.precision());
            if (!series_equal_mod(apq, aqp, 4, common - 1)) {
                ok = false;
                note = "commutativity fails at (" + std::to_string(ps[i]) + "," + std::to_string(ps[j]) + ")";
            }
        }
    }
    report(7, "Hecke linearity and commutativity on B_{1,1,1} mod 4, P=10^4", ok, secs_since(t0), note);
}

// 8. Theorem-1.4 instances: zero failures for some prime-list length <= 8
//    over n <= 500, or honestly documented window exhaustion
void criterion8() {
    auto t0 = Clock::now();
    bool ok = false;
    bool honest = true;
    std::string note;
    std::vector<u64> pool{5, 7, 11, 13, 17, 19, 23, 29};
    std::size_t P_budget = 1000000;
    for (std::size_t len = 1; len <= pool.size(); ++len) {
        std::vector<u64> primes(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(len));
        unsigned long long Q = 1;
        for (u64 p : primes) Q *= p;
        std::size_t P = static_cast<std::size_t>(std::min<unsigned long long>(Q * 500 + 1, P_budget));
        auto rep = verify_cong1_instance(primes, 1, 500, 1, P);
        // the report must describe its own window correctly
        bool window_correct = rep.window_exhausted == (Q * 500ull + 1ull > P) &&
                              rep.n_max_checked == std::min<long long>(500, static_cast<long long>((P - 1) / Q));
        if (!window_correct) honest = false;
        std::printf("  criterion 8 len=%zu product=%llu checked=%lld failures=%lld%s\n", len, Q, rep.checked,
                    rep.failures, rep.window_exhausted ? " (window exhausted)" : "");
        if (!rep.window_exhausted && rep.failures == 0 && rep.checked > 0) {
            ok = true;
            note = "zero failures at prime-list length " + std::to_string(len) + " (empirical c <= " +
                   std::to_string(len - 1) + " for d=1)";
            break;
        }
        if (rep.window_exhausted) {
            note = "window exhausted from length " + std::to_string(len) + " at P=" + std::to_string(P);
            break;
        }
    }
    // criterion passes on zero failures, or on honest window-exhaustion reporting
    report(8, "Theorem-1.4 instance check, d=1, n <= 500", (ok || !note.empty()) && honest, secs_since(t0),
           note);
}

// 9. c_t(n) > 0 for t in 4..8, n <= 500
void criterion9() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (long long t = 4; t <= 8; ++t) {
        auto s = coeffs_ct(t, 501);
        for (std::size_t n = 0; n <= 500; ++n) {
            if (!(s.at(n) > 0)) {
                ok = false;
                note = "c_" + std::to_string(t) + "(" + std::to_string(n) + ") not positive";
                break;
            }
        }
    }
    report(9, "positivity spot check c_t(n) > 0, t in 4..8, n <= 500", ok, secs_since(t0), note);
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
