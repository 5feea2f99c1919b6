#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qseries/eta.hpp"
#include "qseries/json_io.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

SeriesZ from_ints(std::vector<long long> v, long long e24 = 0) {
    std::vector<mpz_class> c;
    for (long long x : v) c.emplace_back(ZRing{}.from_int(x));
    return SeriesZ(ZRing{}, std::move(c), e24);
}

SeriesZ random_series(std::mt19937_64& rng, std::size_t P) {
    std::vector<mpz_class> c(P);
    for (auto& x : c) x = static_cast<long>(rng() % 19) - 9;
    return SeriesZ(ZRing{}, std::move(c), 0);
}

} // namespace

TEST_CASE("basic products and identity element") {
    auto one_plus_q = from_ints({1, 1, 0});
    auto one_minus_q = from_ints({1, -1, 0});
    auto prod = mul(one_plus_q, one_minus_q);
    CHECK(prod.at(0) == 1);
    CHECK(prod.at(1) == 0);
    CHECK(prod.at(2) == -1);

    auto a = from_ints({3, -2, 7, 1});
    auto one = SeriesZ::one(ZRing{}, 4);
    CHECK(series_equal(mul(a, one), a, 3));
}

TEST_CASE("f_1 times the partition generating function is 1") {
    std::size_t P = 50;
    auto p = oracles::partition_numbers(P);
    SeriesZ pgen(ZRing{}, p, 0);
    auto prod = mul(euler_product(1, P), pgen);
    CHECK(prod.at(0) == 1);
    for (std::size_t n = 1; n < P; ++n) CHECK(prod.at(n) == 0);
}

TEST_CASE("inverse: geometric series, overpartitions, involution") {
    auto inv_geo = inverse(from_ints({1, -1, 0, 0, 0, 0, 0}));
    for (std::size_t n = 0; n < 7; ++n) CHECK(inv_geo.at(n) == 1);

    // 1/phi(-q) = overpartition generating function
    auto inv_phi = inverse(phi_neg(1, 7));
    auto counts = oracles::overpartition_counts(6);
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(inv_phi.at(n) == static_cast<long>(counts[n]));
    }

    auto f1 = euler_product(1, 40);
    CHECK(series_equal(inverse(inverse(f1)), f1, 39));
}

TEST_CASE("powers: a^0, binomial square, Jacobi cube vs dense oracle") {
    auto a = from_ints({2, 5, -1});
    auto a0 = power(a, 0);
    CHECK(a0.at(0) == 1);
    CHECK(a0.at(1) == 0);

    auto sq = power(from_ints({1, 1, 0}), 2);
    CHECK(sq.at(0) == 1);
    CHECK(sq.at(1) == 2);
    CHECK(sq.at(2) == 1);

    std::size_t P = 120;
    auto cube = power(euler_product(1, P), 3);
    auto oracle = oracles::dense_euler_product(1, 3, P);
    for (std::size_t n = 0; n < P; ++n) CHECK(cube.at(n) == oracle[n]);
    // leading pattern 1 - 3q + 5q^3 - 7q^6 + ...
    CHECK(cube.at(0) == 1);
    CHECK(cube.at(1) == -3);
    CHECK(cube.at(3) == 5);
    CHECK(cube.at(6) == -7);
    CHECK(cube.at(10) == 9);
}

TEST_CASE("euler_product matches the dense product oracle at P=200") {
    std::size_t P = 200;
    for (long long k : {1, 3}) {
        auto sparse = euler_product(k, P);
        auto dense = oracles::dense_euler_product(k, 1, P);
        for (std::size_t n = 0; n < P; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(sparse.at(n) == dense[n]);
        }
    }
}

TEST_CASE("pentagonal support: nonzero only at k*j(3j-+1)/2") {
    std::size_t P = 600;
    for (long long k : {1, 2, 5}) {
        auto f = euler_product(k, P);
        std::vector<bool> allowed(P, false);
        for (long long j = 0;; ++j) {
            long long g1 = k * (j * (3 * j - 1) / 2);
            long long g2 = k * (j * (3 * j + 1) / 2);
            if (g1 >= static_cast<long long>(P) && g2 >= static_cast<long long>(P) && j > 0) break;
            if (g1 < static_cast<long long>(P)) allowed[static_cast<std::size_t>(g1)] = true;
            if (g2 < static_cast<long long>(P)) allowed[static_cast<std::size_t>(g2)] = true;
        }
        for (std::size_t n = 0; n < P; ++n) {
            if (!allowed[n]) CHECK(f.at(n) == 0);
        }
    }
}

TEST_CASE("phi(-q) equals f_1^2 / f_2 and substitution q -> q^k") {
    std::size_t P = 300;
    auto lhs = phi_neg(1, P);
    CHECK(lhs.at(0) == 1);
    CHECK(lhs.at(1) == -2);
    CHECK(lhs.at(4) == 2);
    CHECK(lhs.at(9) == -2);
    CHECK(lhs.at(16) == 2);
    auto rhs = mul(power(euler_product(1, P), 2), inverse(euler_product(2, P)));
    CHECK(series_equal(lhs, rhs, P - 1));

    auto phi2 = phi_neg(2, 20);
    CHECK(phi2.at(0) == 1);
    CHECK(phi2.at(2) == -2);
    CHECK(phi2.at(8) == 2);
    CHECK(phi2.at(1) == 0);
    CHECK(series_equal(phi2, dilate(phi_neg(1, 10), 2), 19));
}

TEST_CASE("ring laws on random truncations at P=100") {
    std::mt19937_64 rng(2024);
    std::size_t P = 100;
    for (int rep = 0; rep < 10; ++rep) {
        auto a = random_series(rng, P);
        auto b = random_series(rng, P);
        auto c = random_series(rng, P);
        CHECK(series_equal(mul(a, b), mul(b, a), P - 1));
        CHECK(series_equal(mul(mul(a, b), c), mul(a, mul(b, c)), P - 1));
        CHECK(series_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), P - 1));
    }
    // modular ring laws
    ModRing ring(81);
    for (int rep = 0; rep < 10; ++rep) {
        auto a = reduce_mod(random_series(rng, P), 81);
        auto b = reduce_mod(random_series(rng, P), 81);
        auto c = reduce_mod(random_series(rng, P), 81);
        CHECK(series_equal_mod(mul(a, b), mul(b, a), 81, P - 1));
        CHECK(series_equal_mod(mul(mul(a, b), c), mul(a, mul(b, c)), 81, P - 1));
        CHECK(series_equal_mod(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 81, P - 1));
    }
}

TEST_CASE("inverse is a right inverse for unit constant terms") {
    std::mt19937_64 rng(99);
    std::size_t P = 80;
    for (int rep = 0; rep < 8; ++rep) {
        auto a = random_series(rng, P);
        a.coeffs_mut()[0] = (rep % 2 == 0) ? 1 : -1;
        auto prod = mul(a, inverse(a));
        CHECK(prod.at(0) == 1);
        for (std::size_t n = 1; n < P; ++n) CHECK(prod.at(n) == 0);
    }
    // non-invertible constant terms refuse
    CHECK_THROWS_AS(inverse(from_ints({2, 1})), std::domain_error);
    auto twos = reduce_mod(from_ints({2, 1, 1}), 6);
    CHECK_THROWS_AS(inverse(twos), std::domain_error);
}

TEST_CASE("precision contract: results carry min precision, reads beyond throw") {
    auto a = from_ints({1, 2, 3, 4, 5});
    auto b = from_ints({1, 1, 1});
    CHECK(mul(a, b).precision() == 3);
    CHECK(add(a, b).precision() == 3);
    CHECK(sub(a, b).precision() == 3);
    CHECK(inverse(b).precision() == 3);
    CHECK(power(a, 3).precision() == 5);
    CHECK_THROWS_AS(mul(a, b).at(3), PrecisionError);
    CHECK_THROWS_AS(a.at(5), PrecisionError);
    CHECK_THROWS_AS(a.truncated(6), PrecisionError);
    CHECK(a.truncated(2).precision() == 2);
}

TEST_CASE("modulus mismatch is rejected") {
    auto a = reduce_mod(from_ints({1, 2, 3}), 4);
    auto b = reduce_mod(from_ints({1, 2, 3}), 8);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(reduce_mod(b, 3), std::invalid_argument);
    CHECK(reduce_mod(b, 4).ring().m == 4);
}

TEST_CASE("reduce_mod basics and the binomial congruence instances") {
    auto r = reduce_mod(from_ints({1, -2, 5}), 2);
    CHECK(r.at(0) == 1);
    CHECK(r.at(1) == 0);
    CHECK(r.at(2) == 1);

    std::size_t P = 500;
    // f_1^4 = f_2^2 (mod 2) and f_1^9 = f_3^3 (mod 9), exact-backend route
    auto f1_4 = reduce_mod(power(euler_product(1, P), 4), 2);
    auto f2_2 = reduce_mod(power(euler_product(2, P), 2), 2);
    CHECK(series_equal_mod(f1_4, f2_2, 2, P - 1));
    auto f1_9 = reduce_mod(power(euler_product(1, P), 9), 9);
    auto f3_3 = reduce_mod(power(euler_product(3, P), 3), 9);
    CHECK(series_equal_mod(f1_9, f3_3, 9, P - 1));
}

TEST_CASE("binomial congruence f_1^{p^j} = f_p^{p^{j-1}} (mod p^j), residue backend") {
    std::size_t P = 300;
    for (long long p : {2, 3, 5}) {
        for (int j = 1; j <= 3; ++j) {
            u64 M = static_cast<u64>(ipow(p, j));
            ModRing ring(M);
            auto lhs = power(euler_product(ring, 1, P), ipow(p, j));
            auto rhs = power(euler_product(ring, p, P), ipow(p, j - 1));
            CAPTURE(p);
            CAPTURE(j);
            CHECK(series_equal_mod(lhs, rhs, M, P - 1));
        }
    }
}

TEST_CASE("series_equal_mod basics") {
    auto a = from_ints({3, 1, 4, 1, 5});
    CHECK(series_equal_mod(a, a, 7, 4));
    std::size_t P = 100;
    auto f1sq = power(euler_product(1, P), 2);
    auto f2 = euler_product(2, P);
    CHECK(series_equal_mod(f1sq, f2, 2, P - 1));
    CHECK_FALSE(series_equal_mod(euler_product(1, P), f2, 2, P - 1)); // q^1: 1 vs 0
    CHECK_THROWS_AS(series_equal_mod(a, a, 7, 5), PrecisionError);
}

TEST_CASE("exponent prefactors: arithmetic, alignment, folding") {
    auto a = from_ints({1, 1}, 24);
    auto b = from_ints({1, 2, 3, 4}, 48);
    CHECK(mul(a, b).e24() == 72);
    CHECK(inverse(a).e24() == -24);
    CHECK(power(a, 5).e24() == 120);
    CHECK(power(a, 0).e24() == 0);
    CHECK(dilate(a, 3).e24() == 72);
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);

    // q^{48/24} b = q^2 * (1 + 2q + ...) equals the folded view
    auto folded = b.folded();
    CHECK(folded.e24() == 0);
    CHECK(folded.precision() == 6);
    CHECK(folded.at(0) == 0);
    CHECK(folded.at(2) == 1);
    CHECK(folded.at(3) == 2);
    CHECK(series_equal(b, folded, 5));

    auto c = from_ints({1, 1}, 12);
    CHECK_THROWS_AS(series_equal(a, c, 1), std::invalid_argument);
    CHECK_THROWS_AS(c.folded(), std::domain_error);
    CHECK_THROWS_AS(from_ints({1}, -24).folded(), std::domain_error);
}

TEST_CASE("dilate places coefficients on the k-lattice") {
    auto a = from_ints({1, -1, 2});
    auto d = dilate(a, 3);
    CHECK(d.precision() == 9);
    CHECK(d.at(0) == 1);
    CHECK(d.at(3) == -1);
    CHECK(d.at(6) == 2);
    CHECK(d.at(1) == 0);
    CHECK(d.at(8) == 0);
}

TEST_CASE("eta expansion: single eta, B-type congruence factor, 1/eta") {
    std::size_t P = 60;
    auto single = eta_expand(EtaQuotient({{1, 1}}), P);
    CHECK(single.e24() == 1);
    auto f1 = euler_product(1, P);
    for (std::size_t n = 0; n < P; ++n) CHECK(single.at(n) == f1.at(n));

    auto inv_eta = eta_expand(EtaQuotient({{1, -1}}), P);
    CHECK(inv_eta.e24() == -1);
    auto p = oracles::partition_numbers(P);
    for (std::size_t n = 0; n < P; ++n) CHECK(inv_eta.at(n) == p[n]);

    // duplicate deltas merge, zero exponents drop
    EtaQuotient merged({{24, -2}, {24, 5}, {48, 3}, {48, -3}, {12, 1}});
    CHECK(merged.terms().size() == 2);
    CHECK(merged.terms().at(24) == 3);
    CHECK(merged.terms().at(12) == 1);
    CHECK_THROWS_AS(EtaQuotient({{24, 1}, {24, -1}}), std::invalid_argument);
}

TEST_CASE("serial and parallel kernels agree on random data") {
    std::mt19937_64 rng(5);
    std::size_t P = 400;
    // residue kernels
    std::vector<u64> a(P), b(P), out_s(P), out_p(P);
    for (auto& x : a) x = rng() % 9;
    for (auto& x : b) x = rng() % 9;
    kernels::conv_serial(a.data(), b.data(), out_s.data(), P, 9);
    kernels::conv_parallel(a.data(), b.data(), out_p.data(), P, 9, 2);
    CHECK(out_s == out_p);
    auto terms = pentagonal_terms(1, P);
    kernels::sparse_mul_serial(a.data(), P, terms.data(), terms.size(), out_s.data(), 9);
    kernels::sparse_mul_parallel(a.data(), P, terms.data(), terms.size(), out_p.data(), 9, 2);
    CHECK(out_s == out_p);
    CHECK(kernels::count_residue_serial(a.data(), P, 3) == kernels::count_residue_parallel(a.data(), P, 3, 2));

    // exact kernels
    std::vector<mpz_class> za(P), zb(P), zs(P), zp(P);
    for (auto& x : za) x = static_cast<long>(rng() % 2001) - 1000;
    for (auto& x : zb) x = static_cast<long>(rng() % 2001) - 1000;
    kernels::conv_serial(za.data(), zb.data(), zs.data(), P);
    kernels::conv_parallel(za.data(), zb.data(), zp.data(), P, 2);
    CHECK(zs == zp);
    kernels::sparse_mul_serial(za.data(), P, terms.data(), terms.size(), zs.data());
    kernels::sparse_mul_parallel(za.data(), P, terms.data(), terms.size(), zp.data(), 2);
    CHECK(zs == zp);
}

TEST_CASE("whole-pipeline results are identical under worker counts 1 and 2") {
    kernels::set_workers(2);
    auto par = eta_expand(EtaQuotient({{24, -2}, {48, 1}, {72, 10}, {144, -5}}), ModRing(4), 3000);
    kernels::set_workers(1);
    auto ser = eta_expand(EtaQuotient({{24, -2}, {48, 1}, {72, 10}, {144, -5}}), ModRing(4), 3000);
    CHECK(series_equal_mod(par, ser, 4, 2999));
}

TEST_CASE("series JSON round trip") {
    auto s = mul(power(euler_product(1, 24), 3), phi_neg(2, 24));
    json j = series_to_json(s);
    CHECK(j.at("modulus").is_null());
    CHECK(j.at("precision") == 24);
    auto back = seriesz_from_json(j);
    CHECK(back.e24() == s.e24());
    CHECK(series_equal(back, s, 23));

    auto m = reduce_mod(s, 27);
    json jm = series_to_json(m);
    CHECK(jm.at("modulus") == "27");
    CHECK(jm.at("coeffs").size() == 24);
}
