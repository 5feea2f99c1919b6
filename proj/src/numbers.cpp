#include "qseries/numbers.hpp"

#include <numeric>
#include <stdexcept>

namespace qseries {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

namespace {

// Jacobi-style reduction for odd positive n.
int kronecker_odd(long long a, long long n) {
    // n odd, n >= 1
    a %= n;
    if (a < 0) a += n;
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

} // namespace

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    // factor out 2s from n; (a/2) piece
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        long long r = ((a % 8) + 8) % 8;
        int k2 = (r == 1 || r == 7) ? 1 : -1;
        if (twos % 2 == 1) sign *= k2;
    }
    return sign * kronecker_odd(a, n);
}

int kronecker(const mpz_class& a, long long n) {
    if (mpz_fits_slong_p(a.get_mpz_t())) return kronecker(mpz_get_si(a.get_mpz_t()), n);
    if (n == 0) return 0; // |a| > 1 here
    int sign = 1;
    long long nn = n;
    if (nn < 0) {
        nn = -nn;
        if (sgn(a) < 0) sign = -sign;
    }
    int twos = 0;
    while (nn % 2 == 0) {
        nn /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (mpz_even_p(a.get_mpz_t())) return 0;
        long long r = mpz_fdiv_ui(a.get_mpz_t(), 8);
        int k2 = (r == 1 || r == 7) ? 1 : -1;
        if (twos % 2 == 1) sign *= k2;
    }
    // odd part via reduction of a mod nn, then the long long path
    long long ared = static_cast<long long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(nn)));
    return sign * kronecker_odd(ared, nn);
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<u64>((static_cast<unsigned __int128>(result) * base) % mod);
        base = static_cast<u64>((static_cast<unsigned __int128>(base) * base) % mod);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    auto mulmod = [](u64 a, u64 b, u64 m) {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
    };
    // deterministic witness set for 64-bit range
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_coprime_to_6(std::size_t count) {
    std::vector<u64> out;
    out.reserve(count);
    for (u64 p = 5; out.size() < count; p += 2) {
        if (p % 3 == 0) continue;
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long long ipow(long long base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && (r > INT64_MAX / (base < 0 ? -base : base))) throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

} // namespace qseries
