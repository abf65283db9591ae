#pragma once
// Independent reference implementations used only by the tests.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline long long pow_int(long long b, int e)
{
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline int valuation(long long n, long long p)
{
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Euler's criterion for an odd prime p.
inline int legendre(long long a, long long p)
{
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// Solutions of x^2 - d y^2 = 1 mod m, by a plain double loop.
inline long long raw_norm_one(long long d, long long m)
{
    long long c = 0;
    for (long long x = 0; x < m; ++x)
        for (long long y = 0; y < m; ++y) {
            long long v = ((x * x - d * y * y) % m + m) % m;
            c += v == 1 % m;
        }
    return c;
}

// Pairs with x^2 - d y^2 a unit mod p.
inline long long raw_unit_norm(long long d, long long p, long long m)
{
    long long c = 0;
    for (long long x = 0; x < m; ++x)
        for (long long y = 0; y < m; ++y) c += ((x * x - d * y * y) % p + p) % p != 0;
    return c;
}

// Primitive positive definite forms (a, b, c) of discriminant disc, counted up to
// SL_2(Z) equivalence by listing every form with |b| <= a <= c and collapsing
// the two boundary cases by hand.
inline long long forms_by_box(long long disc)
{
    long long h = 0;
    for (long long a = 1; 3 * a * a <= -disc; ++a)
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
            ++h;
        }
    return h;
}

// Coefficients of q prod (1 - q^m)^24 by repeated multiplication.
inline std::vector<long long> tau_naive(int N)
{
    std::vector<long long> f(N, 0);
    f[0] = 1;
    for (int m = 1; m < N; ++m)
        for (int r = 0; r < 24; ++r)
            for (int i = N - 1; i >= m; --i) f[i] -= f[i - m];
    return f;
}

}  // namespace oracle
