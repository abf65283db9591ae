#include "padic_orbits/eichlerselberg.hpp"

#include "padic_orbits/arith.hpp"
#include "padic_orbits/quadglobal.hpp"

namespace padic_orbits {

PowerSeriesZ::PowerSeriesZ(std::vector<Integer> coeffs, std::size_t N) : c_(std::move(coeffs))
{
    c_.resize(N + 1, 0);
}

PowerSeriesZ PowerSeriesZ::operator*(const PowerSeriesZ& other) const
{
    const std::size_t N = std::min(order(), other.order());
    PowerSeriesZ out(N);
    for (std::size_t i = 0; i <= N; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= N; ++j) out.c_[i + j] += c_[i] * other.c_[j];
    }
    return out;
}

Integer gegenbauer_like(long long t, long long n, int j)
{
    if (j < 0) throw DomainError("index j must be nonnegative");
    Integer prev = 1, cur = static_cast<long>(t);
    if (j == 0) return prev;
    for (int i = 2; i <= j; ++i) {
        Integer next = Integer(static_cast<long>(t)) * cur - Integer(static_cast<long>(n)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

TraceTerms trace_formula(int k, long long n)
{
    if (k < 4 || k % 2 != 0) throw DomainError("weight k must be even and at least 4");
    if (n < 1) throw DomainError("n must be positive");

    Integer scale;  // n^{k/2-1}
    mpz_pow_ui(scale.get_mpz_t(), Integer(static_cast<long>(n)).get_mpz_t(), static_cast<unsigned long>(k / 2 - 1));

    ExactQ identity = 0;
    const long long r = isqrt(n);
    if (r * r == n) identity = make_q(k - 1, 12) * scale;

    ExactQ elliptic = 0;
    for (long long t = -2 * r - 1; t <= 2 * r + 1; ++t) {
        const long long disc = t * t - 4 * n;
        if (disc >= 0) continue;
        ExactQ hsum = 0;
        for (long long m = 1; m * m <= -disc; ++m) {
            if (disc % (m * m) != 0) continue;
            const long long dm = disc / (m * m);
            const long long res = mod_floor(dm, 4);
            if (res == 0 || res == 1) hsum += hurwitz_hw(dm);
        }
        elliptic += ExactQ(gegenbauer_like(t, n, k - 2)) * hsum;
    }
    elliptic *= ExactQ(-1, 2);

    Integer hyp = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Integer term;
        mpz_pow_ui(term.get_mpz_t(), Integer(static_cast<long>(d)).get_mpz_t(), static_cast<unsigned long>(k - 1));
        hyp += d * d == n ? term : 2 * term;
    }
    const ExactQ hyperbolic = ExactQ(-hyp) / 2;

    const ExactQ total = identity + elliptic + hyperbolic;
    if (total.get_den() != 1) throw DomainError("trace formula integrality violated");

    const ExactQ inv = 1 / ExactQ(scale);
    return {k, n, identity * inv, elliptic * inv, hyperbolic * inv, total * inv, total.get_num()};
}

int cusp_dimension(int k)
{
    if (k < 4 || k % 2 != 0) throw DomainError("weight k must be even and at least 4");
    return k / 12 - (k % 12 == 2 ? 1 : 0);
}

std::vector<Integer> eta_tau(std::size_t N)
{
    if (N > 10000) throw DomainError("eta_tau supports N <= 10^4");
    if (N == 0) return {};
    // P = prod (1 - q^m) up to degree N - 1, then P^24 by the power recurrence
    const std::size_t M = N - 1;
    std::vector<Integer> P(M + 1, 0);
    P[0] = 1;
    for (std::size_t m = 1; m <= M; ++m) {
        for (std::size_t i = M; i >= m; --i) {
            P[i] -= P[i - m];
            if (i == m) break;
        }
    }
    std::vector<std::size_t> support;
    for (std::size_t j = 1; j <= M; ++j) {
        if (P[j] != 0) support.push_back(j);
    }

    std::vector<Integer> F(M + 1, 0);
    F[0] = 1;
    for (std::size_t i = 1; i <= M; ++i) {
        Integer acc = 0;
        for (std::size_t j : support) {
            if (j > i) break;
            acc += (Integer(25 * static_cast<long>(j)) - Integer(static_cast<long>(i))) * P[j] * F[i - j];
        }
        F[i] = acc / static_cast<long>(i);
    }
    // tau(n) is the coefficient of q^{n-1} in P^24
    return F;
}

namespace {

Integer sigma(long long m, int power)
{
    Integer s = 0;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(power));
        s += t;
        if (d * d != m) {
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(m / d), static_cast<unsigned long>(power));
            s += t;
        }
    }
    return s;
}

}  // namespace

PowerSeriesZ eisenstein_E4(std::size_t N)
{
    PowerSeriesZ e(N);
    e[0] = 1;
    for (std::size_t m = 1; m <= N; ++m) e[m] = 240 * sigma(static_cast<long long>(m), 3);
    return e;
}

PowerSeriesZ eisenstein_E6(std::size_t N)
{
    PowerSeriesZ e(N);
    e[0] = 1;
    for (std::size_t m = 1; m <= N; ++m) e[m] = -504 * sigma(static_cast<long long>(m), 5);
    return e;
}

std::vector<Integer> eigenform_coeffs(int k, std::size_t N)
{
    int a = 0, b = 0;
    switch (k) {
    case 12: break;
    case 16: a = 1; break;
    case 18: b = 1; break;
    case 20: a = 2; break;
    case 22: a = 1; b = 1; break;
    case 26: a = 2; b = 1; break;
    default: throw DomainError("space not one-dimensional");
    }
    std::vector<Integer> delta(N + 1, 0);
    const auto tau = eta_tau(N);
    for (std::size_t n = 1; n <= N; ++n) delta[n] = tau[n - 1];
    PowerSeriesZ f(delta, N);
    for (int i = 0; i < a; ++i) f = f * eisenstein_E4(N);
    for (int i = 0; i < b; ++i) f = f * eisenstein_E6(N);
    return {f.coefficients().begin() + 1, f.coefficients().end()};
}

}  // namespace padic_orbits
