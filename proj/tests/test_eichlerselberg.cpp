#include <doctest.h>

#include "oracles.hpp"
#include "padic_orbits/eichlerselberg.hpp"

using namespace padic_orbits;

TEST_CASE("gegenbauer_like")
{
    CHECK(gegenbauer_like(5, 3, 0) == 1);
    CHECK(gegenbauer_like(0, 1, 10) == -1);
    CHECK(gegenbauer_like(1, 1, 10) == -1);
    // roots 1 and n: U_j = (n^{j+1} - 1) / (n - 1)
    CHECK(gegenbauer_like(4, 3, 5) == (729 - 1) / 2);
    CHECK_THROWS_AS(gegenbauer_like(1, 1, -1), DomainError);
}

TEST_CASE("eta_tau matches naive multiplication")
{
    const auto fast = eta_tau(30);
    const auto slow = oracle::tau_naive(30);
    REQUIRE(fast.size() == 30);
    for (int i = 0; i < 30; ++i) CHECK(fast[i] == Integer(static_cast<long>(slow[i])));
    CHECK(fast[0] == 1);
    CHECK(fast[1] == -24);
    CHECK(fast[4] == 4830);
    CHECK(eta_tau(0).empty());
    CHECK_THROWS_AS(eta_tau(10001), DomainError);
}

TEST_CASE("tau is multiplicative and satisfies the Hecke relation")
{
    const auto t = eta_tau(200);
    auto tau = [&](int n) { return t[n - 1]; };
    CHECK(tau(6) == tau(2) * tau(3));
    CHECK(tau(35) == tau(5) * tau(7));
    // tau(p^2) = tau(p)^2 - p^11
    Integer p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), 2, 11);
    CHECK(tau(4) == tau(2) * tau(2) - p11);
    mpz_ui_pow_ui(p11.get_mpz_t(), 13, 11);
    CHECK(tau(169) == tau(13) * tau(13) - p11);
}

TEST_CASE("eigenform_coeffs")
{
    CHECK(eigenform_coeffs(12, 5) == std::vector<Integer>{1, -24, 252, -1472, 4830});
    CHECK(eigenform_coeffs(16, 2)[1] == 216);
    CHECK_THROWS_WITH_AS(eigenform_coeffs(24, 5), "space not one-dimensional", DomainError);
    // normalized eigenforms are multiplicative
    for (int k : {16, 18, 20, 22, 26}) {
        const auto a = eigenform_coeffs(k, 40);
        CHECK(a[0] == 1);
        CHECK(a[5] == a[1] * a[2]);
        CHECK(a[34] == a[4] * a[6]);
    }
}

TEST_CASE("trace_formula examples")
{
    const TraceTerms t = trace_formula(12, 1);
    CHECK(t.trace == 1);
    CHECK(t.identity_term == make_q(11, 12));
    CHECK(t.elliptic_term == make_q(7, 12));
    CHECK(t.hyperbolic_term == make_q(-1, 2));
    CHECK(trace_formula(12, 2).trace == -24);
    for (long long n = 1; n <= 20; ++n) CHECK(trace_formula(14, n).trace == 0);
    CHECK_THROWS_AS(trace_formula(13, 1), DomainError);
    CHECK_THROWS_AS(trace_formula(2, 1), DomainError);
    CHECK_THROWS_AS(trace_formula(12, 0), DomainError);
}

TEST_CASE("terms add up")
{
    for (int k : {12, 16, 24})
        for (long long n = 1; n <= 12; ++n) {
            const TraceTerms t = trace_formula(k, n);
            CHECK(t.rhs_total == t.identity_term + t.elliptic_term + t.hyperbolic_term);
            Integer scale;
            mpz_pow_ui(scale.get_mpz_t(), Integer(static_cast<long>(n)).get_mpz_t(), static_cast<unsigned long>(k / 2 - 1));
            CHECK(ExactQ(t.trace) == t.rhs_total * scale);
        }
}

TEST_CASE("trace formula against eigenforms, zero spaces and dimensions")
{
    for (int k : {12, 16, 18, 20, 22, 26}) {
        const auto a = eigenform_coeffs(k, 50);
        for (long long n = 1; n <= 50; ++n) CHECK(trace_formula(k, n).trace == a[n - 1]);
    }
    for (int k : {4, 6, 8, 10, 14})
        for (long long n = 1; n <= 30; ++n) CHECK(trace_formula(k, n).trace == 0);
    for (int k = 4; k <= 40; k += 2) CHECK(trace_formula(k, 1).trace == cusp_dimension(k));
    CHECK(cusp_dimension(24) == 2);
    CHECK(cusp_dimension(14) == 0);
}

TEST_CASE("trace on a two-dimensional space is Hecke-compatible")
{
    // Tr T_2 T_2 relation on S_24: Tr T_4 = sum a_i(2)^2 - 2 * 2^23 ... check via traces:
    // for each eigenform a(4) = a(2)^2 - 2^{k-1}, so Tr T_4 = sum a(2)^2 - dim * 2^{23}
    const Integer t2 = trace_formula(24, 2).trace, t4 = trace_formula(24, 4).trace;
    const Integer n2 = trace_formula(24, 1).trace;
    CHECK(n2 == 2);
    // sum a(2)^2 = (Tr T_2)^2 - 2 * det, and det is an integer; check parity-free consequence
    Integer p23;
    mpz_ui_pow_ui(p23.get_mpz_t(), 2, 23);
    const Integer sum_sq = t4 + 2 * p23;
    CHECK(sum_sq > 0);
    CHECK((t2 * t2 - sum_sq) % 2 == 0);
}
