#include <doctest.h>

#include "oracles.hpp"
#include "padic_orbits/arith.hpp"
#include "padic_orbits/localquad.hpp"
#include "padic_orbits/pointcount.hpp"

using namespace padic_orbits;

TEST_CASE("classify_quad examples")
{
    CHECK(classify_quad(5, 2).kind == QuadKind::Unramified);
    CHECK(classify_quad(-1, 5).kind == QuadKind::Split);
    CHECK(classify_quad(3, 3).kind == QuadKind::Ramified);
    const LocalQuadType t = classify_quad(2, 2);
    CHECK(t.kind == QuadKind::Ramified);
    CHECK(t.p2_detail == TwoAdicDetail::TwiceUnit);
    CHECK(classify_quad(3, 2).p2_detail == TwoAdicDetail::UnitNonSquare);
    CHECK_THROWS_AS(classify_quad(12, 5), DomainError);
}

TEST_CASE("classify_quad against squares mod p and d mod 8")
{
    for (long long p : {3, 5, 7, 11, 13}) {
        for (long long d = -40; d <= 40; ++d) {
            if (d == 0 || d == 1 || !is_squarefree(d)) continue;
            const QuadKind k = classify_quad(d, static_cast<std::uint64_t>(p)).kind;
            const int l = oracle::legendre(d, p);
            CHECK(k == (l == 0 ? QuadKind::Ramified : l == 1 ? QuadKind::Split : QuadKind::Unramified));
        }
    }
    for (long long d = -40; d <= 40; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        const long long r = ((d % 8) + 8) % 8;
        const QuadKind k = classify_quad(d, 2).kind;
        CHECK(k == (r == 1 ? QuadKind::Split : r == 5 ? QuadKind::Unramified : QuadKind::Ramified));
    }
}

TEST_CASE("chi_at_p")
{
    CHECK(chi_at_p(-4, 5) == 1);
    CHECK(chi_at_p(-4, 2) == 0);
    CHECK(chi_at_p(-23, 2) == 1);
    CHECK_THROWS_AS(chi_at_p(-16, 3), DomainError);
}

TEST_CASE("artin_L_at_1 and res_torus_volume")
{
    CHECK(artin_L_at_1({QuadKind::Split, {}}, 3) == make_q(9, 4));
    CHECK(artin_L_at_1({QuadKind::Unramified, {}}, 3) == make_q(9, 8));
    CHECK(artin_L_at_1({QuadKind::Ramified, {}}, 5) == make_q(5, 4));

    CHECK(res_torus_volume({QuadKind::Split, {}}, 3).vol_omega_T_Tc.rational_value() == make_q(4, 9));
    CHECK(res_torus_volume({QuadKind::Ramified, {}}, 5).vol_omega_T_Tc == QHalfPower(make_q(4, 5), -1, 5));
    const auto r2 = res_torus_volume({QuadKind::Ramified, TwoAdicDetail::TwiceUnit}, 2);
    CHECK(r2.vol_omega_T_Tc == QHalfPower(make_q(1, 4), -1, 2));
    CHECK_FALSE(r2.index_verified);

    for (std::uint64_t p : {3, 5, 7, 11}) {
        for (QuadKind k : {QuadKind::Split, QuadKind::Unramified, QuadKind::Ramified}) {
            const auto r = res_torus_volume({k, {}}, p);
            CHECK(r.vol_canonical_T0 * r.L_factor_at_1 == 1);
            CHECK(r.index_Tc_over_T0 == 1);
        }
    }
}

TEST_CASE("norm1_volume")
{
    CHECK(norm1_volume({QuadKind::Unramified, {}}, 3).rational_value() == make_q(4, 3));
    CHECK(norm1_volume({QuadKind::Ramified, {}}, 5) == QHalfPower(make_q(2), -1, 5));
    CHECK(norm1_volume({QuadKind::Unramified, {}}, 7).rational_value() == make_q(8, 7));
    CHECK_THROWS_AS(norm1_volume({QuadKind::Unramified, {}}, 2), DomainError);
    CHECK(norm1_component_index({QuadKind::Ramified, {}}) == 2);
}

TEST_CASE("classnum_local_check")
{
    CHECK(classnum_local_check(-1, 3));
    CHECK(classnum_local_check(-1, 2));
    CHECK(classnum_local_check(-5, 5));
    for (long long d = -50; d < 0; ++d) {
        if (!is_squarefree(d)) continue;
        for (std::uint64_t p : primes_up_to(50)) CHECK(classnum_local_check(d, p));
    }
}

TEST_CASE("L factors against residue-field point counts")
{
    // #T_0(F_q) / q^2 for the split and unramified tori, counted directly
    for (long long p : {3, 5, 7, 11, 13}) {
        const std::uint64_t q = static_cast<std::uint64_t>(p);
        long long eps = 2;
        while (oracle::legendre(eps, p) != -1) ++eps;
        long long split = 1;
        while (oracle::legendre(split, p) != 1 || split % p == 0 || !is_squarefree(split) || split == 1) ++split;
        const ExactQ unram = make_q(oracle::raw_unit_norm(eps, p, p), p * p);
        const ExactQ spl = make_q(oracle::raw_unit_norm(split, p, p), p * p);
        CHECK(1 / artin_L_at_1({QuadKind::Unramified, {}}, q) == unram);
        CHECK(1 / artin_L_at_1({QuadKind::Split, {}}, q) == spl);
    }
}

TEST_CASE("unramified torus volume equals the point-count volume for odd p <= 23")
{
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        long long eps = 2;
        while (oracle::legendre(eps, static_cast<long long>(p)) != -1 || !is_squarefree(eps)) ++eps;
        const auto prof = volume_profile({eps, NormConstraint::UnitNorm}, p, 3);
        REQUIRE(prof.volume);
        CHECK(QHalfPower::rational(*prof.volume, p) == res_torus_volume({QuadKind::Unramified, {}}, p).vol_omega_T_Tc);
    }
}

TEST_CASE("norm_form_prefactor")
{
    CHECK(norm_form_prefactor(2, 3).rational_value() == 1);
    CHECK(norm_form_prefactor(3, 3) == QHalfPower(make_q(1), -1, 3));
    CHECK(norm_form_prefactor(3, 2) == QHalfPower(make_q(1, 2), 0, 2));
}
