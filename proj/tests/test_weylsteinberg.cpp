#include <doctest.h>

#include <random>

#include "padic_orbits/weylsteinberg.hpp"

using namespace padic_orbits;

namespace {

ExactQ rnd(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-30, 30), den(1, 20);
    for (;;) {
        const long a = num(rng);
        if (a) return make_q(a, den(rng));
    }
}

}  // namespace

TEST_CASE("weyl_disc examples")
{
    CHECK(weyl_disc({GroupKind::GLn, {make_q(2), make_q(3)}, {}}) == make_q(-1, 6));
    CHECK_THROWS_WITH_AS(weyl_disc({GroupKind::GLn, {make_q(5), make_q(5)}, {}}), "not regular semisimple", DomainError);
    CHECK(weyl_disc({GroupKind::Sp2n, {make_q(2)}, {}}) == make_q(-9, 4));
    CHECK(weyl_disc({GroupKind::SLnLie, {make_q(3), make_q(-3)}, {}}) == -36);
    CHECK_THROWS_AS(weyl_disc({GroupKind::SLnLie, {make_q(3), make_q(2)}, {}}), DomainError);
    CHECK_THROWS_AS(weyl_disc({GroupKind::GSp2n, {make_q(3)}, {}}), DomainError);
    CHECK_THROWS_AS(weyl_disc({GroupKind::GLn, {make_q(0), make_q(2)}, {}}), DomainError);
}

TEST_CASE("GL2 discriminant is -(l1 - l2)^2 / det")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const ExactQ a = rnd(rng), b = rnd(rng);
        if (a == b) continue;
        CHECK(weyl_disc({GroupKind::GLn, {a, b}, {}}) == -(a - b) * (a - b) / (a * b));
    }
}

TEST_CASE("GL_n absolute discriminant against the product formula")
{
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < 40; ++i) {
            std::vector<ExactQ> l;
            for (int j = 0; j < n; ++j) l.push_back(rnd(rng));
            bool distinct = true;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) distinct = distinct && l[a] != l[b];
            if (!distinct) continue;
            ExactQ vdm = 1, det = 1;
            for (int a = 0; a < n; ++a) {
                det *= l[a];
                for (int b = a + 1; b < n; ++b) vdm *= (l[a] - l[b]) * (l[a] - l[b]);
            }
            ExactQ detpow = 1;
            for (int j = 0; j < n - 1; ++j) detpow *= det;
            const ExactQ D = weyl_disc({GroupKind::GLn, l, {}});
            CHECK(abs(D) == abs(vdm / detpow));
            for (std::uint64_t p : {2, 3, 5}) CHECK(abs_p(D, p) == abs_p(ExactQ(vdm / detpow), p));
        }
}

TEST_CASE("Lie algebra discriminant is (-1)^{#positive roots} (prod of positive roots)^2")
{
    std::mt19937_64 rng(9);
    auto check = [](const SpectralData& s) {
        const auto roots = positive_root_values(s);
        ExactQ prod = 1;
        for (const auto& r : roots) prod *= r;
        const ExactQ sign = roots.size() % 2 ? -1 : 1;
        CHECK(weyl_disc(s) == sign * prod * prod);
    };
    for (int i = 0; i < 50; ++i) {
        const ExactQ a = rnd(rng), b = rnd(rng);
        check({GroupKind::SLnLie, {a, -a}, {}});
        if (a != b && a + b != 0 && 2 * a + b != 0 && a + 2 * b != 0) check({GroupKind::SLnLie, {a, b, -a - b}, {}});
        if (a != b && a != -b) check({GroupKind::Sp2nLie, {a, b}, {}});
    }
}

TEST_CASE("GSp discriminant twists by the multiplier")
{
    // nu = 1 reduces to Sp
    const ExactQ l1 = make_q(2), l2 = make_q(5);
    CHECK(weyl_disc({GroupKind::GSp2n, {l1, l2}, make_q(1)}) == weyl_disc({GroupKind::Sp2n, {l1, l2}, {}}));
    // scaling eigenvalues by c and nu by c^2 leaves D unchanged
    const ExactQ c = make_q(3, 7);
    CHECK(weyl_disc({GroupKind::GSp2n, {l1 * c, l2 * c}, make_q(3) * c * c}) == weyl_disc({GroupKind::GSp2n, {l1, l2}, make_q(3)}));
}

TEST_CASE("delta_abs_gl2 examples")
{
    const DeltaAbs a = delta_abs_gl2(make_q(5), make_q(6), 5);
    CHECK(a.abs_D.rational_value() == 1);
    CHECK(a.orbit_class == Gl2OrbitClass{Gl2Kind::Hyperbolic, 0, 5});
    const DeltaAbs b = delta_abs_gl2(make_q(0), make_q(-1), 3);
    CHECK(b.orbit_class.kind == Gl2Kind::Hyperbolic);
    CHECK(b.orbit_class.d == 0);
    const DeltaAbs c = delta_abs_gl2(make_q(1), make_q(6), 5);
    CHECK(c.orbit_class == Gl2OrbitClass{Gl2Kind::UnramElliptic, 0, 5});
    // ramified: disc 4 - 24 = -20, D = 20/6, |D|_5 = 5^-1
    const DeltaAbs d = delta_abs_gl2(make_q(2), make_q(6), 5);
    CHECK(d.orbit_class == Gl2OrbitClass{Gl2Kind::RamElliptic, 0, 5});
    CHECK(d.abs_D == QHalfPower(make_q(1), -2, 5));
    // depth: eigenvalues 1 and 1 + 9 at p = 3
    CHECK(delta_abs_gl2(make_q(11), make_q(10), 3).orbit_class == Gl2OrbitClass{Gl2Kind::Hyperbolic, 2, 3});
    CHECK_THROWS_WITH_AS(delta_abs_gl2(make_q(0), make_q(5), 5), "inconsistent valuation data", DomainError);
    CHECK_THROWS_AS(delta_abs_gl2(make_q(2), make_q(1), 5), DomainError);
}

TEST_CASE("Steinberg and Chevalley maps")
{
    CHECK(steinberg_sl2(make_q(2)) == make_q(5, 2));
    CHECK(steinberg_sl2(make_q(1)) == 2);
    CHECK_THROWS_AS(steinberg_sl2(make_q(0)), DomainError);
    CHECK(chevalley_sl2_lie(make_q(1), make_q(-1), make_q(0)) == 1);
    const auto [a, b] = steinberg_sp4(make_q(2), make_q(3));
    CHECK(a == make_q(35, 6));
    CHECK(b == make_q(31, 3));
    CHECK(sp4_jacobian_closed_form(make_q(4), make_q(4)) == 0);
    CHECK(sp4_jacobian_closed_form(make_q(1), make_q(2)) == 0);
}

TEST_CASE("Jacobian identities at random rational points")
{
    std::mt19937_64 rng(13);
    int sp4 = 0, sl2 = 0;
    while (sp4 < 100) {
        const ExactQ t1 = rnd(rng), t2 = rnd(rng);
        if (sp4_jacobian_closed_form(t1, t2) == 0) continue;
        const JacobianCheck c = jacobian_identity_check(t1, t2);
        CHECK(c.determinant_matches);
        CHECK(c.negative_root_form_matches);
        CHECK(c.relation_holds);
        CHECK(c.realized_sign == 1);
        ++sp4;
    }
    CHECK(jacobian_identity_check(make_q(2), make_q(3)).relation_holds);
    CHECK_THROWS_AS(jacobian_identity_check(make_q(3), make_q(3)), DomainError);
    while (sl2 < 100) {
        const ExactQ t = rnd(rng);
        if (t * t == 1) continue;
        const Sl2JacobianCheck c = sl2_jacobian_check(t);
        CHECK(c.matches_inverse_root);
        CHECK(c.realized_sign == -1);
        CHECK(c.measure_sign == -1);
        ++sl2;
    }
    CHECK_THROWS_AS(sl2_jacobian_check(make_q(-1)), DomainError);
}

TEST_CASE("gsp_charpoly_factor")
{
    CHECK(gsp_charpoly_factor(1, make_q(7), QHalfPower::power(3, -4), 3) == QHalfPower::power(3, -2));
    // n = 3, ord det = 1: |D|^{1/2} q^{1}
    CHECK(gsp_charpoly_factor(3, make_q(3), QHalfPower::power(3, -4), 3) == QHalfPower::power(3, 0));
    CHECK_THROWS_WITH_AS(gsp_charpoly_factor(2, make_q(3), QHalfPower::power(3, -4), 3),
                         "value outside Q(sqrt q) scalar algebra", DomainError);
    // q^{-1/2} has no square root in Q(sqrt q)
    CHECK_THROWS_AS(gsp_charpoly_factor(1, make_q(1), QHalfPower::power(3, -1), 3), DomainError);
}
