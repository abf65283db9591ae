#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "padic_orbits/arith.hpp"
#include "padic_orbits/quadglobal.hpp"

using namespace padic_orbits;

TEST_CASE("quad_field")
{
    CHECK(quad_field(-1).disc == -4);
    CHECK(quad_field(-1).w == 4);
    CHECK(quad_field(-3).disc == -3);
    CHECK(quad_field(-3).w == 6);
    CHECK(quad_field(-5).disc == -20);
    CHECK(quad_field(-5).h == 2);
    CHECK(quad_field(-23).w == 2);
    CHECK_THROWS_AS(quad_field(-4), DomainError);
    CHECK_THROWS_AS(quad_field(5), DomainError);
}

TEST_CASE("class_number examples")
{
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-3) == 1);
    CHECK(class_number(-163) == 1);
    CHECK(class_number(-12) == 1);
    CHECK(class_number(-20) == 2);
    CHECK(reduced_forms(-23) == std::vector<ReducedForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
    CHECK_THROWS_AS(class_number(-5), DomainError);
    CHECK_THROWS_AS(class_number(8), DomainError);
}

TEST_CASE("class numbers agree across three methods for |disc| <= 500")
{
    for (long long disc = -3; disc >= -500; --disc) {
        const long long r = ((disc % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        const long long h = class_number(disc);
        CHECK(h == oracle::forms_by_box(disc));
        CHECK(h == class_number_analytic(disc));
    }
}

TEST_CASE("hurwitz_hw")
{
    CHECK(hurwitz_hw(-3) == make_q(1, 3));
    CHECK(hurwitz_hw(-4) == make_q(1, 2));
    CHECK(hurwitz_hw(-8) == 1);
    CHECK(hurwitz_hw(-12) == 1);
    for (long long disc = -3; disc >= -2000; --disc) {
        const long long r = ((disc % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        const ExactQ v = hurwitz_hw(disc) * unit_weight(disc);
        CHECK(v.get_den() == 1);
        CHECK(v > 0);
    }
}

TEST_CASE("dirichlet_L1")
{
    const L1Estimate a = dirichlet_L1(-4, 1000000);
    CHECK(std::fabs(a.value - std::numbers::pi / 4) <= a.err_bound);
    CHECK(a.err_bound <= 4e-6);
    const L1Estimate b = dirichlet_L1(-3, 1000000);
    CHECK(std::fabs(b.value - std::numbers::pi / (3 * std::sqrt(3.0))) <= b.err_bound);
    const L1Estimate c = dirichlet_L1(-23, 1000000);
    CHECK(std::fabs(c.value - 3 * std::numbers::pi / std::sqrt(23.0)) <= c.err_bound);
    CHECK(c.terms % 23 == 0);
    CHECK_THROWS_AS(dirichlet_L1(-12, 1000), DomainError);
    CHECK_THROWS_AS(dirichlet_L1(-23, 10), DomainError);
}

TEST_CASE("cnf_residual")
{
    CHECK(cnf_residual(-1, 1000000).residual < 1e-5);
    CHECK(cnf_residual(-23, 1000000).residual < 1e-4);
    const CnfResidual r = cnf_residual(-163, 10000000);
    CHECK(r.field.h == 1);
    CHECK(r.residual < 1e-4);
    CHECK(r.within_bound);
    for (long long disc = -3; disc >= -200; --disc) {
        if (!is_fundamental_discriminant(disc)) continue;
        CHECK(cnf_residual(disc % 4 == 0 ? disc / 4 : disc, 1000000).within_bound);
    }
}

TEST_CASE("finite_adelic_volume")
{
    CHECK(finite_adelic_volume(quad_field(-1)) == make_q(1, 4));
    CHECK(finite_adelic_volume(quad_field(-3)) == make_q(1, 6));
    CHECK(finite_adelic_volume(quad_field(-23)) == make_q(3, 2));
}

TEST_CASE("global_identity_check")
{
    const GlobalCheck a = global_identity_check(1, 6, 1000000);
    CHECK(a.lhs == make_q(3, 2));
    CHECK(a.relative_residual < 1e-4);
    CHECK(a.pass);
    const GlobalCheck b = global_identity_check(0, 1, 1000000);
    CHECK(b.relative_residual < 1e-5);
    CHECK(b.pass);
    const GlobalCheck c = global_identity_check(1, 1, 1000000);
    CHECK(c.relative_residual < 1e-5);
    CHECK(c.pass);
    for (const auto* g : {&a, &b, &c}) {
        CHECK(g->off_S.size() == 5);
        CHECK(g->off_S_trivial);
    }
    // a non-maximal order: disc -16 = 2^2 * -4
    const GlobalCheck d = global_identity_check(0, 4, 1000000);
    CHECK(d.conductor == 2);
    CHECK(d.pass);
    CHECK_THROWS_AS(global_identity_check(3, 2, 1000), DomainError);
}
