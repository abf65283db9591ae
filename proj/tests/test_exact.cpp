#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "padic_orbits/arith.hpp"
#include "padic_orbits/exact.hpp"

using namespace padic_orbits;

TEST_CASE("ord_p examples")
{
    CHECK(ord_p(make_q(9), 3) == 2);
    CHECK(ord_p(make_q(3, 4), 2) == -2);
    CHECK(ord_p(make_q(1), 5) == 0);
    CHECK_THROWS_WITH_AS(ord_p(make_q(0), 5), "valuation of zero undefined", DomainError);
}

TEST_CASE("abs_p examples")
{
    const QHalfPower a = abs_p(make_q(9), 3);
    CHECK(a.coeff() == 1);
    CHECK(a.half_exp() == -4);
    CHECK(abs_p(make_q(0), 7).is_zero());
    CHECK(abs_p(make_q(1, 5), 5).rational_value() == 5);
}

TEST_CASE("QHalfPower arithmetic examples")
{
    const QHalfPower a = QHalfPower::rational(1 - make_q(1, 3), 3), b = QHalfPower::rational(1 + make_q(1, 3), 3);
    CHECK((a * b).rational_value() == make_q(8, 9));
    CHECK((QHalfPower(make_q(2), -1, 5) * QHalfPower(make_q(1), -1, 5)).rational_value() == make_q(2, 5));
    CHECK_THROWS_AS(QHalfPower(make_q(1, 2), -1, 2) + QHalfPower(make_q(1), 0, 2), DomainError);
    CHECK_THROWS_AS(QHalfPower::rational(make_q(1), 3) / QHalfPower::rational(make_q(0), 3), DomainError);
}

TEST_CASE("QHalfPower canonical form")
{
    // 18 * 3^(1/2) == 2 * 3^(5/2)
    CHECK(QHalfPower(make_q(18), 1, 3) == QHalfPower(make_q(2), 5, 3));
    CHECK(QHalfPower(make_q(0), 7, 3).half_exp() == 0);
    CHECK(QHalfPower(make_q(1), 1, 3) != QHalfPower(make_q(1), 0, 3));
    CHECK(QHalfPower(make_q(4), 2, 3).sqrt() == QHalfPower(make_q(2), 1, 3));
    CHECK_THROWS_AS(QHalfPower(make_q(1), 1, 3).sqrt(), DomainError);
    CHECK_THROWS_AS(QHalfPower(make_q(2), 0, 3).sqrt(), DomainError);
}

TEST_CASE("parse_q and to_string")
{
    CHECK(parse_q("6/4") == make_q(3, 2));
    CHECK(to_string(parse_q("-10/4")) == "-5/2");
    CHECK_THROWS(parse_q("1/0"));
    CHECK_THROWS(parse_q("abc"));
    CHECK(make_q(2, 2) == 1);
}

TEST_CASE("valuation properties on random rationals")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (int i = 0; i < 200; ++i) {
            ExactQ x = make_q(num(rng), den(rng)), y = make_q(num(rng), den(rng));
            if (x == 0 || y == 0) continue;
            CHECK(ord_p(ExactQ(x * y), p) == ord_p(x, p) + ord_p(y, p));
            if (x + y == 0) continue;
            const int vs = ord_p(ExactQ(x + y), p), vx = ord_p(x, p), vy = ord_p(y, p);
            CHECK(vs >= std::min(vx, vy));
            if (vx != vy) CHECK(vs == std::min(vx, vy));
        }
    }
}

TEST_CASE("product formula on integers")
{
    for (long long n = 2; n <= 1000000; n += 9973) {
        double prod = static_cast<double>(n);
        for (const auto& [p, e] : factorize(n)) {
            CHECK(ord_p(Integer(static_cast<long>(n)), static_cast<std::uint64_t>(p)) == oracle::valuation(n, p));
            prod *= abs_p(make_q(n), static_cast<std::uint64_t>(p)).to_double();
        }
        CHECK(prod == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("QHalfPower agrees with floating point")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    std::uniform_int_distribution<int> ex(-20, 20);
    for (std::uint64_t q : {2, 3, 5}) {
        for (int i = 0; i < 300; ++i) {
            ExactQ ca = make_q(num(rng), den(rng)), cb = make_q(num(rng), den(rng));
            if (ca == 0 || cb == 0) continue;
            const int ea = ex(rng), eb = ex(rng);
            const QHalfPower a(ca, ea, q), b(cb, eb, q);
            const double da = ca.get_d() * std::pow(double(q), ea / 2.0), db = cb.get_d() * std::pow(double(q), eb / 2.0);
            CHECK((a * b).to_double() == doctest::Approx(da * db).epsilon(1e-12));
            CHECK((a / b).to_double() == doctest::Approx(da / db).epsilon(1e-12));
            if ((ea - eb) % 2 == 0 && std::fabs(da + db) > 1e-9 * std::fabs(da))
                CHECK((a + b).to_double() == doctest::Approx(da + db).epsilon(1e-12));
        }
    }
}

TEST_CASE("is_prime and PAdicContext")
{
    CHECK(is_prime(2));
    CHECK(!is_prime(1));
    CHECK(is_prime(1000000007ULL));
    CHECK(!is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(PAdicContext::for_prime(7).q == 7);
    CHECK_THROWS_AS(PAdicContext::for_prime(9), DomainError);
}

TEST_CASE("kronecker against Euler's criterion")
{
    for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29})
        for (long long a = -60; a <= 60; ++a) CHECK(kronecker(a, p) == oracle::legendre(a, p));
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(-23, 2) == 1);
}
