#include "padic_orbits/exact.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace padic_orbits {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

bool is_perfect_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
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

PAdicContext PAdicContext::for_prime(std::uint64_t p)
{
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    return {p, p};
}

int ord_p(const Integer& n, std::uint64_t p)
{
    if (n == 0) throw DomainError("valuation of zero undefined");
    Integer rest;
    Integer prime(static_cast<unsigned long>(p));
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

int ord_p(const ExactQ& x, std::uint64_t p)
{
    if (x == 0) throw DomainError("valuation of zero undefined");
    return ord_p(Integer(x.get_num()), p) - ord_p(Integer(x.get_den()), p);
}

ExactQ make_q(long long num, long long den)
{
    if (den == 0) throw DomainError("zero denominator");
    ExactQ r(Integer(std::to_string(num)), Integer(std::to_string(den)));
    r.canonicalize();
    return r;
}

ExactQ parse_q(const std::string& text)
{
    ExactQ r;
    if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const ExactQ& x) { return x.get_str(10); }
std::string to_string(const Integer& n) { return n.get_str(10); }

ExactQ qpow(std::uint64_t q, int e)
{
    Integer base(static_cast<unsigned long>(q));
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    return e >= 0 ? ExactQ(pw) : ExactQ(Integer(1), pw);
}

QHalfPower::QHalfPower(ExactQ coeff, int half_exp, std::uint64_t q)
    : coeff_(std::move(coeff)), half_exp_(half_exp), q_(q)
{
    if (q < 2) throw DomainError("QHalfPower needs q >= 2");
    coeff_.canonicalize();
    normalize();
}

void QHalfPower::normalize()
{
    if (coeff_ == 0) {
        half_exp_ = 0;
        return;
    }
    Integer qz(static_cast<unsigned long>(q_));
    Integer num = coeff_.get_num();
    Integer den = coeff_.get_den();
    while (mpz_divisible_p(num.get_mpz_t(), qz.get_mpz_t())) {
        num /= qz;
        half_exp_ += 2;
    }
    while (mpz_divisible_p(den.get_mpz_t(), qz.get_mpz_t())) {
        den /= qz;
        half_exp_ -= 2;
    }
    coeff_ = ExactQ(num, den);
    coeff_.canonicalize();
}

void QHalfPower::check_same_q(const QHalfPower& other) const
{
    if (is_zero() || other.is_zero()) return;
    if (q_ != other.q_) throw DomainError("QHalfPower values over different q");
}

ExactQ QHalfPower::rational_value() const
{
    if (!is_rational()) throw DomainError("value " + to_string() + " is not rational");
    return coeff_ * qpow(q_, half_exp_ / 2);
}

double QHalfPower::to_double() const
{
    return coeff_.get_d() * std::pow(static_cast<double>(q_), half_exp_ / 2.0);
}

QHalfPower QHalfPower::operator*(const QHalfPower& other) const
{
    check_same_q(other);
    return {coeff_ * other.coeff_, half_exp_ + other.half_exp_, is_zero() ? other.q_ : q_};
}

QHalfPower QHalfPower::operator/(const QHalfPower& other) const
{
    check_same_q(other);
    if (other.is_zero()) throw DomainError("division by zero");
    return {coeff_ / other.coeff_, half_exp_ - other.half_exp_, other.q_};
}

QHalfPower QHalfPower::operator+(const QHalfPower& other) const
{
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    check_same_q(other);
    if ((half_exp_ - other.half_exp_) % 2 != 0) throw DomainError("incommensurable half-powers");
    int low = std::min(half_exp_, other.half_exp_);
    ExactQ sum = coeff_ * qpow(q_, (half_exp_ - low) / 2) + other.coeff_ * qpow(q_, (other.half_exp_ - low) / 2);
    return {sum, low, q_};
}

QHalfPower QHalfPower::operator-(const QHalfPower& other) const { return *this + (-other); }

QHalfPower QHalfPower::pow(int e) const
{
    if (e < 0 && is_zero()) throw DomainError("division by zero");
    Integer num, den;
    const unsigned long ue = static_cast<unsigned long>(std::abs(e));
    mpz_pow_ui(num.get_mpz_t(), coeff_.get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), coeff_.get_den_mpz_t(), ue);
    ExactQ c = e >= 0 ? ExactQ(num, den) : ExactQ(den, num);
    return {c, half_exp_ * e, q_};
}

QHalfPower QHalfPower::sqrt() const
{
    if (is_zero()) return *this;
    if (coeff_ < 0 || half_exp_ % 2 != 0 || !is_perfect_square(coeff_.get_num()) ||
        !is_perfect_square(coeff_.get_den())) {
        throw DomainError("square root of " + to_string() + " is outside the Q(sqrt q) scalar algebra");
    }
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), coeff_.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), coeff_.get_den_mpz_t());
    return {ExactQ(num, den), half_exp_ / 2, q_};
}

bool QHalfPower::operator==(const QHalfPower& other) const
{
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    return q_ == other.q_ && half_exp_ == other.half_exp_ && coeff_ == other.coeff_;
}

std::string QHalfPower::to_string() const
{
    std::ostringstream out;
    out << coeff_.get_str();
    if (half_exp_ % 2 != 0) out << " * " << q_ << "^(" << half_exp_ << "/2)";
    else if (half_exp_ != 0) out << " * " << q_ << "^" << half_exp_ / 2;
    return out.str();
}

QHalfPower abs_p(const ExactQ& x, std::uint64_t p)
{
    if (x == 0) return QHalfPower(ExactQ(0), 0, p);
    return QHalfPower::power(p, -2 * ord_p(x, p));
}

}  // namespace padic_orbits
