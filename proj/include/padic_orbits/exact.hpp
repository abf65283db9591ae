#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace padic_orbits {

using Integer = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after every operation.
using ExactQ = mpq_class;

/// Raised for every mathematical precondition violation (as opposed to usage errors).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(std::uint64_t n);

struct PAdicContext {
    std::uint64_t p;
    std::uint64_t q;  // residue cardinality; always p in this library

    static PAdicContext for_prime(std::uint64_t p);
};

int ord_p(const Integer& n, std::uint64_t p);
int ord_p(const ExactQ& x, std::uint64_t p);

ExactQ make_q(long long num, long long den = 1);
ExactQ parse_q(const std::string& text);
std::string to_string(const ExactQ& x);
std::string to_string(const Integer& n);

/// q^e for a possibly negative exponent.
ExactQ qpow(std::uint64_t q, int e);

/**
 * coeff * q^(half_exp / 2).
 *
 * Every volume and conversion factor in the library lives in Q or sqrt(q)*Q,
 * so a half-integral exponent is all the irrationality we need. Values are
 * kept canonical: powers of q are pulled out of coeff into half_exp, and zero
 * is stored with half_exp = 0. For prime q the representation is unique.
 */
class QHalfPower {
public:
    QHalfPower() : coeff_(0), half_exp_(0), q_(2) {}
    QHalfPower(ExactQ coeff, int half_exp, std::uint64_t q);

    static QHalfPower rational(const ExactQ& value, std::uint64_t q) { return {value, 0, q}; }
    static QHalfPower power(std::uint64_t q, int half_exp) { return {ExactQ(1), half_exp, q}; }

    const ExactQ& coeff() const { return coeff_; }
    int half_exp() const { return half_exp_; }
    std::uint64_t q() const { return q_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return half_exp_ % 2 == 0; }
    /// Exact rational value; throws unless half_exp is even.
    ExactQ rational_value() const;
    double to_double() const;

    QHalfPower operator*(const QHalfPower& other) const;
    QHalfPower operator/(const QHalfPower& other) const;
    /// Only defined for matching exponent parity.
    QHalfPower operator+(const QHalfPower& other) const;
    QHalfPower operator-(const QHalfPower& other) const;
    QHalfPower operator-() const { return {-coeff_, half_exp_, q_}; }

    QHalfPower pow(int e) const;
    /// Exact square root when coeff is a rational square and half_exp is even.
    QHalfPower sqrt() const;

    bool operator==(const QHalfPower& other) const;
    bool operator!=(const QHalfPower& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    void check_same_q(const QHalfPower& other) const;
    void normalize();

    ExactQ coeff_;
    int half_exp_;
    std::uint64_t q_;
};

/// |x|_p = p^(-ord_p x), with |0| = 0.
QHalfPower abs_p(const ExactQ& x, std::uint64_t p);

}  // namespace padic_orbits
