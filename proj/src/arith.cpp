#include "padic_orbits/arith.hpp"

#include <cmath>
#include <cstdlib>

namespace padic_orbits {

std::vector<std::pair<long long, int>> factorize(long long n)
{
    std::vector<std::pair<long long, int>> factors;
    unsigned long long m = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
    for (unsigned long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) factors.emplace_back(static_cast<long long>(p), e);
    }
    if (m > 1) factors.emplace_back(static_cast<long long>(m), 1);
    return factors;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

bool is_squarefree(long long n)
{
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return false;
    }
    return true;
}

long long squarefree_part(long long n)
{
    if (n == 0) throw DomainError("squarefree part of zero");
    long long s = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e % 2) s *= p;
    }
    return s;
}

long long squarefree_class(const ExactQ& x)
{
    if (x == 0) throw DomainError("squarefree class of zero");
    Integer prod = x.get_num() * x.get_den();
    if (!prod.fits_slong_p()) throw DomainError("value too large for squarefree class: " + to_string(x));
    return squarefree_part(prod.get_si());
}

int kronecker(long long a, long long n)
{
    if (n < 0) throw DomainError("kronecker symbol needs n >= 0");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long r = mod_floor(a, 8);
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol for odd n.
    long long x = mod_floor(a, n);
    long long m = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            long long r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

bool is_fundamental_discriminant(long long disc)
{
    if (disc == 0 || disc == 1) return false;
    long long r = mod_floor(disc, 4);
    if (r == 1) return is_squarefree(disc);
    if (r == 0) {
        long long m = disc / 4;
        long long rm = mod_floor(m, 4);
        return (rm == 2 || rm == 3) && is_squarefree(m);
    }
    return false;
}

long long field_discriminant(long long d)
{
    if (d == 0 || d == 1 || !is_squarefree(d)) throw DomainError("d = " + std::to_string(d) + " is not a squarefree integer != 0, 1");
    return mod_floor(d, 4) == 1 ? d : 4 * d;
}

long long isqrt(long long n)
{
    if (n < 0) throw DomainError("isqrt of negative number");
    auto r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long long mod_floor(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace padic_orbits
