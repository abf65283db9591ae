#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "padic_orbits/exact.hpp"

namespace padic_orbits {

// Small-integer number theory shared by the local and global modules.
// Discriminants and d-values in this library always fit in 64 bits.

std::vector<std::pair<long long, int>> factorize(long long n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

bool is_squarefree(long long n);
/// Sign-preserving squarefree kernel: n = s * m^2 with s squarefree.
long long squarefree_part(long long n);
/// Squarefree integer s with x = s * (rational square); x != 0.
long long squarefree_class(const ExactQ& x);

/// Kronecker symbol (a/n) for any integer a and n >= 0.
int kronecker(long long a, long long n);

bool is_fundamental_discriminant(long long disc);
/// Discriminant of Q(sqrt d) for squarefree d != 0, 1.
long long field_discriminant(long long d);

long long isqrt(long long n);
long long mod_floor(long long a, long long m);

}  // namespace padic_orbits
