#pragma once

#include <cstdint>
#include <vector>

#include "padic_orbits/exact.hpp"
#include "padic_orbits/orbit_class.hpp"

namespace padic_orbits {

struct QuadFieldData {
    long long d;     // squarefree, negative
    long long disc;  // Delta_K
    int w;           // number of roots of unity
    long long h;     // class number
};

struct ReducedForm {
    long long a, b, c;

    bool operator==(const ReducedForm&) const = default;
};

QuadFieldData quad_field(long long d);

/// Primitive reduced forms of discriminant disc < 0, disc = 0, 1 mod 4.
std::vector<ReducedForm> reduced_forms(long long disc);
long long class_number(long long disc);

/// Independent class number: Dirichlet's finite sum for fundamental
/// discriminants, the conductor formula h(f^2 D_K) otherwise.
long long class_number_analytic(long long disc);

/// Half the unit count of the order: 3 at -3, 2 at -4, 1 otherwise.
int unit_weight(long long disc);
ExactQ hurwitz_hw(long long disc);

struct L1Estimate {
    long long disc;
    long long terms;  // M, a multiple of |disc|
    double value;
    double err_bound;
};

/// sum_{n <= M} chi(n)/n over complete periods, with M the largest multiple of
/// |disc| not exceeding N. The tail is bounded by B/(M+1), B the largest
/// partial character sum over one period.
L1Estimate dirichlet_L1(long long disc, long long N);

struct CnfResidual {
    QuadFieldData field;
    L1Estimate L;
    double closed_form;  // 2 pi h / (w sqrt|Delta|)
    double residual;
    bool within_bound;
};

CnfResidual cnf_residual(long long d, long long N);

/// h_K / w_K
ExactQ finite_adelic_volume(const QuadFieldData& K);

struct LocalFactor {
    std::uint64_t p;
    Gl2OrbitClass orbit_class;
    ExactQ O_canonical;
    QHalfPower abs_D;        // |D(gamma)|_p
    QHalfPower abs_disc_K;   // |Delta_K|_p
    ExactQ L_p;              // L_p(1, chi_K)
};

struct GlobalCheck {
    long long trace, det, disc;
    QuadFieldData field;
    long long conductor;  // f with disc = f^2 Delta_K
    std::vector<LocalFactor> local;
    std::vector<std::pair<std::uint64_t, ExactQ>> off_S;  // O_can at primes outside S
    ExactQ lhs;           // (h/w) prod O_can
    double rhs;
    L1Estimate L;
    double relative_residual;
    double relative_bound;
    bool off_S_trivial;
    bool pass;
};

GlobalCheck global_identity_check(long long trace, long long det, long long N);

}  // namespace padic_orbits
