#pragma once

#include <vector>

#include "padic_orbits/exact.hpp"

namespace padic_orbits {

/// Integer power series truncated after degree N.
class PowerSeriesZ {
public:
    explicit PowerSeriesZ(std::size_t N) : c_(N + 1, 0) {}
    PowerSeriesZ(std::vector<Integer> coeffs, std::size_t N);

    std::size_t order() const { return c_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    Integer& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Integer>& coefficients() const { return c_; }

    PowerSeriesZ operator*(const PowerSeriesZ& other) const;

private:
    std::vector<Integer> c_;
};

/// U_j(t, n) = (rho^{j+1} - rhobar^{j+1}) / (rho - rhobar), rho, rhobar roots of X^2 - tX + n.
Integer gegenbauer_like(long long t, long long n, int j);

struct TraceTerms {
    int k;
    long long n;
    // each term scaled by n^{1-k/2}
    ExactQ identity_term;
    ExactQ elliptic_term;
    ExactQ hyperbolic_term;
    ExactQ rhs_total;
    Integer trace;  // Tr T_n on S_k(SL_2(Z))
};

TraceTerms trace_formula(int k, long long n);

/// dim S_k(SL_2(Z)) for even k >= 4 by the classical formula.
int cusp_dimension(int k);

/// tau(1..N) from q prod (1 - q^m)^24; element i holds tau(i + 1).
std::vector<Integer> eta_tau(std::size_t N);

/// a(1..N) of the normalized eigenform Delta E_4^a E_6^b of weight k; element i holds a(i + 1).
std::vector<Integer> eigenform_coeffs(int k, std::size_t N);

/// 1 + 240 sum sigma_3(m) q^m, 1 - 504 sum sigma_5(m) q^m
PowerSeriesZ eisenstein_E4(std::size_t N);
PowerSeriesZ eisenstein_E6(std::size_t N);

}  // namespace padic_orbits
