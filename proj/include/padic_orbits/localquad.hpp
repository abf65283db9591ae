#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "padic_orbits/exact.hpp"

namespace padic_orbits {

enum class QuadKind { Split, Unramified, Ramified };

/// Ramified quadratic extensions of Q_2 come in two shapes: Q_2(sqrt u) with
/// u a non-square unit (d = 3 mod 4), and Q_2(sqrt 2u) (d = 2 mod 4).
enum class TwoAdicDetail { UnitNonSquare, TwiceUnit };

struct LocalQuadType {
    QuadKind kind;
    std::optional<TwoAdicDetail> p2_detail;

    bool operator==(const LocalQuadType&) const = default;
};

std::string to_string(QuadKind kind);
std::string to_string(TwoAdicDetail detail);
std::string to_string(const LocalQuadType& t);

/// Splitting type of Q_p(sqrt d) for squarefree d != 0, 1.
LocalQuadType classify_quad(long long d, std::uint64_t p);

/// Kronecker symbol (disc/p) for a fundamental discriminant.
int chi_at_p(long long disc, std::uint64_t p);

/// Local Artin factor L_p(1, sigma_T) of T = Res_{E/Q_p} G_m.
ExactQ artin_L_at_1(const LocalQuadType& t, std::uint64_t q);

struct TorusVolumeReport {
    LocalQuadType type;
    std::uint64_t p;
    QHalfPower vol_omega_T_Tc;  // volume of T^c for |omega_T|
    ExactQ L_factor_at_1;
    ExactQ vol_canonical_T0;    // L_factor_at_1^{-1}
    int index_Tc_over_T0;
    bool index_verified;        // false only at p = 2 ramified, where [T^c : T^0] is not established
};

TorusVolumeReport res_torus_volume(const LocalQuadType& t, std::uint64_t p);

/// vol(T_1(F)) for the norm-one torus, p odd and E/F a field.
QHalfPower norm1_volume(const LocalQuadType& t, std::uint64_t p);

/// [T_1^c : T_1^0] for the norm-one torus (2 when ramified).
int norm1_component_index(const LocalQuadType& t);

/// |2 sqrt(d)|_p: the factor relating |omega_T| to |dx dy| in the
/// coordinates x + sqrt(d) y.
QHalfPower norm_form_prefactor(long long d, std::uint64_t p);

/// Local class-number-formula factor
///   vol_{|omega_T|}(O_v^x) = (1 - 1/p) L_p(1, chi_K)^{-1} |Delta_K|_p^{1/2}
/// checked exactly for K = Q(sqrt d).
bool classnum_local_check(long long d, std::uint64_t p);

}  // namespace padic_orbits
