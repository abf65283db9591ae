#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padic_orbits/exact.hpp"
#include "padic_orbits/localquad.hpp"
#include "padic_orbits/orbit_class.hpp"

namespace padic_orbits {

enum class GroupKind { GLn, Sp2n, GSp2n, SLnLie, Sp2nLie };

/// Eigenvalue data of a semisimple element. For the symplectic kinds only
/// lambda_1..lambda_n are stored; the rest are nu/lambda_i (groups) or
/// -lambda_i (Lie algebra).
struct SpectralData {
    GroupKind group;
    std::vector<ExactQ> eigenvalues;
    std::optional<ExactQ> multiplier;  // GSp2n only
};

/// The full multiset of 2n (or n) eigenvalues.
std::vector<ExactQ> full_spectrum(const SpectralData& s);

/// Signed Weyl discriminant: prod over roots of (1 - alpha) on groups, of alpha on Lie algebras.
ExactQ weyl_disc(const SpectralData& s);

/// Lie algebra root values alpha(X) for alpha in a positive system (sl_n and sp_2n).
std::vector<ExactQ> positive_root_values(const SpectralData& s);

struct DeltaAbs {
    QHalfPower abs_D;              // |D(gamma)|_p = |tr^2 - 4 det|_p / |det|_p
    Gl2OrbitClass orbit_class;
    std::optional<LocalQuadType> local_type;  // absent when the discriminant is a rational square
    long long disc_class;          // squarefree class of tr^2 - 4 det
};

/// Classifies a GL_2 element at p from its characteristic polynomial.
/// d_gamma = (ord_p D - e) / 2 with e = ord_p of the local field discriminant
/// (0 split/unramified, 1 ramified odd p, 2 or 3 ramified at p = 2).
DeltaAbs delta_abs_gl2(const ExactQ& trace, const ExactQ& det, std::uint64_t p);

ExactQ steinberg_sl2(const ExactQ& t);
/// d/dt (t + 1/t)
ExactQ steinberg_sl2_derivative(const ExactQ& t);
/// det [[z/2, x], [y, -z/2]]
ExactQ chevalley_sl2_lie(const ExactQ& x, const ExactQ& y, const ExactQ& z);

/// Traces of the two fundamental representations on diag(t1, t2, 1/t1, 1/t2).
std::pair<ExactQ, ExactQ> steinberg_sp4(const ExactQ& t1, const ExactQ& t2);
ExactQ sp4_jacobian_closed_form(const ExactQ& t1, const ExactQ& t2);
ExactQ sp4_jacobian_from_partials(const ExactQ& t1, const ExactQ& t2);

struct JacobianCheck {
    ExactQ closed_form;
    ExactQ from_partials;
    bool determinant_matches;
    /// J = t1 * prod_{alpha < 0} (1 - alpha(gamma))
    bool negative_root_form_matches;
    /// 1/(t1 t2 J) = sign * rho(gamma) * prod_{alpha > 0} (1 - alpha(gamma))^{-1}
    bool relation_holds;
    int realized_sign;
};

JacobianCheck jacobian_identity_check(const ExactQ& t1, const ExactQ& t2);

struct Sl2JacobianCheck {
    ExactQ derivative;          // d/dt (t + 1/t)
    bool matches_inverse_root;  // derivative = 1 - alpha^{-1}(gamma_t), alpha(gamma_t) = t^2
    int realized_sign;          // derivative = sign * t^{-2} (1 - alpha(gamma_t))
    int measure_sign;           // (dt/t)/da = sign * rho(gamma_t) / (1 - alpha(gamma_t))
};

Sl2JacobianCheck sl2_jacobian_check(const ExactQ& t);

/// |D|^{1/2} |det|^{-(n+1)/4} for GSp_2n.
QHalfPower gsp_charpoly_factor(int n, const ExactQ& det_gamma, const QHalfPower& D_abs, std::uint64_t p);

std::string to_string(GroupKind g);

}  // namespace padic_orbits
