#include "padic_orbits/localquad.hpp"

#include "padic_orbits/arith.hpp"

namespace padic_orbits {

namespace {

void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

ExactQ one_minus_inv(std::uint64_t q) { return ExactQ(1) - qpow(q, -1); }

}  // namespace

std::string to_string(QuadKind kind)
{
    switch (kind) {
    case QuadKind::Split: return "Split";
    case QuadKind::Unramified: return "Unramified";
    case QuadKind::Ramified: return "Ramified";
    }
    return "?";
}

std::string to_string(TwoAdicDetail detail)
{
    return detail == TwoAdicDetail::UnitNonSquare ? "UnitNonSquare" : "TwiceUnit";
}

std::string to_string(const LocalQuadType& t)
{
    std::string s = to_string(t.kind);
    if (t.p2_detail) s += "(" + to_string(*t.p2_detail) + ")";
    return s;
}

LocalQuadType classify_quad(long long d, std::uint64_t p)
{
    require_prime(p);
    if (d == 0 || d == 1) throw DomainError("d must be different from 0 and 1");
    if (!is_squarefree(d)) throw DomainError("d = " + std::to_string(d) + " is not squarefree");

    if (p == 2) {
        switch (mod_floor(d, 8)) {
        case 1: return {QuadKind::Split, std::nullopt};
        case 5: return {QuadKind::Unramified, std::nullopt};
        case 3:
        case 7: return {QuadKind::Ramified, TwoAdicDetail::UnitNonSquare};
        default: return {QuadKind::Ramified, TwoAdicDetail::TwiceUnit};
        }
    }
    const auto sp = static_cast<long long>(p);
    if (d % sp == 0) return {QuadKind::Ramified, std::nullopt};
    return {kronecker(d, sp) == 1 ? QuadKind::Split : QuadKind::Unramified, std::nullopt};
}

int chi_at_p(long long disc, std::uint64_t p)
{
    require_prime(p);
    if (!is_fundamental_discriminant(disc)) throw DomainError(std::to_string(disc) + " is not a fundamental discriminant");
    return kronecker(disc, static_cast<long long>(p));
}

ExactQ artin_L_at_1(const LocalQuadType& t, std::uint64_t q)
{
    const ExactQ inv = qpow(q, -1);
    switch (t.kind) {
    case QuadKind::Split: return 1 / ((1 - inv) * (1 - inv));
    case QuadKind::Unramified: return 1 / (1 - inv * inv);
    // inertia invariants of X^*(T) have rank 1 and Frobenius acts trivially
    case QuadKind::Ramified: return 1 / (1 - inv);
    }
    return ExactQ(0);
}

TorusVolumeReport res_torus_volume(const LocalQuadType& t, std::uint64_t p)
{
    require_prime(p);
    const ExactQ base = one_minus_inv(p);
    TorusVolumeReport r{t, p, {}, artin_L_at_1(t, p), {}, 1, true};
    r.vol_canonical_T0 = 1 / r.L_factor_at_1;

    switch (t.kind) {
    case QuadKind::Split:
        r.vol_omega_T_Tc = QHalfPower::rational(base * base, p);
        break;
    case QuadKind::Unramified:
        r.vol_omega_T_Tc = QHalfPower::rational(base * (1 + qpow(p, -1)), p);
        break;
    case QuadKind::Ramified:
        if (p != 2) {
            r.vol_omega_T_Tc = QHalfPower(base, -1, p);
            break;
        }
        if (!t.p2_detail) throw DomainError("ramified type at p = 2 needs its 2-adic detail");
        r.index_verified = false;
        // |2 sqrt(eps)|_2 * vol{|x^2 - eps y^2| = 1}, and the unit set has volume 1/2 in both shapes
        r.vol_omega_T_Tc = *t.p2_detail == TwoAdicDetail::TwiceUnit
            ? QHalfPower(ExactQ(1, 2) * base, -1, p)
            : QHalfPower::rational(ExactQ(1, 2) * base, p);
        break;
    }
    return r;
}

QHalfPower norm1_volume(const LocalQuadType& t, std::uint64_t p)
{
    require_prime(p);
    if (p == 2) throw DomainError("norm-one volumes at p = 2 are not available in closed form; use point-count");
    switch (t.kind) {
    case QuadKind::Unramified: return QHalfPower::rational(1 + qpow(p, -1), p);
    case QuadKind::Ramified: return QHalfPower(ExactQ(2), -1, p);
    case QuadKind::Split: break;
    }
    throw DomainError("norm-one torus of a split algebra is not anisotropic");
}

int norm1_component_index(const LocalQuadType& t) { return t.kind == QuadKind::Ramified ? 2 : 1; }

QHalfPower norm_form_prefactor(long long d, std::uint64_t p)
{
    return abs_p(ExactQ(Integer(std::to_string(4 * d))), p).sqrt();
}

bool classnum_local_check(long long d, std::uint64_t p)
{
    const long long disc = field_discriminant(d);
    const QHalfPower lhs = res_torus_volume(classify_quad(d, p), p).vol_omega_T_Tc;

    const int chi = chi_at_p(disc, p);
    const ExactQ local_L_inverse = 1 - ExactQ(chi) * qpow(p, -1);
    const QHalfPower rhs = QHalfPower::rational(one_minus_inv(p) * local_L_inverse, p) *
                           abs_p(ExactQ(Integer(std::to_string(disc))), p).sqrt();
    return lhs == rhs;
}

}  // namespace padic_orbits
