#include "padic_orbits/gl2local.hpp"

namespace padic_orbits {

namespace {

void check_class(const Gl2OrbitClass& c)
{
    if (c.d < 0) throw DomainError("d must be nonnegative");
    if (!is_prime(c.q)) throw DomainError("q = " + std::to_string(c.q) + " is not prime");
}

ExactQ q_to(std::uint64_t q, int e) { return qpow(q, e); }

/// vol_{omega_T}(T^c) in the formal shape valid for odd q, used for every q.
QHalfPower formal_torus_volume(Gl2Kind kind, std::uint64_t q)
{
    const ExactQ base = 1 - q_to(q, -1);
    switch (kind) {
    case Gl2Kind::Hyperbolic: return QHalfPower::rational(base * base, q);
    case Gl2Kind::UnramElliptic: return QHalfPower::rational(base * (1 + q_to(q, -1)), q);
    case Gl2Kind::RamElliptic: return QHalfPower(base, -1, q);
    }
    return {};
}

}  // namespace

ExactQ orbital_canonical_f0(const Gl2OrbitClass& c)
{
    check_class(c);
    const ExactQ qd = q_to(c.q, c.d);
    const ExactQ q(Integer(std::to_string(c.q)));
    switch (c.kind) {
    case Gl2Kind::Hyperbolic: return qd;
    case Gl2Kind::UnramElliptic: return 1 + (q + 1) * (qd - 1) / (q - 1);
    case Gl2Kind::RamElliptic: return (qd * q - 1) / (q - 1);
    }
    return ExactQ(0);
}

ExactQ kottwitz_fixed_points(const Gl2OrbitClass& c)
{
    const ExactQ o = orbital_canonical_f0(c);
    return c.kind == Gl2Kind::RamElliptic ? 2 * o : o;
}

QHalfPower orbital_geometric_f0(const Gl2OrbitClass& c)
{
    check_class(c);
    const ExactQ base = 1 - q_to(c.q, -1);
    const ExactQ lead = 1 / (base * base);
    const ExactQ q(Integer(std::to_string(c.q)));
    ExactQ shape = 1;
    switch (c.kind) {
    case Gl2Kind::Hyperbolic: break;
    case Gl2Kind::UnramElliptic: shape = 1 - 2 / (q + 1) * q_to(c.q, -c.d); break;
    case Gl2Kind::RamElliptic: shape = 1 - q_to(c.q, -(c.d + 1)); break;
    }
    return QHalfPower::rational(lead * shape, c.q);
}

QHalfPower class_delta_half(const Gl2OrbitClass& c)
{
    check_class(c);
    return QHalfPower::power(c.q, c.kind == Gl2Kind::RamElliptic ? -2 * c.d - 1 : -2 * c.d);
}

QHalfPower conversion_factor(const Gl2OrbitClass& c)
{
    return class_delta_half(c) / formal_torus_volume(c.kind, c.q);
}

ExactQ gl2_volume(std::uint64_t q)
{
    const ExactQ base = 1 - q_to(q, -1);
    return base * base * (1 + q_to(q, -1));
}

ExactQ dgbar_scale(std::uint64_t q)
{
    if (!is_prime(q)) throw DomainError("q = " + std::to_string(q) + " is not prime");
    const ExactQ L_G = 1 / (1 - q_to(q, -1));
    return L_G * gl2_volume(q);
}

OrbitalReport class_report(const Gl2OrbitClass& c)
{
    OrbitalReport r{c,
                    class_delta_half(c).pow(2),
                    orbital_canonical_f0(c),
                    orbital_geometric_f0(c),
                    conversion_factor(c),
                    dgbar_scale(c.q),
                    false};
    r.factorization_holds = r.O_geometric == r.conversion * QHalfPower::rational(r.O_canonical, c.q);
    return r;
}

OrbitalReport full_report(const ExactQ& trace, const ExactQ& det, std::uint64_t p)
{
    const DeltaAbs delta = delta_abs_gl2(trace, det, p);
    OrbitalReport r = class_report(delta.orbit_class);
    r.abs_D = delta.abs_D;
    return r;
}

}  // namespace padic_orbits
