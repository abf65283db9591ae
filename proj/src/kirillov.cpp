#include "padic_orbits/kirillov.hpp"

#include <cmath>

#include "padic_orbits/exact.hpp"
#include "padic_orbits/weylsteinberg.hpp"

namespace padic_orbits {

namespace {

std::array<double, 3> cone_point(double t, double theta)
{
    return {t * (std::cos(theta) + 1), t * (std::cos(theta) - 1), t * std::sin(theta)};
}

std::array<double, 3> sphere_point(double phi, double theta)
{
    return {std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::cos(phi)};
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double omega(const std::array<double, 3>& at, const std::array<double, 3>& u, const std::array<double, 3>& v)
{
    const auto f = sphere_form(at[0], at[1], at[2]);
    return f[0] * (u[0] * v[1] - u[1] * v[0]) + f[1] * (u[0] * v[2] - u[2] * v[0]) + f[2] * (u[1] * v[2] - u[2] * v[1]);
}

}  // namespace

Point2Form cone_pullback_check(double t, double theta, double h)
{
    if (!(t >= 0.1)) throw DomainError("t must be at least 0.1");
    if (!(h >= 1e-8 && h <= 1e-3)) throw DomainError("step h must lie in [1e-8, 1e-3]");
    const auto base = cone_point(t, theta);
    if (base[0] < 1e-6) throw DomainError("chart degenerates: x < 1e-6");

    const auto tp = cone_point(t + h, theta), tm = cone_point(t - h, theta);
    const auto ap = cone_point(t, theta + h), am = cone_point(t, theta - h);
    const double x_t = (tp[0] - tm[0]) / (2 * h), z_t = (tp[2] - tm[2]) / (2 * h);
    const double x_th = (ap[0] - am[0]) / (2 * h), z_th = (ap[2] - am[2]) / (2 * h);
    return {base, 4 / base[0] * (x_t * z_th - x_th * z_t)};
}

std::array<double, 3> sphere_form(double x, double y, double z)
{
    if (std::fabs(x * x + y * y + z * z - 1) > 1e-10) throw DomainError("point is not on the unit sphere");
    return {-2 * z, 2 * y, -2 * x};
}

double sphere_frame_contraction(double x, double y, double z)
{
    sphere_form(x, y, z);
    const std::array<double, 3> n{x, y, z};
    // any vector not parallel to n, then Gram-Schmidt
    std::array<double, 3> a = std::fabs(x) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
    const double an = a[0] * x + a[1] * y + a[2] * z;
    std::array<double, 3> u{a[0] - an * x, a[1] - an * y, a[2] - an * z};
    const double norm = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    for (auto& c : u) c /= norm;
    const auto v = cross(n, u);
    return omega(n, u, v);
}

double sphere_density(double phi, double theta, double h)
{
    const auto p = sphere_point(phi, theta);
    const auto fp = sphere_point(phi + h, theta), fm = sphere_point(phi - h, theta);
    const auto tp = sphere_point(phi, theta + h), tm = sphere_point(phi, theta - h);
    std::array<double, 3> r_phi{}, r_theta{};
    for (int i = 0; i < 3; ++i) {
        r_phi[i] = (fp[i] - fm[i]) / (2 * h);
        r_theta[i] = (tp[i] - tm[i]) / (2 * h);
    }
    return omega(p, r_phi, r_theta);
}

ConversionCheck sl2_conversion_coefficient(double t)
{
    if (!(std::fabs(t) >= 1e-3)) throw DomainError("t must satisfy |t| >= 1e-3 (non-regular otherwise)");
    // t*h sits at x = y = 0, z = 2t; c = -z^2/4 - xy and dx^dy^(dz/2) = omega_geom ^ dc
    const double z = 2 * t, h = 1e-4 * std::fabs(z);
    auto c = [](double x, double y, double zz) { return -zz * zz / 4 - x * y; };
    const double dc_dz = (c(0, 0, z + h) - c(0, 0, z - h)) / (2 * h);

    ConversionCheck r{};
    r.t = t;
    r.geometric = 0.5 / dc_dz;
    r.kirillov = 2 * t;
    r.coefficient = r.geometric / r.kirillov;
    const ExactQ tq(t);
    r.D = weyl_disc({GroupKind::SLnLie, {tq, -tq}, std::nullopt}).get_d();
    r.product = r.coefficient * (-r.D);
    return r;
}

}  // namespace padic_orbits
