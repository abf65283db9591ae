#pragma once

#include <array>

namespace padic_orbits {

// Floating-point checks of Kirillov's form on two real coadjoint orbits.

struct Point2Form {
    std::array<double, 3> base;
    double value;
};

/// Pullback of (4/x) dx ^ dz under rho(t, theta) = (t(cos theta + 1), t(cos theta - 1), t sin theta),
/// as the coefficient of dt ^ dtheta, from central differences with step h.
Point2Form cone_pullback_check(double t, double theta, double h);

/// Coefficients (f1, f2, f3) of omega = f1 dX*^dH* + f2 dX*^dY* + f3 dH*^dY* at a point of the unit sphere.
std::array<double, 3> sphere_form(double x, double y, double z);

/// omega evaluated on an oriented orthonormal tangent frame (u, v, n) at the point n.
double sphere_frame_contraction(double x, double y, double z);

/// Coefficient of dphi ^ dtheta of omega in spherical coordinates
/// (x, y, z) = (sin phi cos theta, sin phi sin theta, cos phi), by central differences.
double sphere_density(double phi, double theta, double h = 1e-6);

struct ConversionCheck {
    double t;
    double geometric;    // coefficient of the geometric form at t*h
    double kirillov;     // coefficient of Kirillov's form at t*h
    double coefficient;  // geometric / kirillov
    double D;            // Weyl discriminant of t*h
    double product;      // coefficient * (-D)
};

/// Conversion coefficient between Kirillov's form and the geometric form on the orbit of t*h in sl_2(R).
ConversionCheck sl2_conversion_coefficient(double t);

}  // namespace padic_orbits
