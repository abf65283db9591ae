#pragma once

#include <cstdint>

#include "padic_orbits/exact.hpp"
#include "padic_orbits/orbit_class.hpp"
#include "padic_orbits/weylsteinberg.hpp"

namespace padic_orbits {

/// Orbital integral of the unit spherical function f_0 = 1_{GL_2(O)}, with the
/// centralizer normalized by vol(T^c) = 1.
ExactQ orbital_canonical_f0(const Gl2OrbitClass& c);

/// Same integral for the fixed-point count with vol(Z\T) = 1: twice the
/// canonical value in the ramified case.
ExactQ kottwitz_fixed_points(const Gl2OrbitClass& c);

/// Orbital integral w.r.t. the geometric measure on the Steinberg fibre.
QHalfPower orbital_geometric_f0(const Gl2OrbitClass& c);

/// |D|^{1/2} / vol_{omega_T}(T^c).
QHalfPower conversion_factor(const Gl2OrbitClass& c);

/// |D(gamma)|^{1/2} for the class: q^{-d}, q^{-d} or q^{-d-1/2}.
QHalfPower class_delta_half(const Gl2OrbitClass& c);

/// L(1, sigma_G) vol_{omega_G}(G_0) for GL_2.
ExactQ dgbar_scale(std::uint64_t q);

/// vol_{omega_G}(GL_2(O)) = (1 - 1/q)^2 (1 + 1/q)
ExactQ gl2_volume(std::uint64_t q);

struct OrbitalReport {
    Gl2OrbitClass orbit_class;
    QHalfPower abs_D;
    ExactQ O_canonical;
    QHalfPower O_geometric;
    QHalfPower conversion;
    ExactQ dgbar_scale;
    bool factorization_holds;
};

OrbitalReport class_report(const Gl2OrbitClass& c);
OrbitalReport full_report(const ExactQ& trace, const ExactQ& det, std::uint64_t p);

}  // namespace padic_orbits
