#pragma once

#include <cstdint>
#include <string>

namespace padic_orbits {

enum class Gl2Kind { Hyperbolic, UnramElliptic, RamElliptic };

/// Regular semisimple GL_2 class at p: its torus type and depth d_gamma.
struct Gl2OrbitClass {
    Gl2Kind kind;
    int d;
    std::uint64_t q;

    bool operator==(const Gl2OrbitClass&) const = default;
};

inline std::string to_string(Gl2Kind kind)
{
    switch (kind) {
    case Gl2Kind::Hyperbolic: return "Hyperbolic";
    case Gl2Kind::UnramElliptic: return "UnramElliptic";
    case Gl2Kind::RamElliptic: return "RamElliptic";
    }
    return "?";
}

inline std::string to_string(const Gl2OrbitClass& c)
{
    return to_string(c.kind) + " d=" + std::to_string(c.d) + " q=" + std::to_string(c.q);
}

}  // namespace padic_orbits
