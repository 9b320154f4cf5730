#include "irsfield/geometry.hpp"

#include <cmath>

namespace irsfield {

CartesianPoint to_cartesian(const SphericalPoint& p) {
    const double sin_theta = std::sin(p.theta());
    return {p.r() * std::cos(p.phi()) * sin_theta,
            p.r() * std::sin(p.phi()) * sin_theta,
            p.r() * std::cos(p.theta())};
}

SphericalPoint to_spherical(const CartesianPoint& p) {
    const double r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (!(r > 0.0))
        throw DomainError("cannot convert the origin to spherical coordinates");
    return {r, std::acos(p.z / r), std::atan2(p.y, p.x)};
}

double wavelength(double frequency_hz, double c) {
    if (!(frequency_hz > 0.0))
        throw DomainError("frequency must be positive");
    return c / frequency_hz;
}

double wavenumber(double frequency_hz, double c) {
    return 2.0 * kPi / wavelength(frequency_hz, c);
}

FresnelZone fresnel_zone(const SurfaceSpec& s, double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("wavelength must be positive");
    const double l_max = s.max_dimension();
    return {0.62 * std::sqrt(l_max * l_max * l_max / lambda),
            2.0 * l_max * l_max / lambda};
}

FieldRegion classify_region(double r, const SurfaceSpec& s, double lambda) {
    if (!(r > 0.0))
        throw DomainError("distance must be positive");
    const FresnelZone zone = fresnel_zone(s, lambda);
    if (r <= zone.r_min) return FieldRegion::reactive_near;
    if (r <= zone.r_max) return FieldRegion::fresnel;  // upper bound inclusive
    return FieldRegion::far;
}

const char* to_string(FieldRegion region) {
    switch (region) {
        case FieldRegion::reactive_near: return "reactive-near";
        case FieldRegion::fresnel: return "fresnel";
        case FieldRegion::far: return "far";
    }
    return "?";
}

}  // namespace irsfield
