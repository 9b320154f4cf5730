#ifndef IRSFIELD_GEOMETRY_HPP
#define IRSFIELD_GEOMETRY_HPP

#include <numbers>

#include "irsfield/errors.hpp"

namespace irsfield {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;       // m/s
inline constexpr double kFreeSpaceImpedance = 376.730313668;  // ohm
inline constexpr double kFreeSpacePermeability = 1.25663706212e-6;  // H/m

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

struct PhysicalConstants {
    double c = kSpeedOfLight;
    double eta = kFreeSpaceImpedance;
    double mu = kFreeSpacePermeability;

    void validate() const {
        if (!(c > 0.0) || !(eta > 0.0) || !(mu > 0.0))
            throw DomainError("physical constants must be strictly positive");
    }
};

struct CartesianPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Position relative to the surface center. theta is the polar angle from +z,
// phi the azimuth in the xy-plane. The front half-space restriction
// (|phi| < pi/2, i.e. x > 0) is required by the conducting-plate illumination
// model; violating it is a construction error rather than a silent NaN.
class SphericalPoint {
public:
    SphericalPoint(double r, double theta, double phi) : r_(r), theta_(theta), phi_(phi) {
        if (!(r > 0.0))
            throw DomainError("radial distance must be positive");
        if (!(theta > 0.0 && theta < kPi))
            throw DomainError("polar angle must lie in (0, pi)");
        if (!(phi > -kPi / 2.0 && phi < kPi / 2.0))
            throw DomainError("azimuth must lie in (-pi/2, pi/2): point behind the surface");
    }

    double r() const { return r_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }

private:
    double r_, theta_, phi_;
};

struct SurfaceSpec {
    SurfaceSpec(double len_y, double len_z) : len_y(len_y), len_z(len_z) {
        if (!(len_y > 0.0) || !(len_z > 0.0))
            throw DomainError("surface dimensions must be positive");
    }
    double len_y;  // m
    double len_z;  // m
    double max_dimension() const { return len_y > len_z ? len_y : len_z; }
};

CartesianPoint to_cartesian(const SphericalPoint& p);
SphericalPoint to_spherical(const CartesianPoint& p);

double wavelength(double frequency_hz, double c = kSpeedOfLight);
double wavenumber(double frequency_hz, double c = kSpeedOfLight);

struct FresnelZone {
    double r_min;  // m, reactive boundary 0.62 sqrt(Lmax^3 / lambda)
    double r_max;  // m, Fraunhofer boundary 2 Lmax^2 / lambda
};

FresnelZone fresnel_zone(const SurfaceSpec& s, double lambda);

enum class FieldRegion { reactive_near, fresnel, far };

FieldRegion classify_region(double r, const SurfaceSpec& s, double lambda);

const char* to_string(FieldRegion region);

}  // namespace irsfield

#endif
