#ifndef IRSFIELD_INCIDENT_HPP
#define IRSFIELD_INCIDENT_HPP

#include <complex>

#include "irsfield/geometry.hpp"
#include "irsfield/specfun.hpp"

namespace irsfield {

struct TransmitSource {
    TransmitSource(const SphericalPoint& position, double power_w, double gain)
        : position(position), power_w(power_w), gain(gain) {
        if (!(power_w > 0.0))
            throw DomainError("transmit power must be positive");
        if (!(gain > 0.0))
            throw DomainError("transmit gain must be positive");
    }

    // Source whose incident field magnitude at the surface center equals
    // field_v_per_m (useful for normalized sweeps): unit gain, power chosen
    // so that sqrt(eta Pt Gt / (4 pi r^2)) matches.
    static TransmitSource for_field_magnitude(const SphericalPoint& position,
                                              double field_v_per_m, double eta);

    SphericalPoint position;
    double power_w;
    double gain;  // linear
};

// Quadratic reflection phase profile phi(y,z) = k (C1 y^2 + C2 y + C3 z^2 + C4 z).
struct PhaseProfile {
    double c1 = 0.0;  // 1/m
    double c2 = 0.0;
    double c3 = 0.0;  // 1/m
    double c4 = 0.0;

    double phase(double k, double y, double z) const {
        return k * ((c1 * y + c2) * y + (c3 * z + c4) * z);
    }
};

// Coefficients of the second-order distance expansion about the surface
// center: r(y,z) ~= r + quad_y y^2 - lin_y y + quad_z z^2 - lin_z z.
struct DistanceExpansion {
    double quad_y;  // (1 - sin^2 phi sin^2 theta) / (2r)
    double lin_y;   // sin phi sin theta
    double quad_z;  // sin^2 theta / (2r)
    double lin_z;   // cos theta
};

DistanceExpansion distance_expansion(const SphericalPoint& p);

// Euclidean distance from the point to the surface location (0, y, z).
double exact_distance(const SphericalPoint& src, double y, double z);

// Second-order expansion term r~(y,z); exact_distance ~= r + this.
double fresnel_distance_term(const SphericalPoint& src, double y, double z);

// |E_i| = sqrt(eta Pt Gt / (4 pi r_t^2))
double incident_field_magnitude(const TransmitSource& src, double eta);

// z-directed induced current density (A/m):
//   (2j/eta) |E_i| e^{-jk(r_t + r~_t(y,z))} cos(phi_t) e^{j phi(y,z)}.
// Constant magnitude over the aperture by construction.
Complex surface_current(const TransmitSource& src, const PhaseProfile& profile,
                        double y, double z, double k, double eta);

// Profile that cancels the incident phase curvature and refocuses the beam
// at the given point; built from the same expansion terms as
// space_factor_params so that focusing at the receiver cancels exactly.
PhaseProfile beamfocusing_profile(const SphericalPoint& tx, const SphericalPoint& focus);

}  // namespace irsfield

#endif
