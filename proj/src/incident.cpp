#include "irsfield/incident.hpp"

#include <cmath>

namespace irsfield {

TransmitSource TransmitSource::for_field_magnitude(const SphericalPoint& position,
                                                   double field_v_per_m, double eta) {
    if (!(field_v_per_m > 0.0) || !(eta > 0.0))
        throw DomainError("field magnitude and impedance must be positive");
    const double r = position.r();
    return {position, field_v_per_m * field_v_per_m * 4.0 * kPi * r * r / eta, 1.0};
}

DistanceExpansion distance_expansion(const SphericalPoint& p) {
    const double st = std::sin(p.theta());
    const double ct = std::cos(p.theta());
    const double sp = std::sin(p.phi());
    const double s = sp * st;  // lateral direction cosine
    return {(1.0 - s * s) / (2.0 * p.r()), s, st * st / (2.0 * p.r()), ct};
}

double exact_distance(const SphericalPoint& src, double y, double z) {
    const CartesianPoint c = to_cartesian(src);
    const double dy = c.y - y;
    const double dz = c.z - z;
    return std::sqrt(c.x * c.x + dy * dy + dz * dz);
}

double fresnel_distance_term(const SphericalPoint& src, double y, double z) {
    const DistanceExpansion e = distance_expansion(src);
    return (e.quad_y * y - e.lin_y) * y + (e.quad_z * z - e.lin_z) * z;
}

double incident_field_magnitude(const TransmitSource& src, double eta) {
    const double r = src.position.r();
    return std::sqrt(eta * src.power_w * src.gain / (4.0 * kPi * r * r));
}

Complex surface_current(const TransmitSource& src, const PhaseProfile& profile,
                        double y, double z, double k, double eta) {
    const double magnitude =
        2.0 * incident_field_magnitude(src, eta) * std::cos(src.position.phi()) / eta;
    const double phase = -k * (src.position.r() + fresnel_distance_term(src.position, y, z)) +
                         profile.phase(k, y, z) + kPi / 2.0;
    return std::polar(magnitude, phase);
}

PhaseProfile beamfocusing_profile(const SphericalPoint& tx, const SphericalPoint& focus) {
    const DistanceExpansion t = distance_expansion(tx);
    const DistanceExpansion o = distance_expansion(focus);
    return {t.quad_y + o.quad_y, -(t.lin_y + o.lin_y),
            t.quad_z + o.quad_z, -(t.lin_z + o.lin_z)};
}

}  // namespace irsfield
