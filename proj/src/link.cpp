#include "irsfield/link.hpp"

#include <cmath>

namespace irsfield {

double ElementPattern::gain(double theta) const {
    const double c = std::cos(theta);
    if (c <= 0.0)
        return 0.0;
    return gamma * std::pow(c, 2.0 * q);
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

double from_db(double db) { return std::pow(10.0, db / 10.0); }

double scattered_field_sq(const TransmitSource& tx, const SphericalPoint& rx,
                          const SurfaceSpec& s, const PhaseProfile& profile, double lambda,
                          double eta) {
    const double k = 2.0 * kPi / lambda;
    const Complex syz = space_factor_holographic(space_factor_params(tx.position, rx, profile), s, k);
    const double aperture = s.len_y * s.len_z / lambda;
    const double e_i = incident_field_magnitude(tx, eta);
    const double cos_phi_t = std::cos(tx.position.phi());
    const double sin_theta_r = std::sin(rx.theta());
    return aperture * aperture * e_i * e_i / (rx.r() * rx.r()) * cos_phi_t * cos_phi_t *
           sin_theta_r * sin_theta_r * std::norm(syz);
}

double pathloss_plate_factor(double r_t, double phi_t, double r_r, double theta_r,
                             const SurfaceSpec& s, const LinkBudget& lb) {
    const double area = s.len_y * s.len_z / (4.0 * kPi);
    const double cos_phi_t = std::cos(phi_t);
    const double sin_theta_r = std::sin(theta_r);
    return lb.gain_tx * lb.gain_rx * area * area * cos_phi_t * cos_phi_t * sin_theta_r *
           sin_theta_r / (r_t * r_t * r_r * r_r) * std::exp(-lb.kappa_abs * (r_t + r_r));
}

PlatePathLoss pathloss_plate(const SphericalPoint& tx, const SphericalPoint& rx,
                             const SurfaceSpec& s, const LinkBudget& lb,
                             const PhaseProfile& profile) {
    const double pl = pathloss_plate_factor(tx.r(), tx.phi(), rx.r(), rx.theta(), s, lb);
    const Complex syz = space_factor_holographic(space_factor_params(tx, rx, profile), s, lb.k());
    return {pl * std::norm(syz), pl};
}

double pathloss_antenna(double r_t, double theta_t, double r_r, double theta_r,
                        const ElementPattern& ep, const LinkBudget& lb) {
    const double l4pi = lb.lambda() / (4.0 * kPi);
    const double l4pi2 = l4pi * l4pi;
    return lb.gain_tx * lb.gain_rx * l4pi2 * l4pi2 * ep.gain(theta_t) * ep.gain(theta_r) /
           (r_t * r_t * r_r * r_r) * std::exp(-lb.kappa_abs * (r_t + r_r));
}

double pathloss_direct(double r_d, const LinkBudget& lb) {
    if (!(r_d > 0.0))
        throw DomainError("direct-path distance must be positive");
    const double ratio = lb.lambda() / (4.0 * kPi * r_d);
    return lb.gain_tx * lb.gain_rx * ratio * ratio * std::exp(-lb.kappa_abs * r_d);
}

Complex baseband_gain(const SphericalPoint& tx, const SphericalPoint& rx, const SurfaceSpec& s,
                      const PhaseProfile& profile, const LinkBudget& lb,
                      std::optional<double> r_d) {
    const double k = lb.k();
    const double pl = pathloss_plate_factor(tx.r(), tx.phi(), rx.r(), rx.theta(), s, lb);
    const Complex syz = space_factor_holographic(space_factor_params(tx, rx, profile), s, k);
    Complex h = std::sqrt(pl) * std::polar(1.0, -k * (tx.r() + rx.r())) * syz;
    if (r_d)
        h += std::sqrt(pathloss_direct(*r_d, lb)) * std::polar(1.0, -k * *r_d);
    return h;
}

double received_snr(double power_w, Complex h, double noise_w) {
    if (!(power_w >= 0.0) || !(noise_w > 0.0))
        throw DomainError("snr needs non-negative power and positive noise variance");
    return power_w * std::norm(h) / noise_w;
}

double discrete_power_gain(const DiscreteSurfaceSpec& d, const SpaceFactorParams& p, double k) {
    const double elements = double(d.n_y) * double(d.n_z);
    return elements * elements * std::norm(space_factor_discrete(p, d, k));
}

TwoUserGain two_user_interference(const SphericalPoint& user1, const SphericalPoint& user2,
                                  const SurfaceSpec& s, double k) {
    const double focus = std::norm(space_factor_holographic(two_point_params(user1, user1), s, k));
    const double leak = std::norm(space_factor_holographic(two_point_params(user1, user2), s, k));
    return {focus, leak};
}

}  // namespace irsfield
