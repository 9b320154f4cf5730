#ifndef IRSFIELD_LINK_HPP
#define IRSFIELD_LINK_HPP

#include <optional>

#include "irsfield/space_factor.hpp"

namespace irsfield {

struct LinkBudget {
    LinkBudget(double power_w, double gain_tx, double gain_rx, double frequency_hz,
               double kappa_abs, double noise_w)
        : power_w(power_w), gain_tx(gain_tx), gain_rx(gain_rx), frequency_hz(frequency_hz),
          kappa_abs(kappa_abs), noise_w(noise_w) {
        if (!(power_w > 0.0) || !(gain_tx > 0.0) || !(gain_rx > 0.0) ||
            !(frequency_hz > 0.0) || !(noise_w > 0.0))
            throw DomainError("link budget entries must be positive");
        if (!(kappa_abs >= 0.0))
            throw DomainError("absorption coefficient must be non-negative");
    }

    double power_w;
    double gain_tx;        // linear
    double gain_rx;        // linear
    double frequency_hz;
    double kappa_abs;      // 1/m, molecular absorption
    double noise_w;        // noise variance

    double lambda() const { return wavelength(frequency_hz); }
    double k() const { return wavenumber(frequency_hz); }
};

// Element radiation pattern G_e(theta) = gamma cos^{2q}(theta) of the
// antenna-based comparison model; theta measured from the element broadside.
struct ElementPattern {
    ElementPattern(double gamma, double q) : gamma(gamma), q(q) {
        if (!(gamma > 0.0))
            throw DomainError("pattern peak gain must be positive");
        if (!(q >= 0.0))
            throw DomainError("pattern exponent must be non-negative");
    }
    double gamma;
    double q;

    double gain(double theta) const;
};

double to_db(double linear);
double from_db(double db);

// ||E_s||^2 = (Ly Lz / lambda)^2 |E_i|^2 / r_r^2 cos^2(phi_t) sin^2(theta_r) |S_yz|^2,
// with S_yz from the closed-form holographic evaluator.
double scattered_field_sq(const TransmitSource& tx, const SphericalPoint& rx,
                          const SurfaceSpec& s, const PhaseProfile& profile, double lambda,
                          double eta);

struct PlatePathLoss {
    double focused;  // PLbar = PL |S_yz|^2 (linear power ratio)
    double plate;    // PL, the space-factor-free plate-scattering loss
};

// Plate-scattering loss with the geometry passed as raw angles so that
// degenerate published parameter sets (cos phi_t = 0) stay representable.
double pathloss_plate_factor(double r_t, double phi_t, double r_r, double theta_r,
                             const SurfaceSpec& s, const LinkBudget& lb);

PlatePathLoss pathloss_plate(const SphericalPoint& tx, const SphericalPoint& rx,
                             const SurfaceSpec& s, const LinkBudget& lb,
                             const PhaseProfile& profile);

// Antenna-based single-element model PL' with the pattern angles supplied
// directly (the published comparison quotes them, conventions vary).
double pathloss_antenna(double r_t, double theta_t, double r_r, double theta_r,
                        const ElementPattern& ep, const LinkBudget& lb);

// Friis with molecular absorption.
double pathloss_direct(double r_d, const LinkBudget& lb);

// End-to-end complex baseband gain
//   h = sqrt(PL) e^{-jk(r_t + r_r)} S_yz + sqrt(PL_d) e^{-jk r_d};
// omit r_d for a blocked direct path.
Complex baseband_gain(const SphericalPoint& tx, const SphericalPoint& rx, const SurfaceSpec& s,
                      const PhaseProfile& profile, const LinkBudget& lb,
                      std::optional<double> r_d = std::nullopt);

double received_snr(double power_w, Complex h, double noise_w);

// (N_y N_z)^2 |S_yz|^2 of the discrete surface; equals (N_y N_z)^2 at p = 0.
double discrete_power_gain(const DiscreteSurfaceSpec& d, const SpaceFactorParams& p, double k);

struct TwoUserGain {
    double focus;  // |S_yz|^2 at the focused user (1 by construction)
    double leak;   // |S_yz|^2 at the other user under the same profile
};

// Beamfocusing depth discrimination between two uplink users; everything
// shared between the users cancels, leaving the two-point residual.
TwoUserGain two_user_interference(const SphericalPoint& user1, const SphericalPoint& user2,
                                  const SurfaceSpec& s, double k);

}  // namespace irsfield

#endif
