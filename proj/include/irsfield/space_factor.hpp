#ifndef IRSFIELD_SPACE_FACTOR_HPP
#define IRSFIELD_SPACE_FACTOR_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "irsfield/incident.hpp"

namespace irsfield {

// Reduced quadratic-phase parameters of the aperture integral
//   S_yz = (1/(Ly Lz)) int int exp(-jk(a_y y^2 - b_y y + a_z z^2 - b_z z)) dy dz.
struct SpaceFactorParams {
    double a_y;  // 1/m
    double b_y;
    double a_z;  // 1/m
    double b_z;
};

struct DiscreteSurfaceSpec {
    DiscreteSurfaceSpec(int n_y, int n_z, double tile_y, double tile_z)
        : n_y(n_y), n_z(n_z), tile_y(tile_y), tile_z(tile_z) {
        if (n_y < 1 || n_z < 1)
            throw DomainError("element counts must be positive");
        if (!(tile_y > 0.0) || !(tile_z > 0.0))
            throw DomainError("element dimensions must be positive");
    }

    static DiscreteSurfaceSpec tiling(const SurfaceSpec& s, int n_y, int n_z) {
        if (n_y < 1 || n_z < 1)
            throw DomainError("element counts must be positive");
        return {n_y, n_z, s.len_y / n_y, s.len_z / n_z};
    }

    int n_y, n_z;
    double tile_y, tile_z;  // m

    SurfaceSpec surface() const { return {n_y * tile_y, n_z * tile_z}; }
    // Holographic-approximation regime; callers may warn when false.
    bool subwavelength(double lambda) const {
        return tile_y <= lambda && tile_z <= lambda;
    }
};

// a_y, b_y, a_z, b_z from transmitter, receiver, and reflection profile.
// Built from the same expansion sums as beamfocusing_profile, so a profile
// focused exactly at rx cancels to (0,0,0,0) with no rounding residue.
SpaceFactorParams space_factor_params(const SphericalPoint& tx, const SphericalPoint& rx,
                                      const PhaseProfile& profile);

// Parameter differences between two points sharing the rest of the link:
// the residual parameters at `probe` when the profile is focused at `ref`.
SpaceFactorParams two_point_params(const SphericalPoint& ref, const SphericalPoint& probe);

// Closed-form space factor: per axis the gaussian-phase integral through
// erf on the +-45 deg rays, switching to a sinc form (with quadratic-phase
// correction terms) when the quadratic phase across the aperture is below
// the branch threshold.
Complex space_factor_holographic(const SpaceFactorParams& p, const SurfaceSpec& s, double k);

// Max quadratic phase |k a (L/2)^2| below which the erf route loses too many
// digits to cancellation and the corrected sinc form takes over.
inline constexpr double kQuadPhaseSwitch = 1e-4;  // rad

// Far-field (parallel-ray) limit sinc(k Ly b_y / 2) sinc(k Lz b_z / 2).
double space_factor_farfield(const SpaceFactorParams& p, const SurfaceSpec& s, double k);

// Normalized double sum over the element grid. Even counts use the paper
// index range -N/2 .. N/2-1; odd counts use the symmetric range.
Complex space_factor_discrete(const SpaceFactorParams& p, const DiscreteSurfaceSpec& d, double k);

struct OracleGrid {
    // Multiplies the phase-resolution floor (16 samples per 2 pi of phase
    // span, minimum 64 per axis). Values above 1 sharpen the quadrature.
    double oversample = 1.0;
    // Budget on the conceptual fine-grid cell count N_y * N_z.
    std::size_t cell_budget = 100'000'000;
};

// Ground-truth quadrature of the Fresnel integrand
//   exp(-jk(r~_t(y,z) + r~_r(y,z)) + j phi(y,z))
// via per-axis midpoint rules with one Richardson extrapolation level.
// The integrand phase is evaluated through the distance-expansion route,
// independent of the erf machinery it validates.
// Throws ResolutionError when the required grid exceeds grid.cell_budget.
Complex space_factor_oracle(const SphericalPoint& tx, const SphericalPoint& rx,
                            const PhaseProfile& profile, const SurfaceSpec& s, double k,
                            const OracleGrid& grid = {});

enum class Evaluator { holographic, farfield, discrete, oracle };

namespace detail {
// The two per-axis branches of the holographic evaluator, exposed so the
// switchover window can be probed from both sides.
Complex holographic_axis_erf(double a, double b, double k, double len);
Complex holographic_axis_sinc(double a, double b, double k, double len);
}  // namespace detail

struct ProfileSpec {
    enum class Mode { zero, explicit_coeffs, focus_point, track };

    static ProfileSpec zero() { return {Mode::zero, {}, std::nullopt}; }
    static ProfileSpec explicit_coeffs(const PhaseProfile& p) {
        return {Mode::explicit_coeffs, p, std::nullopt};
    }
    static ProfileSpec focus_at(const SphericalPoint& p) {
        return {Mode::focus_point, {}, p};
    }
    // Refocused at every swept observation point.
    static ProfileSpec track() { return {Mode::track, {}, std::nullopt}; }

    Mode mode;
    PhaseProfile coeffs;
    std::optional<SphericalPoint> focus;

    PhaseProfile resolve(const SphericalPoint& tx, const SphericalPoint& obs) const;
};

using SurfaceLayout = std::variant<SurfaceSpec, DiscreteSurfaceSpec>;

enum class SweepAxis { phi_o, theta_o, r_o };

struct SweepRequest {
    SweepAxis axis;
    double start;  // rad for angles, m for r_o
    double stop;
    int count;
    SphericalPoint obs;       // base observation point; the swept coordinate is replaced
    bool eval_at_obs = false; // evaluate S at the swept point instead of at rx
};

struct SweepSample {
    double value;
    Complex s;
};

// Deterministic ordered sweep; the swept coordinate moves the observation
// point that feeds the profile (track mode) and, when eval_at_obs is set,
// the point the space factor is evaluated at.
std::vector<SweepSample> beampattern_sweep(const SphericalPoint& tx, const SphericalPoint& rx,
                                           const ProfileSpec& profile, const SurfaceLayout& surf,
                                           double k, const SweepRequest& req, Evaluator ev,
                                           const OracleGrid& grid = {});

}  // namespace irsfield

#endif
