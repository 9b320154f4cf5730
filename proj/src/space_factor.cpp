#include "irsfield/space_factor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace irsfield {

namespace {

// Normalized even moments (1/L) int_{-H}^{H} y^{2m} e^{j w y / H} dy used by
// the small-quadratic-phase branch. Real by symmetry.
double moment2(double w, double half) {
    const double h2 = half * half;
    if (std::fabs(w) < 0.25) {
        const double w2 = w * w;
        return h2 * (1.0 / 3.0 + w2 * (-1.0 / 10.0 + w2 * (1.0 / 168.0 + w2 * (-1.0 / 6480.0 + w2 / 443520.0))));
    }
    const double w3 = w * w * w;
    return h2 * ((w * w - 2.0) * std::sin(w) + 2.0 * w * std::cos(w)) / w3;
}

double moment4(double w, double half) {
    const double h4 = half * half * half * half;
    if (std::fabs(w) < 0.25) {
        const double w2 = w * w;
        return h4 * (1.0 / 5.0 + w2 * (-1.0 / 14.0 + w2 * (1.0 / 216.0 + w2 * (-1.0 / 9360.0))));
    }
    const double w2 = w * w;
    const double w5 = w2 * w2 * w;
    return h4 * ((w2 * w2 - 12.0 * w2 + 24.0) * std::sin(w) + (4.0 * w2 - 24.0) * w * std::cos(w)) / w5;
}

// (1/L) int_{-L/2}^{L/2} exp(-jk(a y^2 - b y)) dy
Complex axis_factor(double a, double b, double k, double len) {
    const double half = 0.5 * len;
    const double quad_phase = k * std::fabs(a) * half * half;
    if (quad_phase < kQuadPhaseSwitch)
        return detail::holographic_axis_sinc(a, b, k, len);
    return detail::holographic_axis_erf(a, b, k, len);
}

struct AxisQuadratic {
    double quad;  // y^2 coefficient of the phase / (-k): a-like
    double lin;   // b-like
};

// Phase span of -k(a y^2 - b y) over [-H, H], exact via endpoints + vertex.
double phase_span(const AxisQuadratic& q, double k, double half) {
    const auto phase = [&](double y) { return -k * (q.quad * y - q.lin) * y; };
    double lo = std::min(phase(-half), phase(half));
    double hi = std::max(phase(-half), phase(half));
    if (q.quad != 0.0) {
        const double vertex = q.lin / (2.0 * q.quad);
        if (std::fabs(vertex) < half) {
            lo = std::min(lo, phase(vertex));
            hi = std::max(hi, phase(vertex));
        }
    }
    return hi - lo;
}

std::size_t axis_samples(double span, double oversample) {
    constexpr double kSamplesPerTwoPi = 16.0;
    const double floor_n = std::max(64.0, std::ceil(span * kSamplesPerTwoPi / (2.0 * kPi)));
    return static_cast<std::size_t>(std::ceil(floor_n * oversample));
}

template <typename PhaseFn>
Complex midpoint_mean(PhaseFn&& phase, double half, std::size_t n) {
    const double h = 2.0 * half / double(n);
    // Kahan summation; the acceptance tolerances sit near the roundoff of a
    // naive sum over ~1e5 unit phasors.
    double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = -half + (double(i) + 0.5) * h;
        const double p = phase(y);
        const double re = std::cos(p), im = std::sin(p);
        double t = sr + (re - cr);
        cr = (t - sr) - (re - cr);
        sr = t;
        t = si + (im - ci);
        ci = (t - si) - (im - ci);
        si = t;
    }
    return Complex{sr, si} / double(n);
}

template <typename PhaseFn>
Complex richardson_midpoint(PhaseFn&& phase, double half, std::size_t n) {
    const Complex coarse = midpoint_mean(phase, half, n);
    const Complex fine = midpoint_mean(phase, half, 2 * n);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

namespace detail {

Complex holographic_axis_erf(double a, double b, double k, double len) {
    return gaussian_phase_integral(a, b, k, -0.5 * len, 0.5 * len) / len;
}

Complex holographic_axis_sinc(double a, double b, double k, double len) {
    // Expand e^{-jka y^2} = 1 - jka y^2 - (ka y^2)^2/2 + O((ka H^2)^3);
    // the residual is below 2e-13 at the switch point.
    const double half = 0.5 * len;
    const double w = k * b * half;
    const double ka = k * a;
    const double m0 = sinc(w);
    const double m2 = moment2(w, half);
    const double m4 = moment4(w, half);
    return {m0 - 0.5 * ka * ka * m4, -ka * m2};
}

}  // namespace detail

SpaceFactorParams space_factor_params(const SphericalPoint& tx, const SphericalPoint& rx,
                                      const PhaseProfile& profile) {
    const DistanceExpansion t = distance_expansion(tx);
    const DistanceExpansion r = distance_expansion(rx);
    return {(t.quad_y + r.quad_y) - profile.c1,
            (t.lin_y + r.lin_y) + profile.c2,
            (t.quad_z + r.quad_z) - profile.c3,
            (t.lin_z + r.lin_z) + profile.c4};
}

SpaceFactorParams two_point_params(const SphericalPoint& ref, const SphericalPoint& probe) {
    const DistanceExpansion a = distance_expansion(ref);
    const DistanceExpansion b = distance_expansion(probe);
    return {b.quad_y - a.quad_y, b.lin_y - a.lin_y,
            b.quad_z - a.quad_z, b.lin_z - a.lin_z};
}

Complex space_factor_holographic(const SpaceFactorParams& p, const SurfaceSpec& s, double k) {
    return axis_factor(p.a_y, p.b_y, k, s.len_y) * axis_factor(p.a_z, p.b_z, k, s.len_z);
}

double space_factor_farfield(const SpaceFactorParams& p, const SurfaceSpec& s, double k) {
    return sinc(0.5 * k * s.len_y * p.b_y) * sinc(0.5 * k * s.len_z * p.b_z);
}

Complex space_factor_discrete(const SpaceFactorParams& p, const DiscreteSurfaceSpec& d, double k) {
    const auto axis_sum = [k](double a, double b, int n, double tile) {
        const int lo = (n % 2 == 0) ? -n / 2 : -(n - 1) / 2;
        const int hi = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
        Complex sum{0.0, 0.0};
        for (int i = lo; i <= hi; ++i) {
            const double y = i * tile;
            sum += std::polar(1.0, -k * (a * y - b) * y);
        }
        return sum / double(n);
    };
    return axis_sum(p.a_y, p.b_y, d.n_y, d.tile_y) * axis_sum(p.a_z, p.b_z, d.n_z, d.tile_z);
}

Complex space_factor_oracle(const SphericalPoint& tx, const SphericalPoint& rx,
                            const PhaseProfile& profile, const SurfaceSpec& s, double k,
                            const OracleGrid& grid) {
    // Grid sizing uses the reduced quadratic coefficients; the summed values
    // go through the distance-expansion route below.
    const SpaceFactorParams p = space_factor_params(tx, rx, profile);
    const double half_y = 0.5 * s.len_y;
    const double half_z = 0.5 * s.len_z;
    const std::size_t n_y =
        axis_samples(phase_span({p.a_y, p.b_y}, k, half_y), grid.oversample);
    const std::size_t n_z =
        axis_samples(phase_span({p.a_z, p.b_z}, k, half_z), grid.oversample);
    const std::size_t fine_y = 2 * n_y, fine_z = 2 * n_z;
    if (fine_y > grid.cell_budget / fine_z)
        throw ResolutionError("oracle grid " + std::to_string(fine_y) + "x" +
                              std::to_string(fine_z) + " exceeds cell budget " +
                              std::to_string(grid.cell_budget));

    const auto phase_y = [&](double y) {
        return -k * (fresnel_distance_term(tx, y, 0.0) + fresnel_distance_term(rx, y, 0.0)) +
               profile.phase(k, y, 0.0);
    };
    const auto phase_z = [&](double z) {
        return -k * (fresnel_distance_term(tx, 0.0, z) + fresnel_distance_term(rx, 0.0, z)) +
               profile.phase(k, 0.0, z);
    };
    return richardson_midpoint(phase_y, half_y, n_y) * richardson_midpoint(phase_z, half_z, n_z);
}

PhaseProfile ProfileSpec::resolve(const SphericalPoint& tx, const SphericalPoint& obs) const {
    switch (mode) {
        case Mode::zero: return {};
        case Mode::explicit_coeffs: return coeffs;
        case Mode::focus_point: return beamfocusing_profile(tx, *focus);
        case Mode::track: return beamfocusing_profile(tx, obs);
    }
    return {};
}

std::vector<SweepSample> beampattern_sweep(const SphericalPoint& tx, const SphericalPoint& rx,
                                           const ProfileSpec& profile, const SurfaceLayout& surf,
                                           double k, const SweepRequest& req, Evaluator ev,
                                           const OracleGrid& grid) {
    if (req.count < 2)
        throw DomainError("sweep needs at least two points");
    if (ev == Evaluator::discrete && !std::holds_alternative<DiscreteSurfaceSpec>(surf))
        throw DomainError("discrete evaluator requires an element tiling");

    const SurfaceSpec s = std::holds_alternative<SurfaceSpec>(surf)
                              ? std::get<SurfaceSpec>(surf)
                              : std::get<DiscreteSurfaceSpec>(surf).surface();

    std::vector<SweepSample> out;
    out.reserve(req.count);
    const double step = (req.stop - req.start) / double(req.count - 1);
    for (int i = 0; i < req.count; ++i) {
        const double v = req.start + i * step;
        const SphericalPoint obs{req.axis == SweepAxis::r_o ? v : req.obs.r(),
                                 req.axis == SweepAxis::theta_o ? v : req.obs.theta(),
                                 req.axis == SweepAxis::phi_o ? v : req.obs.phi()};
        const SphericalPoint& eval = req.eval_at_obs ? obs : rx;
        const PhaseProfile prof = profile.resolve(tx, obs);
        const SpaceFactorParams p = space_factor_params(tx, eval, prof);
        Complex sf;
        switch (ev) {
            case Evaluator::holographic: sf = space_factor_holographic(p, s, k); break;
            case Evaluator::farfield: sf = space_factor_farfield(p, s, k); break;
            case Evaluator::discrete:
                sf = space_factor_discrete(p, std::get<DiscreteSurfaceSpec>(surf), k);
                break;
            case Evaluator::oracle: sf = space_factor_oracle(tx, eval, prof, s, k, grid); break;
        }
        out.push_back({v, sf});
    }
    return out;
}

}  // namespace irsfield
