#ifndef IRSFIELD_SCENARIO_HPP
#define IRSFIELD_SCENARIO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "irsfield/link.hpp"

namespace irsfield {

// Shortest round-trip decimal representation (locale-independent).
std::string format_double(double v);

// Scenario value grammar, shared with the CLI flag parsers. All throw
// ParseError (line 0 when no file context applies).
double parse_number_value(const std::string& text, int line = 0);
// "<x>" meters | "<x>lambda" | "lambda" | "lambda/<n>"
double parse_length_value(const std::string& text, double lambda, int line = 0);
struct PointSpec;
PointSpec parse_point_value(const std::string& text, double lambda, int line = 0);

// Raw point as written in a scenario: meters and degrees.
struct PointSpec {
    double r = 0.0;
    double theta_deg = 0.0;
    double phi_deg = 0.0;

    SphericalPoint to_point() const {
        return {r, deg_to_rad(theta_deg), deg_to_rad(phi_deg)};
    }
};

enum class Quantity { s2, es2, both };

// Flat scenario record mirroring the file grammar; angles stay in degrees
// and geometry stays unconstructed until run time, so that syntax problems
// surface as ParseError and model violations as DomainError.
struct Scenario {
    int schema = 0;

    // [surface]
    double len_y = 0.0;
    double len_z = 0.0;
    std::optional<int> tiles_y;
    std::optional<int> tiles_z;

    // [link]
    double frequency_hz = 0.0;
    std::optional<double> power_w;
    std::optional<double> gain_tx_dbi;
    std::optional<double> gain_rx_dbi;
    std::optional<double> kappa_abs;
    std::optional<double> noise_w;
    std::optional<double> incident_field;  // |E_i| override (V/m)
    double eta = kFreeSpaceImpedance;

    // [geometry]
    std::optional<PointSpec> tx;
    std::optional<PointSpec> rx;
    bool rx_track = false;

    // [profile]
    ProfileSpec::Mode profile_mode = ProfileSpec::Mode::zero;
    PhaseProfile profile_coeffs;
    std::optional<PointSpec> focus;

    // [sweep]
    std::optional<SweepAxis> axis;
    double sweep_start = 0.0;  // degrees for angle axes, meters for r_o
    double sweep_stop = 0.0;
    int sweep_count = 0;
    std::optional<PointSpec> obs;

    // [output]
    std::string output_path;
    Evaluator evaluator = Evaluator::holographic;
    Quantity quantity = Quantity::s2;
    double oversample = 1.0;
    std::size_t cell_budget = 100'000'000;

    double lambda() const { return wavelength(frequency_hz); }
};

// Parse the scenario grammar (see README). Throws ParseError with the
// offending line number.
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

// Execute the sweep a scenario describes and emit its CSV. Deterministic:
// identical scenarios produce byte-identical bytes.
void run_scenario(const Scenario& sc, std::ostream& out);

// Convenience wrapper: parse, run, write to the scenario's output path.
void run_scenario_file(const std::string& path);

}  // namespace irsfield

#endif
