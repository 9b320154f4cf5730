#include "irsfield/scenario.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace irsfield {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

namespace {

struct Entry {
    std::string value;
    int line;
};

using SectionMap = std::map<std::string, std::map<std::string, Entry>>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text, int line) {
    const double v = parse_number_value(text, line);
    const int i = static_cast<int>(v);
    if (double(i) != v)
        throw ParseError(line, "expected an integer, got '" + text + "'");
    return i;
}

SectionMap tokenize(const std::string& text) {
    SectionMap sections;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3)
                throw ParseError(line, "malformed section header '" + s + "'");
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError(line, "expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError(line, "empty key or value");
        auto [it, inserted] = sections[section].emplace(key, Entry{value, line});
        if (!inserted)
            throw ParseError(line, "duplicate key '" + key + "' (first on line " +
                                       std::to_string(it->second.line) + ")");
    }
    return sections;
}

class SectionReader {
public:
    SectionReader(SectionMap& all, const std::string& name) : all_(all), name_(name) {
        const auto it = all.find(name);
        if (it != all.end())
            entries_ = &it->second;
    }

    std::optional<Entry> take(const std::string& key) {
        if (!entries_)
            return std::nullopt;
        const auto it = entries_->find(key);
        if (it == entries_->end())
            return std::nullopt;
        Entry e = it->second;
        entries_->erase(it);
        return e;
    }

    Entry require(const std::string& key) {
        auto e = take(key);
        if (!e)
            throw ParseError(0, "missing required key '" + key + "' in [" + name_ + "]");
        return *e;
    }

    void finish() {
        if (entries_ && !entries_->empty()) {
            const auto& [key, entry] = *entries_->begin();
            throw ParseError(entry.line, "unknown key '" + key + "' in [" + name_ + "]");
        }
        all_.erase(name_);
        entries_ = nullptr;
    }

private:
    SectionMap& all_;
    std::string name_;
    std::map<std::string, Entry>* entries_ = nullptr;
};

}  // namespace

double parse_number_value(const std::string& text, int line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE)
        throw ParseError(line, "expected a number, got '" + text + "'");
    return v;
}

// Expansion uses the scenario's carrier wavelength, exactly as written.
double parse_length_value(const std::string& text, double lambda, int line) {
    const auto need_lambda = [&]() {
        if (!(lambda > 0.0))
            throw ParseError(line, "'" + text + "' needs the carrier frequency to expand lambda units");
    };
    if (text == "lambda") {
        need_lambda();
        return lambda;
    }
    if (text.rfind("lambda/", 0) == 0) {
        need_lambda();
        return lambda / parse_number_value(text.substr(7), line);
    }
    if (text.size() > 6 && text.compare(text.size() - 6, 6, "lambda") == 0) {
        need_lambda();
        return parse_number_value(text.substr(0, text.size() - 6), line) * lambda;
    }
    return parse_number_value(text, line);
}

PointSpec parse_point_value(const std::string& text, double lambda, int line) {
    std::istringstream in(text);
    std::string r, theta, phi, extra;
    if (!(in >> r >> theta >> phi) || (in >> extra))
        throw ParseError(line, "expected 'r theta_deg phi_deg', got '" + text + "'");
    return {parse_length_value(r, lambda, line), parse_number_value(theta, line),
            parse_number_value(phi, line)};
}

Scenario parse_scenario_text(const std::string& text) {
    SectionMap sections = tokenize(text);
    Scenario sc;

    {
        SectionReader top(sections, "");
        const Entry schema = top.require("schema");
        sc.schema = parse_int(schema.value, schema.line);
        if (sc.schema != 1)
            throw ParseError(schema.line, "unsupported schema " + schema.value);
        top.finish();
    }

    // [link] first: lambda shorthand elsewhere needs the carrier frequency.
    {
        SectionReader link(sections, "link");
        if (auto e = link.take("f"))
            sc.frequency_hz = parse_number_value(e->value, e->line);
        if (auto e = link.take("lambda")) {
            if (sc.frequency_hz > 0.0)
                throw ParseError(e->line, "give either f or lambda, not both");
            sc.frequency_hz = kSpeedOfLight / parse_number_value(e->value, e->line);
        }
        if (auto e = link.take("Pt"))
            sc.power_w = parse_number_value(e->value, e->line);
        if (auto e = link.take("Gt_dBi"))
            sc.gain_tx_dbi = parse_number_value(e->value, e->line);
        if (auto e = link.take("Gr_dBi"))
            sc.gain_rx_dbi = parse_number_value(e->value, e->line);
        if (auto e = link.take("kappa_abs"))
            sc.kappa_abs = parse_number_value(e->value, e->line);
        if (auto e = link.take("noise"))
            sc.noise_w = parse_number_value(e->value, e->line);
        if (auto e = link.take("Ei"))
            sc.incident_field = parse_number_value(e->value, e->line);
        if (auto e = link.take("eta"))
            sc.eta = parse_number_value(e->value, e->line);
        link.finish();
    }
    const double lambda = sc.frequency_hz > 0.0 ? wavelength(sc.frequency_hz) : 0.0;

    {
        SectionReader surface(sections, "surface");
        if (auto e = surface.take("Ly"))
            sc.len_y = parse_length_value(e->value, lambda, e->line);
        if (auto e = surface.take("Lz"))
            sc.len_z = parse_length_value(e->value, lambda, e->line);
        if (auto e = surface.take("L")) {
            if (sc.len_y != 0.0 || sc.len_z != 0.0)
                throw ParseError(e->line, "give either L or Ly/Lz, not both");
            sc.len_y = sc.len_z = parse_length_value(e->value, lambda, e->line);
        }
        if (auto e = surface.take("tiles")) {
            std::istringstream in(e->value);
            std::string ny, nz, extra;
            if (!(in >> ny >> nz) || (in >> extra))
                throw ParseError(e->line, "expected 'tiles = Ny Nz'");
            sc.tiles_y = parse_int(ny, e->line);
            sc.tiles_z = parse_int(nz, e->line);
        }
        if (auto e = surface.take("tile")) {
            if (sc.tiles_y)
                throw ParseError(e->line, "give either tile or tiles, not both");
            const double t = parse_length_value(e->value, lambda, e->line);
            if (!(t > 0.0) || !(sc.len_y > 0.0))
                throw ParseError(e->line, "tile needs positive surface dimensions");
            sc.tiles_y = static_cast<int>(std::lround(sc.len_y / t));
            sc.tiles_z = static_cast<int>(std::lround(sc.len_z / t));
        }
        surface.finish();
    }

    {
        SectionReader geometry(sections, "geometry");
        if (auto e = geometry.take("tx"))
            sc.tx = parse_point_value(e->value, lambda, e->line);
        if (auto e = geometry.take("rx")) {
            if (e->value == "track")
                sc.rx_track = true;
            else
                sc.rx = parse_point_value(e->value, lambda, e->line);
        }
        geometry.finish();
    }

    {
        SectionReader profile(sections, "profile");
        if (auto e = profile.take("mode")) {
            if (e->value == "zero")
                sc.profile_mode = ProfileSpec::Mode::zero;
            else if (e->value == "explicit")
                sc.profile_mode = ProfileSpec::Mode::explicit_coeffs;
            else if (e->value == "focus")
                sc.profile_mode = ProfileSpec::Mode::focus_point;
            else if (e->value == "track")
                sc.profile_mode = ProfileSpec::Mode::track;
            else
                throw ParseError(e->line, "unknown profile mode '" + e->value + "'");
        }
        const auto coeffs = profile.take("C");
        const auto focus = profile.take("focus");
        if (coeffs) {
            if (sc.profile_mode != ProfileSpec::Mode::explicit_coeffs)
                throw ParseError(coeffs->line, "C requires mode = explicit");
            std::istringstream in(coeffs->value);
            std::string c1, c2, c3, c4, extra;
            if (!(in >> c1 >> c2 >> c3 >> c4) || (in >> extra))
                throw ParseError(coeffs->line, "expected 'C = C1 C2 C3 C4'");
            sc.profile_coeffs = {parse_number_value(c1, coeffs->line), parse_number_value(c2, coeffs->line),
                                 parse_number_value(c3, coeffs->line), parse_number_value(c4, coeffs->line)};
        } else if (sc.profile_mode == ProfileSpec::Mode::explicit_coeffs) {
            throw ParseError(0, "mode = explicit requires key 'C'");
        }
        if (focus) {
            if (sc.profile_mode != ProfileSpec::Mode::focus_point)
                throw ParseError(focus->line, "focus requires mode = focus");
            sc.focus = parse_point_value(focus->value, lambda, focus->line);
        } else if (sc.profile_mode == ProfileSpec::Mode::focus_point) {
            throw ParseError(0, "mode = focus requires key 'focus'");
        }
        profile.finish();
    }

    {
        SectionReader sweep(sections, "sweep");
        if (auto e = sweep.take("axis")) {
            if (e->value == "phi_o")
                sc.axis = SweepAxis::phi_o;
            else if (e->value == "theta_o")
                sc.axis = SweepAxis::theta_o;
            else if (e->value == "r_o")
                sc.axis = SweepAxis::r_o;
            else
                throw ParseError(e->line, "unknown sweep axis '" + e->value + "'");
        }
        if (auto e = sweep.take("start"))
            sc.sweep_start = parse_number_value(e->value, e->line);
        if (auto e = sweep.take("stop"))
            sc.sweep_stop = parse_number_value(e->value, e->line);
        if (auto e = sweep.take("count")) {
            sc.sweep_count = parse_int(e->value, e->line);
            if (sc.sweep_count < 2)
                throw ParseError(e->line, "sweep count must be at least 2");
        }
        if (auto e = sweep.take("obs"))
            sc.obs = parse_point_value(e->value, lambda, e->line);
        sweep.finish();
    }

    {
        SectionReader output(sections, "output");
        if (auto e = output.take("path"))
            sc.output_path = e->value;
        if (auto e = output.take("evaluator")) {
            if (e->value == "holographic")
                sc.evaluator = Evaluator::holographic;
            else if (e->value == "farfield")
                sc.evaluator = Evaluator::farfield;
            else if (e->value == "discrete")
                sc.evaluator = Evaluator::discrete;
            else if (e->value == "oracle")
                sc.evaluator = Evaluator::oracle;
            else
                throw ParseError(e->line, "unknown evaluator '" + e->value + "'");
        }
        if (auto e = output.take("quantity")) {
            if (e->value == "S2")
                sc.quantity = Quantity::s2;
            else if (e->value == "Es2")
                sc.quantity = Quantity::es2;
            else if (e->value == "both")
                sc.quantity = Quantity::both;
            else
                throw ParseError(e->line, "unknown quantity '" + e->value + "'");
        }
        if (auto e = output.take("oversample"))
            sc.oversample = parse_number_value(e->value, e->line);
        if (auto e = output.take("cell_budget"))
            sc.cell_budget = static_cast<std::size_t>(parse_number_value(e->value, e->line));
        output.finish();
    }

    if (!sections.empty()) {
        const auto& [name, entries] = *sections.begin();
        throw ParseError(entries.empty() ? 0 : entries.begin()->second.line,
                         "unknown section [" + name + "]");
    }
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str());
}

namespace {

const char* axis_column(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::phi_o: return "phi_o_deg";
        case SweepAxis::theta_o: return "theta_o_deg";
        case SweepAxis::r_o: return "r_o_m";
    }
    return "?";
}

const char* evaluator_name(Evaluator ev) {
    switch (ev) {
        case Evaluator::holographic: return "holographic";
        case Evaluator::farfield: return "farfield";
        case Evaluator::discrete: return "discrete";
        case Evaluator::oracle: return "oracle";
    }
    return "?";
}

std::string point_echo(const PointSpec& p) {
    return format_double(p.r) + " " + format_double(p.theta_deg) + " " +
           format_double(p.phi_deg);
}

}  // namespace

void run_scenario(const Scenario& sc, std::ostream& out) {
    if (!(sc.frequency_hz > 0.0))
        throw ParseError(0, "scenario needs [link] f (or lambda)");
    if (!(sc.len_y > 0.0) || !(sc.len_z > 0.0))
        throw ParseError(0, "scenario needs [surface] dimensions");
    if (!sc.tx)
        throw ParseError(0, "scenario needs [geometry] tx");
    if (!sc.rx && !sc.rx_track)
        throw ParseError(0, "scenario needs [geometry] rx (a point or 'track')");
    if (!sc.axis || sc.sweep_count < 2)
        throw ParseError(0, "scenario needs a [sweep] with axis and count >= 2");
    if (!sc.obs)
        throw ParseError(0, "scenario needs [sweep] obs");
    if (sc.evaluator == Evaluator::discrete && !sc.tiles_y)
        throw ParseError(0, "discrete evaluator needs [surface] tiles or tile");

    const double lambda = sc.lambda();
    const double k = 2.0 * kPi / lambda;
    const SurfaceSpec surface{sc.len_y, sc.len_z};
    const SphericalPoint tx = sc.tx->to_point();
    // with rx = track the sweep evaluates at the swept point; any fixed
    // front-half-space stand-in works as the unused rx argument
    const SphericalPoint rx = sc.rx ? sc.rx->to_point() : sc.obs->to_point();

    ProfileSpec profile = ProfileSpec::zero();
    switch (sc.profile_mode) {
        case ProfileSpec::Mode::zero: break;
        case ProfileSpec::Mode::explicit_coeffs:
            profile = ProfileSpec::explicit_coeffs(sc.profile_coeffs);
            break;
        case ProfileSpec::Mode::focus_point:
            profile = ProfileSpec::focus_at(sc.focus->to_point());
            break;
        case ProfileSpec::Mode::track: profile = ProfileSpec::track(); break;
    }

    SurfaceLayout layout{surface};
    if (sc.tiles_y)
        layout = DiscreteSurfaceSpec::tiling(surface, *sc.tiles_y, *sc.tiles_z);

    const bool angle_axis = sc.axis != SweepAxis::r_o;
    SweepRequest req{*sc.axis,
                     angle_axis ? deg_to_rad(sc.sweep_start) : sc.sweep_start,
                     angle_axis ? deg_to_rad(sc.sweep_stop) : sc.sweep_stop,
                     sc.sweep_count, sc.obs->to_point(), sc.rx_track};
    const OracleGrid grid{sc.oversample, sc.cell_budget};

    const auto samples = beampattern_sweep(tx, rx, profile, layout, k, req, sc.evaluator, grid);

    const bool want_es2 = sc.quantity != Quantity::s2;
    double field_sq = 0.0;
    if (want_es2) {
        double e_i;
        if (sc.incident_field) {
            e_i = *sc.incident_field;
        } else if (sc.power_w && sc.gain_tx_dbi) {
            e_i = incident_field_magnitude(
                TransmitSource{tx, *sc.power_w, from_db(*sc.gain_tx_dbi)}, sc.eta);
        } else {
            throw ParseError(0, "Es2 output needs [link] Ei or Pt + Gt_dBi");
        }
        field_sq = e_i * e_i;
    }

    // provenance comment: resolved inputs only, no wall clock
    out << "# irsfield scenario schema=" << sc.schema << "\n";
    out << "# surface: Ly=" << format_double(sc.len_y) << " Lz=" << format_double(sc.len_z);
    if (sc.tiles_y)
        out << " tiles=" << *sc.tiles_y << "x" << *sc.tiles_z;
    out << "\n";
    out << "# link: f=" << format_double(sc.frequency_hz)
        << " lambda=" << format_double(lambda) << "\n";
    out << "# geometry: tx=" << point_echo(*sc.tx)
        << " rx=" << (sc.rx ? point_echo(*sc.rx) : std::string("track")) << "\n";
    out << "# profile: mode=";
    switch (sc.profile_mode) {
        case ProfileSpec::Mode::zero: out << "zero"; break;
        case ProfileSpec::Mode::explicit_coeffs:
            out << "explicit C=" << format_double(sc.profile_coeffs.c1) << " "
                << format_double(sc.profile_coeffs.c2) << " "
                << format_double(sc.profile_coeffs.c3) << " "
                << format_double(sc.profile_coeffs.c4);
            break;
        case ProfileSpec::Mode::focus_point: out << "focus " << point_echo(*sc.focus); break;
        case ProfileSpec::Mode::track: out << "track"; break;
    }
    out << "\n";
    out << "# sweep: axis=" << axis_column(*sc.axis) << " start=" << format_double(sc.sweep_start)
        << " stop=" << format_double(sc.sweep_stop) << " count=" << sc.sweep_count
        << " obs=" << point_echo(*sc.obs) << "\n";
    out << "# evaluator: " << evaluator_name(sc.evaluator) << "\n";
    if (sc.tiles_y) {
        const auto d = std::get<DiscreteSurfaceSpec>(layout);
        if (!d.subwavelength(lambda))
            out << "# warning: element size exceeds lambda; outside the"
                   " holographic-approximation regime\n";
    }

    out << axis_column(*sc.axis) << ",S2";
    if (want_es2)
        out << ",Es2_V2_per_m2";
    out << "\n";

    const double display_step = (sc.sweep_stop - sc.sweep_start) / double(sc.sweep_count - 1);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& sample = samples[i];
        const double s2 = std::norm(sample.s);
        // sweep values echo in the scenario's units (degrees for angles)
        const double display = sc.sweep_start + double(i) * display_step;
        out << format_double(display) << "," << format_double(s2);
        if (want_es2) {
            const SphericalPoint eval =
                sc.rx_track
                    ? SphericalPoint{sc.axis == SweepAxis::r_o ? sample.value : sc.obs->r,
                                     sc.axis == SweepAxis::theta_o
                                         ? sample.value
                                         : deg_to_rad(sc.obs->theta_deg),
                                     sc.axis == SweepAxis::phi_o ? sample.value
                                                                 : deg_to_rad(sc.obs->phi_deg)}
                    : rx;
            const double aperture = sc.len_y * sc.len_z / lambda;
            const double cos_phi_t = std::cos(tx.phi());
            const double sin_theta_r = std::sin(eval.theta());
            const double es2 = aperture * aperture * field_sq / (eval.r() * eval.r()) *
                               cos_phi_t * cos_phi_t * sin_theta_r * sin_theta_r * s2;
            out << "," << format_double(es2);
        }
        out << "\n";
    }
}

void run_scenario_file(const std::string& path) {
    const Scenario sc = parse_scenario_file(path);
    if (sc.output_path.empty())
        throw ParseError(0, "scenario needs [output] path");
    std::ostringstream buffer;
    run_scenario(sc, buffer);
    std::ofstream out(sc.output_path, std::ios::binary);
    if (!out)
        throw ParseError(0, "cannot write output file '" + sc.output_path + "'");
    out << buffer.str();
}

}  // namespace irsfield
