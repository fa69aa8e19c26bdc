#include "ris/codebook.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ris/rng.hpp"

namespace ris {

namespace {
constexpr std::uint64_t kDitherStream = 0xd17e52ULL;
constexpr std::uint64_t kCodewordStream = 0xc0deULL;
}  // namespace

ElementStateModel ElementStateModel::from_phases_deg(double mag0, double phase0_deg,
                                                     double mag1, double phase1_deg) {
    if (mag0 <= 0.0 || mag0 > 1.0 || mag1 <= 0.0 || mag1 > 1.0) {
        throw std::invalid_argument("ElementStateModel: magnitudes must be in (0, 1]");
    }
    ElementStateModel m;
    m.state0 = std::polar(mag0, deg2rad(phase0_deg));
    m.state1 = std::polar(mag1, deg2rad(phase1_deg));
    return m;
}

std::vector<double> ideal_phase(const ArrayGeometry& geometry, const WaveParams& wave,
                                const Direction& incident, const Direction& reflect) {
    geometry.validate();
    const double ui = dir_u(incident), vi = dir_v(incident);
    const double ud = dir_u(reflect), vd = dir_v(reflect);
    std::vector<double> phi(geometry.size());
    for (int n = 0; n < geometry.num_y; ++n) {
        for (int m = 0; m < geometry.num_x; ++m) {
            const double x = geometry.element_x(m);
            const double y = geometry.element_y(n);
            const double phi_i = wave.wavenumber * (x * ui + y * vi);
            const double phi_d = wave.wavenumber * (x * ud + y * vd);
            phi[geometry.flat_index(m, n)] = wrap_phase_deg(rad2deg(phi_i - phi_d));
        }
    }
    return phi;
}

int quantize_phase(double phi_deg) {
    return std::abs(wrap_phase_deg(phi_deg)) <= 90.0 ? 0 : 1;
}

std::vector<double> dither_offsets(const ArrayGeometry& geometry, std::uint64_t seed) {
    std::vector<double> offsets(geometry.size());
    for (int e = 0; e < geometry.size(); ++e) {
        offsets[e] = 360.0 * rng::uniform(seed, kDitherStream, static_cast<std::uint64_t>(e));
    }
    return offsets;
}

Codeword build_codeword(const ArrayGeometry& geometry, const WaveParams& wave,
                        const Direction& incident, const Direction& reflect,
                        std::optional<std::uint64_t> dither_seed) {
    Codeword cw;
    cw.design_incident = incident;
    cw.design_reflect = reflect;
    const auto phi = ideal_phase(geometry, wave, incident, reflect);
    if (dither_seed) {
        cw.dither_seed = *dither_seed;
        cw.dither_deg = dither_offsets(geometry, *dither_seed);
    }
    cw.bits.resize(phi.size());
    for (std::size_t e = 0; e < phi.size(); ++e) {
        const double offset = cw.has_dither() ? cw.dither_deg[e] : 0.0;
        // The element must realize -phi to cancel the incident and outgoing
        // propagation phases; the offset is a fixed element property, so the
        // bit steers pi*b + offset toward -phi. Because the quantizer only
        // depends on |wrapped phase|, that is quantize(phi + offset).
        cw.bits[e] = static_cast<std::uint8_t>(quantize_phase(phi[e] + offset));
    }
    return cw;
}

Codebook build_codebook(const ArrayGeometry& geometry, const WaveParams& wave,
                        const std::vector<Direction>& incident_set,
                        const std::vector<Direction>& reflect_set,
                        std::optional<std::uint64_t> dither_seed) {
    if (incident_set.empty() || reflect_set.empty()) {
        throw std::invalid_argument("build_codebook: direction sets must be non-empty");
    }
    Codebook cb;
    cb.incident_set = incident_set;
    cb.reflect_set = reflect_set;
    cb.dither_seed = dither_seed;
    cb.codewords.reserve(incident_set.size() * reflect_set.size());
    for (std::size_t i = 0; i < incident_set.size(); ++i) {
        for (std::size_t d = 0; d < reflect_set.size(); ++d) {
            std::optional<std::uint64_t> cw_seed;
            if (dither_seed) {
                const auto idx = i * reflect_set.size() + d;
                cw_seed = rng::hash(*dither_seed, kCodewordStream, idx);
            }
            cb.codewords.push_back(
                build_codeword(geometry, wave, incident_set[i], reflect_set[d], cw_seed));
        }
    }
    return cb;
}

std::vector<Direction> azimuth_sweep(double start_deg, double stop_deg, double step_deg) {
    if (step_deg <= 0.0) throw std::invalid_argument("azimuth_sweep: step must be positive");
    std::vector<Direction> dirs;
    const int count = static_cast<int>(std::round((stop_deg - start_deg) / step_deg)) + 1;
    for (int i = 0; i < count; ++i) {
        const double t = start_deg + i * step_deg;
        dirs.push_back(t >= 0.0 ? Direction{t, 0.0} : Direction{-t, 180.0});
    }
    return dirs;
}

namespace {

void write_direction_list(std::ostream& os, const char* tag,
                          const std::vector<Direction>& dirs) {
    os << tag << ' ' << dirs.size() << '\n';
    for (const auto& d : dirs) {
        os << d.theta_deg << ' ' << d.phi_deg << '\n';
    }
}

std::vector<Direction> read_direction_list(std::istream& is, const std::string& tag) {
    std::string word;
    std::size_t count = 0;
    if (!(is >> word >> count) || word != tag) {
        throw std::runtime_error("codebook file: expected '" + tag + "' section");
    }
    std::vector<Direction> dirs(count);
    for (auto& d : dirs) {
        if (!(is >> d.theta_deg >> d.phi_deg)) {
            throw std::runtime_error("codebook file: truncated direction list");
        }
    }
    return dirs;
}

}  // namespace

void save_codebook(const std::string& path, const CodebookFile& file) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_codebook: cannot open " + path);
    os.precision(17);
    os << "ris-codebook v1\n";
    os << "frequency_hz " << file.wave.frequency_hz << '\n';
    os << "geometry " << file.geometry.num_x << ' ' << file.geometry.num_y << ' '
       << file.geometry.spacing_x_m << ' ' << file.geometry.spacing_y_m << '\n';
    write_direction_list(os, "incident", file.codebook.incident_set);
    write_direction_list(os, "reflect", file.codebook.reflect_set);
    if (file.codebook.dither_seed) {
        os << "dither_seed " << *file.codebook.dither_seed << '\n';
    } else {
        os << "dither_seed none\n";
    }
    os << "codewords " << file.codebook.codewords.size() << '\n';
    for (const auto& cw : file.codebook.codewords) {
        for (auto b : cw.bits) os << static_cast<char>('0' + b);
        os << '\n';
    }
    if (!os) throw std::runtime_error("save_codebook: write failed for " + path);
}

CodebookFile load_codebook(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_codebook: cannot open " + path);
    std::string line;
    std::getline(is, line);
    if (line != "ris-codebook v1") {
        throw std::runtime_error("load_codebook: bad header in " + path);
    }
    CodebookFile file;
    std::string word;
    double freq = 0.0;
    if (!(is >> word >> freq) || word != "frequency_hz") {
        throw std::runtime_error("codebook file: expected frequency_hz");
    }
    file.wave = wave_from_frequency(freq);
    if (!(is >> word >> file.geometry.num_x >> file.geometry.num_y >>
          file.geometry.spacing_x_m >> file.geometry.spacing_y_m) ||
        word != "geometry") {
        throw std::runtime_error("codebook file: expected geometry");
    }
    file.geometry.validate();
    file.codebook.incident_set = read_direction_list(is, "incident");
    file.codebook.reflect_set = read_direction_list(is, "reflect");
    std::string seed_str;
    if (!(is >> word >> seed_str) || word != "dither_seed") {
        throw std::runtime_error("codebook file: expected dither_seed");
    }
    if (seed_str != "none") {
        file.codebook.dither_seed = std::stoull(seed_str);
    }
    std::size_t count = 0;
    if (!(is >> word >> count) || word != "codewords") {
        throw std::runtime_error("codebook file: expected codewords");
    }
    const std::size_t nd = file.codebook.reflect_set.size();
    if (count != nd * file.codebook.incident_set.size()) {
        throw std::runtime_error("codebook file: codeword count mismatch");
    }
    ArrayGeometry geom = file.geometry;
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::string bits;
        if (!(is >> bits) || bits.size() != static_cast<std::size_t>(geom.size())) {
            throw std::runtime_error("codebook file: bad bit record");
        }
        Codeword cw;
        cw.design_incident = file.codebook.incident_set[idx / nd];
        cw.design_reflect = file.codebook.reflect_set[idx % nd];
        if (file.codebook.dither_seed) {
            cw.dither_seed = rng::hash(*file.codebook.dither_seed, kCodewordStream, idx);
            cw.dither_deg = dither_offsets(geom, *cw.dither_seed);
        }
        cw.bits.resize(bits.size());
        for (std::size_t e = 0; e < bits.size(); ++e) {
            if (bits[e] != '0' && bits[e] != '1') {
                throw std::runtime_error("codebook file: bit record must be 0/1");
            }
            cw.bits[e] = static_cast<std::uint8_t>(bits[e] - '0');
        }
        file.codebook.codewords.push_back(std::move(cw));
    }
    return file;
}

}  // namespace ris
