#include "wildfire/snapshot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "wildfire/errors.hpp"

namespace wildfire {

field_sampler::axis field_sampler::make_axis(const bspline_space& space, int samples) {
    axis a;
    const int p = space.degree();
    const double lo = space.a();
    const double hi = space.b();
    a.values.resize(static_cast<std::size_t>(samples + 1) * (p + 1));
    std::vector<double> derivs(p + 1);
    for (int k = 0; k <= samples; ++k) {
        const double c = k == samples ? hi : lo + k * (hi - lo) / samples;
        a.coords.push_back(c);
        const int e = space.element_of(c);
        std::span<double> vals{a.values.data() + static_cast<std::size_t>(k) * (p + 1), static_cast<std::size_t>(p + 1)};
        a.first.push_back(space.eval_nonzero(e, c, vals, derivs));
    }
    return a;
}

field_sampler::field_sampler(const discretization& disc, int samples_x, int samples_y)
: degree_{disc.degree()}
, ax_{make_axis(disc.space_x(), samples_x)}
, ay_{make_axis(disc.space_y(), samples_y)} { }

sampled_field field_sampler::sample(const coefficient_grid& field) const {
    sampled_field out;
    out.nx = static_cast<int>(ax_.coords.size()) - 1;
    out.ny = static_cast<int>(ay_.coords.size()) - 1;
    out.x = ax_.coords;
    out.y = ay_.coords;
    out.values.resize(ax_.coords.size() * ay_.coords.size());
    const int w = degree_ + 1;
    for (std::size_t j = 0; j < ay_.coords.size(); ++j) {
        const double* by = ay_.values.data() + j * w;
        const int fy = ay_.first[j];
        for (std::size_t i = 0; i < ax_.coords.size(); ++i) {
            const double* bx = ax_.values.data() + i * w;
            const int fx = ax_.first[i];
            double v = 0.0;
            for (int a = 0; a < w; ++a) {
                double row = 0.0;
                for (int b = 0; b < w; ++b) {
                    row += by[b] * field(fx + a, fy + b);
                }
                v += bx[a] * row;
            }
            out.values[j * ax_.coords.size() + i] = v;
        }
    }
    return out;
}

void write_data(std::ostream& out, const sampled_field& field) {
    fmt::memory_buffer buf;
    for (int j = 0; j <= field.ny; ++j) {
        for (int i = 0; i <= field.nx; ++i) {
            fmt::format_to(std::back_inserter(buf), "{:.17g} {:.17g} {:.17g}\n", field.x[i], field.y[j],
                           field.at(i, j));
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::vector<data_point> read_data(std::istream& in) {
    std::vector<data_point> points;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields{line};
        data_point p{};
        std::string extra;
        if (!(fields >> p.x >> p.y >> p.value) || (fields >> extra)) {
            throw format_error{"line " + std::to_string(line_no) + ": expected 'x y value'"};
        }
        points.push_back(p);
    }
    return points;
}

void write_pgm(std::ostream& out, const sampled_field& field) {
    const auto [lo_it, hi_it] = std::minmax_element(field.values.begin(), field.values.end());
    const double lo = field.values.empty() ? 0.0 : *lo_it;
    const double range = field.values.empty() ? 0.0 : *hi_it - lo;
    const int w = field.nx + 1;
    const int h = field.ny + 1;
    out << "P5\n" << w << ' ' << h << "\n255\n";
    std::string row(static_cast<std::size_t>(w), '\0');
    for (int j = h - 1; j >= 0; --j) {
        for (int i = 0; i < w; ++i) {
            const double v = field.at(i, j);
            double level = range > 0.0 && std::isfinite(v) ? (v - lo) / range : 0.0;
            row[i] = static_cast<char>(static_cast<unsigned char>(std::lround(std::clamp(level, 0.0, 1.0) * 255.0)));
        }
        out.write(row.data(), w);
    }
}

void write_coefficients(std::ostream& out, const coefficient_grid& grid) {
    fmt::memory_buffer buf;
    fmt::format_to(std::back_inserter(buf), "{} {}\n", grid.nx(), grid.ny());
    for (double v : grid.values()) {
        fmt::format_to(std::back_inserter(buf), "{:.17g}\n", v);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

coefficient_grid read_coefficients(std::istream& in) {
    std::size_t nx = 0;
    std::size_t ny = 0;
    if (!(in >> nx >> ny) || nx == 0 || ny == 0) {
        throw format_error{"coefficient file: bad 'nx ny' header"};
    }
    coefficient_grid grid{nx, ny};
    for (std::size_t k = 0; k < nx * ny; ++k) {
        if (!(in >> grid.data()[k])) {
            throw format_error{"coefficient file: expected " + std::to_string(nx * ny) + " values, got " +
                               std::to_string(k)};
        }
    }
    return grid;
}

snapshot_writer::snapshot_writer(const discretization& disc, const scenario_config& config)
: sampler_{disc, config.samples > 0 ? config.samples : config.nx, config.samples > 0 ? config.samples : config.ny}
, dir_{config.out_dir}
, pgm_{config.write_pgm}
, coeffs_{config.dump_coeffs} { }

namespace {

template <typename Writer>
std::filesystem::path write_file(const std::filesystem::path& path, std::ios::openmode mode, Writer&& writer) {
    std::ofstream out{path, mode};
    if (!out) {
        throw std::runtime_error{"cannot write " + path.string()};
    }
    writer(out);
    out.flush();
    if (!out) {
        throw std::runtime_error{"error while writing " + path.string()};
    }
    return path;
}

}  // namespace

std::vector<std::filesystem::path> snapshot_writer::write(const sim_state& state, int step) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        throw std::runtime_error{"cannot create output directory " + dir_.string() + ": " + ec.message()};
    }
    std::vector<std::filesystem::path> files;
    const std::pair<const char*, const coefficient_grid*> fields[] = {{"out", &state.T}, {"fuel", &state.fuel}};
    for (const auto& [prefix, grid] : fields) {
        const auto sampled = sampler_.sample(*grid);
        const auto stem = fmt::format("{}_{}", prefix, step);
        files.push_back(write_file(dir_ / (stem + ".data"), std::ios::out,
                                   [&](std::ostream& out) { write_data(out, sampled); }));
        if (pgm_) {
            files.push_back(write_file(dir_ / (stem + ".pgm"), std::ios::out | std::ios::binary,
                                       [&](std::ostream& out) { write_pgm(out, sampled); }));
        }
        if (coeffs_) {
            files.push_back(write_file(dir_ / (stem + ".coeffs"), std::ios::out,
                                       [&](std::ostream& out) { write_coefficients(out, *grid); }));
        }
    }
    return files;
}

}  // namespace wildfire
