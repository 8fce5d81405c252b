#ifndef WILDFIRE_SNAPSHOT_HPP_
#define WILDFIRE_SNAPSHOT_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

#include "wildfire/config.hpp"
#include "wildfire/discretization.hpp"
#include "wildfire/kron.hpp"
#include "wildfire/schemes.hpp"

namespace wildfire {

/// Field values on a uniform (n_x + 1) x (n_y + 1) point grid, stored with y
/// as the outer index: values[j * (n_x + 1) + i] lives at (x_i, y_j).
struct sampled_field {
    int nx = 0;
    int ny = 0;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> values;

    double at(int i, int j) const noexcept { return values[static_cast<std::size_t>(j) * (nx + 1) + i]; }
};

/// Evaluates spline fields at uniform points. Basis values at the sample
/// abscissae are computed once per writer.
class field_sampler {
public:
    field_sampler(const discretization& disc, int samples_x, int samples_y);

    sampled_field sample(const coefficient_grid& field) const;

private:
    struct axis {
        std::vector<double> coords;
        std::vector<int> first;
        std::vector<double> values;  // (p + 1) per sample
    };
    static axis make_axis(const bspline_space& space, int samples);

    int degree_;
    axis ax_;
    axis ay_;
};

// One "x y value" line per sample, 17 significant digits.
void write_data(std::ostream& out, const sampled_field& field);

struct data_point {
    double x;
    double y;
    double value;
};
// Throws format_error naming the line on malformed input.
std::vector<data_point> read_data(std::istream& in);

// Binary 8-bit grayscale, min..max mapped to 0..255, largest y on the top row.
void write_pgm(std::ostream& out, const sampled_field& field);

// "nx ny" header followed by one coefficient per line in storage order.
void write_coefficients(std::ostream& out, const coefficient_grid& grid);
coefficient_grid read_coefficients(std::istream& in);

/// Writes out_<step>.data and fuel_<step>.data (plus optional PGM and raw
/// coefficient files) into config.out_dir. Throws std::runtime_error when a
/// file cannot be written.
class snapshot_writer {
public:
    snapshot_writer(const discretization& disc, const scenario_config& config);

    std::vector<std::filesystem::path> write(const sim_state& state, int step) const;

private:
    field_sampler sampler_;
    std::filesystem::path dir_;
    bool pgm_;
    bool coeffs_;
};

}  // namespace wildfire

#endif  // WILDFIRE_SNAPSHOT_HPP_
