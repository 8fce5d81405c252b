#ifndef WILDFIRE_FUEL_MAP_HPP_
#define WILDFIRE_FUEL_MAP_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <vector>

namespace wildfire {

struct rectangle {
    double x0 = 0.0;
    double x1 = 100.0;
    double y0 = 0.0;
    double y1 = 100.0;

    friend bool operator==(const rectangle&, const rectangle&) = default;
};

/// Raster of fuel availability in [0, 1]. Row 0 is the top of the image
/// (largest y). Samples are scaled by availability_scale.
class fuel_map {
public:
    fuel_map(std::size_t rows, std::size_t cols, std::vector<double> cells, double availability_scale = 0.725);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double cell(std::size_t row, std::size_t col) const noexcept { return cells_[row * cols_ + col]; }
    double availability_scale() const noexcept { return scale_; }
    void set_availability_scale(double scale) noexcept { scale_ = scale; }

    // Number of input values that were outside [0, 1] and got clamped.
    std::size_t clamped_cells() const noexcept { return clamped_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> cells_;
    double scale_;
    std::size_t clamped_ = 0;
};

/// Header-free comma-separated grid, one image row per line. Throws
/// format_error naming the offending row/column.
fuel_map load_csv(std::istream& in);
fuel_map load_csv(const std::filesystem::path& path);

/// In strict mode a point on the max-x or min-y edge
/// maps one pixel past the raster and is rejected. The default clamps it to
/// the last pixel instead.
enum class sample_mode { clamp_edges, strict };

/// Nearest pixel with y flipped: col = floor(cols / width * (x - x0)),
/// row = floor(rows / height * (y1 - y)). Throws std::out_of_range("Invalid
/// map coordinates") when the pixel lies outside the raster.
double sample(const fuel_map& map, double x, double y, const rectangle& domain,
              sample_mode mode = sample_mode::clamp_edges);

}  // namespace wildfire

#endif  // WILDFIRE_FUEL_MAP_HPP_
