#include "wildfire/fuel_map.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wildfire/errors.hpp"

namespace wildfire {

fuel_map::fuel_map(std::size_t rows, std::size_t cols, std::vector<double> cells, double availability_scale)
: rows_{rows}
, cols_{cols}
, cells_{std::move(cells)}
, scale_{availability_scale} {
    if (rows_ == 0 || cols_ == 0 || cells_.size() != rows_ * cols_) {
        throw format_error{"fuel map must be a non-empty rectangular grid"};
    }
    for (auto& v : cells_) {
        if (v < 0.0 || v > 1.0) {
            v = std::clamp(v, 0.0, 1.0);
            ++clamped_;
        }
    }
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_cell(std::string_view text, std::size_t row, std::size_t col) {
    const auto s = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw format_error{"fuel map: non-numeric cell at row " + std::to_string(row) + ", column "
                           + std::to_string(col)};
    }
    return value;
}

}  // namespace

fuel_map load_csv(std::istream& in) {
    std::vector<double> cells;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        ++rows;
        std::size_t count = 0;
        std::string_view rest{line};
        while (true) {
            const auto comma = rest.find(',');
            ++count;
            cells.push_back(parse_cell(rest.substr(0, comma), rows, count));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (rows == 1) {
            cols = count;
        } else if (count != cols) {
            throw format_error{"fuel map: ragged row " + std::to_string(rows) + " has " + std::to_string(count)
                               + " columns, expected " + std::to_string(cols)};
        }
    }
    if (rows == 0) {
        throw format_error{"fuel map: empty file"};
    }
    return fuel_map{rows, cols, std::move(cells)};
}

fuel_map load_csv(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) {
        throw format_error{"fuel map: cannot open " + path.string()};
    }
    return load_csv(in);
}

double sample(const fuel_map& map, double x, double y, const rectangle& domain, sample_mode mode) {
    const double scale_x = static_cast<double>(map.cols()) / (domain.x1 - domain.x0);
    const double scale_y = static_cast<double>(map.rows()) / (domain.y1 - domain.y0);
    const double fx = scale_x * (x - domain.x0);
    const double fy = scale_y * (domain.y1 - y);
    if (!(fx >= 0.0) || !(fy >= 0.0)) {
        throw std::out_of_range{"Invalid map coordinates"};
    }
    auto col = static_cast<std::size_t>(fx);
    auto row = static_cast<std::size_t>(fy);
    if (mode == sample_mode::clamp_edges) {
        if (col == map.cols() && x <= domain.x1) {
            col = map.cols() - 1;
        }
        if (row == map.rows() && y >= domain.y0) {
            row = map.rows() - 1;
        }
    }
    if (col >= map.cols() || row >= map.rows()) {
        throw std::out_of_range{"Invalid map coordinates"};
    }
    return map.cell(row, col) * map.availability_scale();
}

}  // namespace wildfire
