#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace swarm {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rectangular 0/1 grid describing the target shape. Row 0 is the top row.
struct Bitmap {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;  // row-major

    std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c]; }
    bool in_bounds(int r, int c) const { return r >= 0 && r < rows && c >= 0 && c < cols; }
    int count_ones() const;
};

// Parses a plain text bitmap grid. Accepted input:
//   - optional "P1" header line followed by "<cols> <rows>" dimensions,
//   - '#' comment lines anywhere,
//   - rows of 0/1 digits, either contiguous ("0110") or spaced ("0 1 1 0").
// Without a P1 header every non-comment line is one row and all rows must
// have equal length.
Bitmap parse_bitmap(std::string_view source);

Bitmap load_bitmap(const std::string& path);

}  // namespace swarm
