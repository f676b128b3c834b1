#pragma once

#include <cstdint>
#include <vector>

#include "trackgrid/locator.hpp"
#include "trackgrid/quotient_grid.hpp"

namespace fixtures {

inline trackgrid::GridParams standard_grid() { return trackgrid::GridParams(4.0, 12); }

// Occupied cells of the letter-"d" dataset on the standard grid, as codes.
inline std::vector<std::int64_t> letter_d_codes() {
    return {12,  14,  15,  17,  49,  54,  55,  109, 110,
            111, 112, 113, 114, 115, 117, 204, 205, 207};
}

// The same dataset after a 30-degree rotation.
inline std::vector<std::int64_t> letter_d_codes_rotated_30() {
    return {15,  17,  18,  20,  54,  59,  60,  116, 117,
            118, 119, 120, 121, 122, 124, 213, 214, 216};
}

inline std::vector<trackgrid::CellCode> as_cell_codes(const std::vector<std::int64_t>& values) {
    std::vector<trackgrid::CellCode> out;
    out.reserve(values.size());
    for (std::int64_t v : values) out.push_back({v});
    return out;
}

// One point at the representative of each occupied cell.
inline std::vector<trackgrid::Vec2> letter_d_points() {
    const trackgrid::GridParams params = standard_grid();
    std::vector<trackgrid::Vec2> out;
    for (std::int64_t code : letter_d_codes())
        out.push_back(representative(params, decode(params, trackgrid::CellCode{code})));
    return out;
}

}  // namespace fixtures
