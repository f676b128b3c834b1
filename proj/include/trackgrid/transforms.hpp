#pragma once

#include <cstdint>
#include <vector>

#include "trackgrid/quotient_grid.hpp"

namespace trackgrid {

struct TransformSpec {
    enum class Kind { Rotate, Translate, Scale };

    Kind kind = Kind::Rotate;
    double theta_deg = 0.0;  // rotate
    int ray = 0;             // translate: 0 <= ray < n
    std::int64_t units = 0;  // translate
    double factor = 1.0;     // scale: > 0

    static TransformSpec rotate(double theta_deg);
    static TransformSpec translate(int ray, std::int64_t units);
    static TransformSpec scale(double factor);
};

// Per-track index shift of a rotation by theta degrees: floor(theta / theta_t)
// with theta_t the cell width of track t.
std::int64_t rotation_shift(const GridParams& params, int t, double theta_deg);

// Index-level cell maps. Results are deduplicated and sorted. The origin cell
// is fixed by rotations and scalings; translating it is undefined.
std::vector<AreaRef> rotate(const GridParams& params, const std::vector<AreaRef>& cells,
                            double theta_deg);
std::vector<AreaRef> rotate_inverse(const GridParams& params, const std::vector<AreaRef>& cells,
                                    double theta_deg);
std::vector<AreaRef> translate(const GridParams& params, const std::vector<AreaRef>& cells,
                               int ray, std::int64_t units);
std::vector<AreaRef> scale(const GridParams& params, const std::vector<AreaRef>& cells,
                           double factor);

// Integer-sequence form: decode, map, encode, sort.
std::vector<CellCode> apply(const GridParams& params, const std::vector<CellCode>& codes,
                            const TransformSpec& spec);

}  // namespace trackgrid
