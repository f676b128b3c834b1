#include "trackgrid/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "trackgrid/errors.hpp"

namespace trackgrid {

namespace {

std::string cell_name(const AreaRef& a) {
    return "(" + std::to_string(a.t) + ", " + std::to_string(a.j) + ")";
}

std::vector<AreaRef> sorted_unique(std::set<AreaRef>&& cells) {
    return {cells.begin(), cells.end()};
}

}  // namespace

TransformSpec TransformSpec::rotate(double theta_deg) {
    TransformSpec s;
    s.kind = Kind::Rotate;
    s.theta_deg = theta_deg;
    return s;
}

TransformSpec TransformSpec::translate(int ray, std::int64_t units) {
    TransformSpec s;
    s.kind = Kind::Translate;
    s.ray = ray;
    s.units = units;
    return s;
}

TransformSpec TransformSpec::scale(double factor) {
    TransformSpec s;
    s.kind = Kind::Scale;
    s.factor = factor;
    return s;
}

std::int64_t rotation_shift(const GridParams& params, int t, double theta_deg) {
    const double ring = static_cast<double>(params.ring_size(t));
    return snapped_floor(theta_deg * ring / 360.0);
}

std::vector<AreaRef> rotate(const GridParams& params, const std::vector<AreaRef>& cells,
                            double theta_deg) {
    std::set<AreaRef> out;
    for (const AreaRef& c : cells) {
        validate_area(params, c);
        if (c.is_origin()) {
            out.insert(c);
            continue;
        }
        const std::int64_t ring = params.ring_size(c.t);
        out.insert({c.t, mod_floor(c.j + rotation_shift(params, c.t, theta_deg), ring)});
    }
    return sorted_unique(std::move(out));
}

std::vector<AreaRef> rotate_inverse(const GridParams& params, const std::vector<AreaRef>& cells,
                                    double theta_deg) {
    // subtracts the exact forward shift, so inverse-after-forward is identity
    std::set<AreaRef> out;
    for (const AreaRef& c : cells) {
        validate_area(params, c);
        if (c.is_origin()) {
            out.insert(c);
            continue;
        }
        const std::int64_t ring = params.ring_size(c.t);
        out.insert({c.t, mod_floor(c.j - rotation_shift(params, c.t, theta_deg), ring)});
    }
    return sorted_unique(std::move(out));
}

std::vector<AreaRef> translate(const GridParams& params, const std::vector<AreaRef>& cells,
                               int ray, std::int64_t units) {
    if (ray < 0 || ray >= params.n) throw std::domain_error("translate: ray index out of range");
    std::set<AreaRef> out;
    for (const AreaRef& c : cells) {
        validate_area(params, c);
        if (c.is_origin())
            throw TransformUndefinedError("translate: undefined for the origin cell", 0, 0);
        const int target = c.t + static_cast<int>(units);
        if (target < 1)
            throw TransformUndefinedError(
                "translate: cell " + cell_name(c) + " would leave the grid", c.t, c.j);
        const std::int64_t offset = c.j - static_cast<std::int64_t>(2 * c.t - 1) * ray;
        const std::int64_t j = static_cast<std::int64_t>(2 * target - 1) * ray + offset;
        if (j < 0 || j >= params.ring_size(target))
            throw TransformUndefinedError("translate: offset of cell " + cell_name(c) +
                                              " does not fit in track " + std::to_string(target),
                                          c.t, c.j);
        out.insert({target, j});
    }
    return sorted_unique(std::move(out));
}

std::vector<AreaRef> scale(const GridParams& params, const std::vector<AreaRef>& cells,
                           double factor) {
    if (!(factor > 0.0)) throw std::domain_error("scale: factor must be positive");
    std::set<AreaRef> out;
    for (const AreaRef& c : cells) {
        validate_area(params, c);
        if (c.is_origin()) {
            out.insert(c);
            continue;
        }
        const auto t = snapped_ceil(static_cast<double>(c.t) * factor);
        const auto j = snapped_ceil(static_cast<double>(c.j) * factor);
        if (t < 1 || j < 0 || j >= params.ring_size(static_cast<int>(t)))
            throw TransformUndefinedError(
                "scale: cell " + cell_name(c) + " has no image under factor " +
                    std::to_string(factor),
                c.t, c.j);
        out.insert({static_cast<int>(t), j});
    }
    return sorted_unique(std::move(out));
}

std::vector<CellCode> apply(const GridParams& params, const std::vector<CellCode>& codes,
                            const TransformSpec& spec) {
    std::vector<AreaRef> cells;
    cells.reserve(codes.size());
    for (const CellCode& c : codes) cells.push_back(decode(params, c));

    std::vector<AreaRef> mapped;
    switch (spec.kind) {
        case TransformSpec::Kind::Rotate:
            mapped = rotate(params, cells, spec.theta_deg);
            break;
        case TransformSpec::Kind::Translate:
            mapped = translate(params, cells, spec.ray, spec.units);
            break;
        case TransformSpec::Kind::Scale:
            mapped = scale(params, cells, spec.factor);
            break;
    }

    std::vector<CellCode> out;
    out.reserve(mapped.size());
    for (const AreaRef& a : mapped) out.push_back(encode(params, a));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace trackgrid
