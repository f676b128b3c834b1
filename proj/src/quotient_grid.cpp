#include "trackgrid/quotient_grid.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace trackgrid {

namespace {

std::string cell_name(int t, std::int64_t j) {
    return "(" + std::to_string(t) + ", " + std::to_string(j) + ")";
}

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) return -1;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

}  // namespace

GridParams::GridParams(double r_, int n_, Vec2 center_) : r(r_), n(n_), center(center_) {
    if (!(r > 0.0)) throw std::invalid_argument("grid: track width r must be positive");
    if (n < 2) throw std::invalid_argument("grid: sector count n must be at least 2");
}

void validate_area(const GridParams& params, const AreaRef& a) {
    if (a.t == 0) {
        if (a.j != 0) throw std::domain_error("invalid cell: origin must have area index 0");
        return;
    }
    if (a.t < 0 || a.j < 0 || a.j >= params.ring_size(a.t))
        throw std::domain_error("invalid cell " + cell_name(a.t, a.j));
}

Vec2 dividing_point(const GridParams& params, int t, std::int64_t k) {
    if (t < 0) throw std::domain_error("dividing point: negative track");
    if (t == 0) {
        if (k != 0) throw std::domain_error("dividing point: center has a single index 0");
        return params.center;
    }
    const std::int64_t count = static_cast<std::int64_t>(t) * params.n;
    if (k < 0 || k > count)
        throw std::domain_error("dividing point: index " + std::to_string(k) +
                                " out of range for track " + std::to_string(t));
    const double theta = 360.0 * static_cast<double>(k) / static_cast<double>(count);
    return params.center + polar(static_cast<double>(t) * params.r, theta);
}

std::array<DividingPointRef, 3> area_vertex_refs(const GridParams& params, int t,
                                                 std::int64_t w) {
    validate_area(params, AreaRef{t, w});
    if (t < 1) throw std::domain_error("area vertices: origin cell has no vertex triple");
    const std::int64_t per_sector = 2 * t - 1;
    const std::int64_t i = w / per_sector;
    const std::int64_t m = w % per_sector;
    const std::int64_t upper_count = static_cast<std::int64_t>(t) * params.n;
    const std::int64_t lower_count = static_cast<std::int64_t>(t - 1) * params.n;  // 0 for t == 1

    const auto upper = [&](std::int64_t k) {
        return DividingPointRef{t, mod_floor(k, upper_count)};
    };
    const auto lower = [&](std::int64_t k) {
        if (t == 1) return DividingPointRef{0, 0};
        return DividingPointRef{t - 1, mod_floor(k, lower_count)};
    };

    if (m % 2 == 0) {
        const std::int64_t q = m / 2;
        return {upper(i * t + q), lower(i * (t - 1) + q), upper(i * t + q + 1)};
    }
    const std::int64_t q = (m - 1) / 2;
    return {lower(i * (t - 1) + q), upper(i * t + q + 1), lower(i * (t - 1) + q + 1)};
}

Vec2 point_of(const GridParams& params, const DividingPointRef& ref) {
    return dividing_point(params, ref.t, ref.k);
}

std::array<Vec2, 3> area_vertices(const GridParams& params, int t, std::int64_t w) {
    const auto refs = area_vertex_refs(params, t, w);
    return {point_of(params, refs[0]), point_of(params, refs[1]), point_of(params, refs[2])};
}

Vec2 representative(const GridParams& params, int t, std::int64_t j) {
    validate_area(params, AreaRef{t, j});
    if (t < 1) throw std::domain_error("representative: use the origin overload");
    const double ring = static_cast<double>(params.ring_size(t));
    const double theta = 360.0 / (2.0 * ring) + 360.0 * static_cast<double>(j) / ring;
    const double radius = (2.0 * t - 1.0) * params.r / 2.0;
    return params.center + polar(radius, theta);
}

Vec2 representative(const GridParams& params, const AreaRef& a) {
    validate_area(params, a);
    if (a.is_origin()) return params.center;
    return representative(params, a.t, a.j);
}

double metric(const GridParams& params, const AreaRef& a, const AreaRef& b) {
    return distance(representative(params, a), representative(params, b));
}

CellCode encode(const GridParams& params, const AreaRef& a) {
    validate_area(params, a);
    if (a.is_origin()) throw std::domain_error("encode: origin cell is not enumerable");
    const std::int64_t base = static_cast<std::int64_t>(a.t - 1) * (a.t - 1) * params.n;
    return CellCode{base + a.j};
}

AreaRef decode(const GridParams& params, CellCode code) {
    if (code.value < 0) throw std::domain_error("decode: negative code");
    const std::int64_t t = isqrt64(code.value / params.n) + 1;
    const std::int64_t base = (t - 1) * (t - 1) * params.n;
    return AreaRef{static_cast<int>(t), code.value - base};
}

std::vector<std::int64_t> track_sequence(const GridParams& params,
                                         const std::vector<CellCode>& codes) {
    std::vector<std::int64_t> out;
    out.reserve(codes.size());
    for (const CellCode& c : codes) {
        const std::int64_t t = decode(params, c).t;
        out.push_back((t - 1) * (t - 1));
    }
    return out;
}

int min_sectors(double r) {
    if (!(r > 0.0)) throw std::domain_error("min_sectors: r must be positive");
    // Chord spanned by two base sectors on the circle of radius r is
    // 2 r sin(360/n degrees); the bound is scale-free. n = 2 is excluded:
    // there the two-sector arc is the whole circle and the chord degenerates.
    for (int n = 3;; ++n) {
        if (2.0 * std::sin(deg_to_rad(360.0 / n)) <= 1.0 + kEps) return n;
    }
}

std::vector<Vec2> pad(const GridParams& params, const std::vector<Vec2>& points,
                      const BoundingBox& window) {
    if (window.max.x < window.min.x || window.max.y < window.min.y)
        throw std::domain_error("pad: empty window");
    std::set<std::pair<double, double>> present;
    for (const Vec2& p : points) present.insert({p.x, p.y});

    std::vector<Vec2> out = points;
    const double r = params.r;
    const auto lo_a = snapped_ceil(window.min.x / r);
    const auto hi_a = snapped_floor(window.max.x / r);
    const auto lo_b = snapped_ceil(window.min.y / r);
    const auto hi_b = snapped_floor(window.max.y / r);
    for (std::int64_t a = lo_a; a <= hi_a; ++a) {
        for (std::int64_t b = lo_b; b <= hi_b; ++b) {
            const Vec2 p{static_cast<double>(a) * r, static_cast<double>(b) * r};
            if (present.insert({p.x, p.y}).second) out.push_back(p);
        }
    }
    return out;
}

}  // namespace trackgrid
