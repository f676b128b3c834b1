#include "trackgrid/locator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "trackgrid/errors.hpp"

namespace trackgrid {

namespace {

constexpr int kScanSamples = 1024;
constexpr double kRootTol = 1e-12;
constexpr double kZeroSample = 1e-12;

// Cell index owning angle theta on track t: half-open spans, each cell owns
// its starting edge.
std::int64_t owning_index(const GridParams& params, int t, double theta_deg) {
    const std::int64_t ring = params.ring_size(t);
    const double pos = theta_deg / 360.0 * static_cast<double>(ring);
    return mod_floor(snapped_floor(pos), ring);
}

}  // namespace

bool cone_contains(const GridParams& params, int t, std::int64_t j, Vec2 x) {
    validate_area(params, AreaRef{t, j});
    const Vec2 rel = x - params.center;
    const double len = norm(rel);
    if (len <= kEps) return false;
    const double step = params.cell_degrees(t);
    const Vec2 v1 = polar(1.0, static_cast<double>(j) * step);
    const Vec2 v2 = polar(1.0, static_cast<double>(j + 1) * step);
    const Vec2 v3 = (1.0 / len) * rel;
    const double cos_a = dot(v1, v2);
    return dot(v1, v3) >= cos_a - kEps && dot(v2, v3) >= cos_a - kEps;
}

LocatedPoint locate_detail(const GridParams& params, Vec2 x) {
    LocatedPoint lp;
    lp.source = x;
    const Vec2 rel = x - params.center;
    if (rel == Vec2{}) return lp;  // origin cell

    const double d = norm(rel);
    const int t = static_cast<int>(std::max<std::int64_t>(1, snapped_ceil(d / params.r)));
    const double theta = angle_deg(rel);
    lp.track = t;
    lp.theta_deg = theta;

    const std::int64_t tn = static_cast<std::int64_t>(t) * params.n;
    const std::int64_t k = mod_floor(snapped_floor(theta / 360.0 * static_cast<double>(tn)), tn);
    lp.boundary_index = k;
    lp.sector = k / t;

    // Candidate from the sector decomposition, then the one-step neighbor
    // check; the owning cell is always among {w-1, w, w+1}.
    const std::int64_t ring = params.ring_size(t);
    const std::int64_t w = (2 * t - 1) * lp.sector + 2 * (k % t);
    const std::int64_t owner = owning_index(params, t, theta);
    for (std::int64_t c : {w - 1, w, w + 1}) {
        if (mod_floor(c, ring) == owner) {
            lp.area = owner;
            return lp;
        }
    }
    lp.area = owner;  // not reachable; kept as a safe fallback
    return lp;
}

AreaRef locate(const GridParams& params, Vec2 x) { return locate_detail(params, x).area_ref(); }

MappedDataset map_dataset(const GridParams& params, const std::vector<Vec2>& points) {
    MappedDataset out;
    std::set<AreaRef> cells;
    for (const Vec2& p : points) {
        const AreaRef a = locate(params, p);
        if (a.is_origin()) {
            ++out.origin_hits;
        } else {
            cells.insert(a);
        }
    }
    out.cells.assign(cells.begin(), cells.end());
    return out;
}

namespace {

double eval_checked(const ImplicitCurve& curve, Vec2 p) {
    const double v = curve.evaluator(p.x, p.y);
    if (!std::isfinite(v))
        throw CurveEvalError("curve evaluator returned a non-finite value at (" +
                                 std::to_string(p.x) + ", " + std::to_string(p.y) + ")",
                             p.x, p.y);
    return v;
}

// Scan g over [lo, hi] via `point`, bisect sign changes, and feed every root
// point to `emit`. A scan line lying inside the zero set (all samples zero)
// emits the sample points themselves.
void scan_segment(const ImplicitCurve& curve, double lo, double hi,
                  const std::function<Vec2(double)>& point,
                  const std::function<void(Vec2)>& emit) {
    std::vector<double> values(kScanSamples + 1);
    bool all_zero = true;
    for (int i = 0; i <= kScanSamples; ++i) {
        const double s = lo + (hi - lo) * static_cast<double>(i) / kScanSamples;
        values[i] = eval_checked(curve, point(s));
        if (std::abs(values[i]) > kZeroSample) all_zero = false;
    }
    if (all_zero) {
        for (int i = 0; i <= kScanSamples; ++i)
            emit(point(lo + (hi - lo) * static_cast<double>(i) / kScanSamples));
        return;
    }
    const auto at = [&](int i) { return lo + (hi - lo) * static_cast<double>(i) / kScanSamples; };
    for (int i = 0; i <= kScanSamples; ++i) {
        if (std::abs(values[i]) <= kZeroSample) {
            emit(point(at(i)));
            continue;
        }
        if (i == kScanSamples) break;
        if (std::abs(values[i + 1]) <= kZeroSample) continue;
        if ((values[i] < 0.0) == (values[i + 1] < 0.0)) continue;
        double a = at(i), b = at(i + 1);
        double fa = values[i];
        while (b - a > kRootTol) {
            const double m = 0.5 * (a + b);
            const double fm = eval_checked(curve, point(m));
            if (std::abs(fm) <= kZeroSample) {
                a = b = m;
                break;
            }
            if ((fa < 0.0) == (fm < 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        emit(point(0.5 * (a + b)));
    }
}

}  // namespace

std::vector<AreaRef> map_curve(const GridParams& params, const ImplicitCurve& curve, int t0) {
    if (t0 < 1) throw std::domain_error("map_curve: window track count must be >= 1");
    if (!curve.evaluator) throw std::domain_error("map_curve: missing evaluator");

    std::set<AreaRef> cells;
    const auto emit = [&](Vec2 p) { cells.insert(locate(params, p)); };
    const double window = static_cast<double>(t0) * params.r;

    for (int t = 1; t <= t0; ++t) {
        const double radius = static_cast<double>(t) * params.r;
        scan_segment(
            curve, 0.0, 360.0,
            [&](double phi) { return params.center + polar(radius, phi); }, emit);

        const std::int64_t rays = static_cast<std::int64_t>(t) * params.n;
        for (std::int64_t k = 0; k < rays; ++k) {
            const double theta = 360.0 * static_cast<double>(k) / static_cast<double>(rays);
            const Vec2 dir = polar(1.0, theta);
            scan_segment(
                curve, -window, window,
                [&](double s) { return params.center + s * dir; }, emit);
        }
    }
    return {cells.begin(), cells.end()};
}

}  // namespace trackgrid
