#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace trackgrid {

// Tolerance used for angle/distance comparisons throughout the library.
inline constexpr double kEps = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / std::numbers::pi; }

// Angle of v in degrees, mapped into [0, 360).
inline double angle_deg(Vec2 v) {
    double a = rad_to_deg(std::atan2(v.y, v.x));
    if (a < 0.0) a += 360.0;
    if (a >= 360.0) a = 0.0;
    return a;
}

inline Vec2 polar(double radius, double theta_deg) {
    const double t = deg_to_rad(theta_deg);
    return {radius * std::cos(t), radius * std::sin(t)};
}

// floor/ceil with a snap: values within kEps of an integer resolve to it.
inline std::int64_t snapped_floor(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) <= kEps) return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::floor(v));
}

inline std::int64_t snapped_ceil(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) <= kEps) return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::ceil(v));
}

// Non-negative remainder.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Counterclockwise angular distance from a to b, in [0, 360).
inline double ccw_delta_deg(double from, double to) {
    double d = std::fmod(to - from, 360.0);
    if (d < 0.0) d += 360.0;
    return d;
}

struct LexLess {
    bool operator()(Vec2 a, Vec2 b) const { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

}  // namespace trackgrid
