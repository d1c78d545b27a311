#pragma once

#include <cmath>

namespace swarmbench {

/// Threshold below which distances and speeds are treated as zero.
inline constexpr double kEpsilon = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(Vec2 o) noexcept { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) noexcept { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) noexcept { x *= s; y *= s; return *this; }
    constexpr Vec2& operator/=(double s) noexcept { x /= s; y /= s; return *this; }

    double norm() const noexcept { return std::hypot(x, y); }
    constexpr double norm_sq() const noexcept { return x * x + y * y; }

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) noexcept { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) noexcept { return {a.x * s, a.y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) noexcept { return {a.x * s, a.y * s}; }
    friend constexpr Vec2 operator/(Vec2 a, double s) noexcept { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Vec2, Vec2) noexcept = default;
};

inline double distance(Vec2 a, Vec2 b) noexcept { return (a - b).norm(); }

inline bool is_finite(Vec2 v) noexcept { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Shortens `v` to `max_len` when longer; otherwise returns it unchanged.
inline Vec2 limit(Vec2 v, double max_len) noexcept {
    const double n = v.norm();
    if (n > max_len && n > 0.0) {
        return v * (max_len / n);
    }
    return v;
}

/// Rescales `v` to length `len`. Vectors shorter than kEpsilon map to zero.
inline Vec2 with_length(Vec2 v, double len) noexcept {
    const double n = v.norm();
    if (n < kEpsilon) {
        return {};
    }
    return v * (len / n);
}

} // namespace swarmbench
