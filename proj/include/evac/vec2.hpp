#pragma once

#include <cmath>

namespace evac {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(Vec2 o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// 2x2 matrix, row-major.
struct Mat2 {
    double a00 = 0.0, a01 = 0.0;
    double a10 = 0.0, a11 = 0.0;

    /// Row vector times matrix: (v^T M)_l.
    Vec2 left_mul(Vec2 v) const {
        return {v.x * a00 + v.y * a10, v.x * a01 + v.y * a11};
    }

    /// Matrix times column vector.
    Vec2 right_mul(Vec2 v) const {
        return {a00 * v.x + a01 * v.y, a10 * v.x + a11 * v.y};
    }
};

}  // namespace evac
