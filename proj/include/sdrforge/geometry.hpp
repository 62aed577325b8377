#pragma once

#include <array>
#include <cmath>

namespace sdrforge {

// World-space vector/point in meters.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return n > 0.0 ? v / n : Vec3{0.0, 0.0, 0.0};
}

// Unit quaternion, scalar-last (x, y, z, w). Identity by default.
struct Quat {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double w = 1.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z + w * w); }

    static Quat from_axis_angle(const Vec3& axis, double angle_rad) {
        Vec3 a = normalized(axis);
        double h = 0.5 * angle_rad;
        double s = std::sin(h);
        return {a.x * s, a.y * s, a.z * s, std::cos(h)};
    }

    // Rotation about the world +Z axis.
    static Quat yaw(double angle_rad) {
        return from_axis_angle({0.0, 0.0, 1.0}, angle_rad);
    }

    Vec3 rotate(const Vec3& v) const {
        // v' = v + 2 * q_vec x (q_vec x v + w * v)
        Vec3 q{x, y, z};
        Vec3 t = cross(q, v) * 2.0;
        return v + t * w + cross(q, t);
    }
};

// Rigid placement with uniform scale: p_world = rotation * (p_local * scale) + translation.
struct Pose {
    Vec3 translation;
    Quat rotation;
    double scale = 1.0;

    Vec3 apply(const Vec3& p) const {
        return rotation.rotate(p * scale) + translation;
    }

    bool valid(double quat_tol = 1e-6) const {
        return scale > 0.0 && std::abs(rotation.norm() - 1.0) <= quat_tol;
    }
};

// Linear RGB color with channels in [0, 1].
struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

inline double luminance(const Rgb& c) {
    return 0.2126 * c.r + 0.7152 * c.g + 0.0722 * c.b;
}

struct Aabb {
    Vec3 min{1e300, 1e300, 1e300};
    Vec3 max{-1e300, -1e300, -1e300};

    void expand(const Vec3& p) {
        min.x = std::min(min.x, p.x);
        min.y = std::min(min.y, p.y);
        min.z = std::min(min.z, p.z);
        max.x = std::max(max.x, p.x);
        max.y = std::max(max.y, p.y);
        max.z = std::max(max.z, p.z);
    }

    Vec3 extent() const { return max - min; }
    double diagonal() const { return norm(extent()); }
};

}  // namespace sdrforge
