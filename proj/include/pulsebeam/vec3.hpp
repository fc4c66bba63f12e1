#ifndef PULSEBEAM_VEC3_HPP
#define PULSEBEAM_VEC3_HPP

#include <array>
#include <cmath>

namespace pulsebeam {

struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double a, double b, double c) : x1(a), x2(b), x3(c) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    constexpr Vec3 operator*(double s) const { return {x1 * s, x2 * s, x3 * s}; }
    constexpr Vec3 operator/(double s) const { return {x1 / s, x2 / s, x3 / s}; }
    constexpr Vec3 operator-() const { return {-x1, -x2, -x3}; }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2,
            a.x3 * b.x1 - a.x1 * b.x3,
            a.x1 * b.x2 - a.x2 * b.x1};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

// Deterministic orthonormal frame (e1, e2, u) with u = v/|v|.  The seed axis
// is picked by the smallest |component| so the frame is stable under small
// perturbations of v.
inline std::array<Vec3, 3> orthonormal_frame(const Vec3& v) {
    const Vec3 u = normalized(v);
    Vec3 seed{1.0, 0.0, 0.0};
    double ax1 = std::fabs(u.x1), ax2 = std::fabs(u.x2), ax3 = std::fabs(u.x3);
    if (ax2 <= ax1 && ax2 <= ax3) seed = {0.0, 1.0, 0.0};
    else if (ax3 <= ax1 && ax3 <= ax2) seed = {0.0, 0.0, 1.0};
    const Vec3 e1 = normalized(seed - u * dot(seed, u));
    const Vec3 e2 = cross(u, e1);
    return {e1, e2, u};
}

struct SpacetimePoint {
    Vec3 r;
    double t = 0.0;
};

} // namespace pulsebeam

#endif
