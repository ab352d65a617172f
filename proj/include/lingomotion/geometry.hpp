#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "lingomotion/error.hpp"

namespace lingomotion {

inline constexpr double kDegPerRad = 180.0 / M_PI;
inline constexpr double kRadPerDeg = M_PI / 180.0;

inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

// Rotation mapping unit vector a onto unit vector b along the shortest arc.
// Undefined (throws) for antiparallel inputs.
inline Eigen::Matrix3d shortest_arc(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    const Eigen::Vector3d v = a.cross(b);
    const double c = a.dot(b);
    if (c < -1.0 + 1e-9) throw Error("geometry", "shortest-arc rotation undefined for antiparallel vectors");
    Eigen::Matrix3d k;
    k << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
    return Eigen::Matrix3d::Identity() + k + k * k * (1.0 / (1.0 + c));
}

// Rodrigues rotation about a unit axis, angle in radians.
inline Eigen::Matrix3d axis_angle(const Eigen::Vector3d& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Eigen::Matrix3d k;
    k << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
    return Eigen::Matrix3d::Identity() + s * k + (1.0 - c) * k * k;
}

inline Eigen::Matrix3d rot_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Eigen::Matrix3d r;
    r << 1, 0, 0, 0, c, -s, 0, s, c;
    return r;
}

inline Eigen::Matrix3d rot_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Eigen::Matrix3d r;
    r << c, 0, s, 0, 1, 0, -s, 0, c;
    return r;
}

inline Eigen::Matrix3d rot_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Eigen::Matrix3d r;
    r << c, -s, 0, s, c, 0, 0, 0, 1;
    return r;
}

}  // namespace lingomotion
