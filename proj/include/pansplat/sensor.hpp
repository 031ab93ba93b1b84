#pragma once

#include "pansplat/core.hpp"

namespace pansplat {

/// Panoramic LiDAR sensor: equirectangular range image with a full
/// 360-degree azimuth and a limited vertical field of view.
///
/// Conventions (pinned; ground-truth generators must match):
///   phi   in (-pi, pi], azimuth; xi = 0 and xi = W identify the same column.
///   theta in [vfov_min, vfov_max], inclination measured from the -y axis
///          (theta = 0 points along -y, theta = pi/2 is horizontal).
///   eta = 0 maps to theta = vfov_min.
///   Rasterization samples rays at pixel centers (xi + 0.5, eta + 0.5).
struct SensorModel {
    int width = 0;
    int height = 0;
    double vfov_min = 0.0;  // radians
    double vfov_max = 0.0;  // radians
    Mat4 pose = Mat4::Identity();  // world -> sensor

    double vfov_span() const { return vfov_max - vfov_min; }
};

struct RayAngles {
    double phi = 0.0;
    double theta = 0.0;
};

/// Continuous pixel -> angles. Throws ContractError outside [0,W]x[0,H].
RayAngles pixel_to_angles(double xi, double eta, const SensorModel& sensor);

/// Exact algebraic inverse of pixel_to_angles.
Vec2 angles_to_pixel(const RayAngles& a, const SensorModel& sensor);

/// Unit ray direction (sin t sin p, -cos t, sin t cos p).
Vec3 angles_to_dir(const RayAngles& a);

/// Inverse of angles_to_dir up to scale; atan2(0,0) pinned to 0.
/// Throws ContractError on the zero vector.
RayAngles dir_to_angles(const Vec3& p);

/// The two homogeneous planes whose intersection is the ray.
void ray_planes(const RayAngles& a, Vec4& h_x, Vec4& h_y);

/// Jacobian of the pixel projection at a sensor-frame point, rows
/// d(xi,eta)/d(x,y,z). Throws ContractError when x^2+z^2 is degenerate.
Mat23 pano_jacobian(const Vec3& p, const SensorModel& sensor);

/// Rotation block orthonormal to 1e-9 and last row (0,0,0,1).
bool is_rigid(const Mat4& m);

}  // namespace pansplat
