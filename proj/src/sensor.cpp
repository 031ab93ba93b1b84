#include "pansplat/sensor.hpp"

#include <cmath>

namespace pansplat {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kAxisEps2 = 1e-24;  // on x^2 + z^2
}  // namespace

RayAngles pixel_to_angles(double xi, double eta, const SensorModel& sensor) {
    if (xi < 0.0 || xi > sensor.width || eta < 0.0 || eta > sensor.height)
        throw ContractError("pixel_to_angles: pixel outside [0,W]x[0,H]");
    RayAngles a;
    a.phi = (2.0 * xi - sensor.width) * kPi / sensor.width;
    a.theta = eta / sensor.height * sensor.vfov_span() + sensor.vfov_min;
    return a;
}

Vec2 angles_to_pixel(const RayAngles& a, const SensorModel& sensor) {
    const double xi = (a.phi * sensor.width / kPi + sensor.width) * 0.5;
    const double eta = (a.theta - sensor.vfov_min) / sensor.vfov_span() * sensor.height;
    return {xi, eta};
}

Vec3 angles_to_dir(const RayAngles& a) {
    const double st = std::sin(a.theta), ct = std::cos(a.theta);
    const double sp = std::sin(a.phi), cp = std::cos(a.phi);
    return {st * sp, -ct, st * cp};
}

RayAngles dir_to_angles(const Vec3& p) {
    if (p.squaredNorm() == 0.0)
        throw ContractError("dir_to_angles: zero vector");
    const double rho = std::sqrt(p.x() * p.x() + p.z() * p.z());
    RayAngles a;
    a.phi = (p.x() == 0.0 && p.z() == 0.0) ? 0.0 : std::atan2(p.x(), p.z());
    a.theta = (rho == 0.0 && p.y() == 0.0) ? 0.0 : std::atan2(rho, -p.y());
    return a;
}

void ray_planes(const RayAngles& a, Vec4& h_x, Vec4& h_y) {
    const double st = std::sin(a.theta), ct = std::cos(a.theta);
    const double sp = std::sin(a.phi), cp = std::cos(a.phi);
    h_x = Vec4(cp, 0.0, -sp, 0.0);
    h_y = Vec4(ct * sp, st, ct * cp, 0.0);
}

Mat23 pano_jacobian(const Vec3& p, const SensorModel& sensor) {
    const double x = p.x(), y = p.y(), z = p.z();
    const double rho2 = x * x + z * z;
    if (rho2 < kAxisEps2)
        throw ContractError("pano_jacobian: point on the degenerate vertical axis");
    const double rho = std::sqrt(rho2);
    const double r2 = rho2 + y * y;
    const double w_tilde = sensor.width / (2.0 * kPi);
    const double h_tilde = sensor.height / sensor.vfov_span();
    Mat23 j;
    j(0, 0) = w_tilde * z / rho2;
    j(0, 1) = 0.0;
    j(0, 2) = -w_tilde * x / rho2;
    j(1, 0) = -h_tilde * x * y / (rho * r2);
    j(1, 1) = h_tilde * rho / r2;
    j(1, 2) = -h_tilde * y * z / (rho * r2);
    return j;
}

bool is_rigid(const Mat4& m) {
    const Mat3 r = m.topLeftCorner<3, 3>();
    if ((r.transpose() * r - Mat3::Identity()).norm() >= 1e-9) return false;
    return m(3, 0) == 0.0 && m(3, 1) == 0.0 && m(3, 2) == 0.0 && m(3, 3) == 1.0;
}

}  // namespace pansplat
