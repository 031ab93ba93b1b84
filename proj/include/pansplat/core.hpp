#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>

namespace pansplat {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat23 = Eigen::Matrix<double, 2, 3>;
using Mat43 = Eigen::Matrix<double, 4, 3>;

/// Caller violated a documented precondition (wrong sizes, out-of-range input).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Non-finite value detected where the pipeline requires finite numerics.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File/stream level failure (bad magic, truncation, version mismatch).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double logit(double p) { return std::log(p / (1.0 - p)); }

// splitmix64; used wherever we need a stateless, platform-stable hash stream.
inline uint64_t hash_mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform deterministic draw in [0,1) from a key tuple.
inline double hash_uniform(uint64_t seed, uint64_t a, uint64_t b) {
    uint64_t h = hash_mix(seed ^ hash_mix(a ^ hash_mix(b)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace pansplat
