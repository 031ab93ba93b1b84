#include "pansplat/sh.hpp"

#include <cmath>

namespace pansplat {

std::array<double, kShCoeffCount> eval_sh_basis(const Vec3& dir) {
    const double x = dir.x(), y = dir.y(), z = dir.z();
    return {
        kSH_C0,
        -kSH_C1 * y,
        kSH_C1 * z,
        -kSH_C1 * x,
        kSH_C2[0] * x * y,
        kSH_C2[1] * y * z,
        kSH_C2[2] * (2.0 * z * z - x * x - y * y),
        kSH_C2[3] * x * z,
        kSH_C2[4] * (x * x - y * y),
    };
}

double eval_sh(std::span<const double> coeffs, const Vec3& dir) {
    if (coeffs.size() != static_cast<size_t>(kShCoeffCount))
        throw ContractError("eval_sh: expected 9 coefficients, got " +
                            std::to_string(coeffs.size()));
    if (std::abs(dir.squaredNorm() - 1.0) > 2e-6)
        throw ContractError("eval_sh: direction is not unit length");
    const auto basis = eval_sh_basis(dir);
    double acc = 0.0;
    for (int i = 0; i < kShCoeffCount; ++i) acc += coeffs[i] * basis[i];
    return acc;
}

}  // namespace pansplat
