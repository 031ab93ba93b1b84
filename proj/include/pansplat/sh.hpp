#pragma once

#include "pansplat/core.hpp"

#include <array>
#include <span>

namespace pansplat {

// Real spherical harmonics, degree 2, in the convention common to splatting
// renderers (signs folded into the constants).
inline constexpr int kShDegree = 2;
inline constexpr int kShCoeffCount = (kShDegree + 1) * (kShDegree + 1);  // 9

inline constexpr double kSH_C0 = 0.28209479177387814;  // 1/(2*sqrt(pi))
inline constexpr double kSH_C1 = 0.4886025119029199;   // sqrt(3/(4*pi))
inline constexpr std::array<double, 5> kSH_C2 = {
    1.0925484305920792,   // xy
    -1.0925484305920792,  // yz
    0.31539156525252005,  // 2z^2 - x^2 - y^2
    -1.0925484305920792,  // xz
    0.5462742152960396,   // x^2 - y^2
};

/// Basis values Y_0..Y_8 at a unit direction.
std::array<double, kShCoeffCount> eval_sh_basis(const Vec3& dir);

/// Sum c_i * Y_i(dir). Throws ContractError unless coeffs.size() == 9 and
/// |dir| is unit to 1e-6.
double eval_sh(std::span<const double> coeffs, const Vec3& dir);

}  // namespace pansplat
