#pragma once

#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

inline constexpr double kUnitaryTol = 1e-12;

}  // namespace qwalk
