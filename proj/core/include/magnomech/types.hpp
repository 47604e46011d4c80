#pragma once

#include <Eigen/Dense>
#include <complex>

namespace magnomech {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Mat2 = Eigen::Matrix<double, 2, 2>;
using Complex = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

} // namespace magnomech
