#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace latdim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// exp(2 pi i num / den)
inline Complex root_of_unity(long long num, long long den) {
  const long long r = ((num % den) + den) % den;
  const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace latdim
