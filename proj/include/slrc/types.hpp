#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace slrc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// A point of C^m; the coordinates z_1..z_m a monomial is evaluated at.
using Point = Eigen::VectorXcd;
using PointList = std::vector<Point>;

/// Relative rank threshold shared by structure-level rank decisions.
inline constexpr double kDefaultRankTol = 1e-8;

}  // namespace slrc
