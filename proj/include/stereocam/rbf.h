// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include <span>
#include <string_view>
#include <vector>

namespace stereocam {

enum class BasisKind
{
  InverseMultiquadric, // 1 / sqrt(r^2 + r0^2)
  Gaussian // exp(-(r / r0)^2), only for conditioning experiments
};

std::string_view basisName(BasisKind kind);

struct RbfBasis
{
  BasisKind kind{BasisKind::InverseMultiquadric};
  double shape{2.0}; // r0, same units as distance

  // Unchecked evaluation; see basisEval for the checked entry point.
  double operator()(double r) const;
};

// Throws ArgumentError for negative or non-finite r, or a non-positive r0.
double basisEval(const RbfBasis &basis, double r);

constexpr double kSingularPivotRatio = 1e-12;

// Interpolant F(x) = sum_j w_j phi(|x - x_j|) over 2D centers. Immutable once
// solved; concurrent evaluation is safe.
class RbfModel
{
 public:
  double operator()(const Eigen::Vector2d &x) const;

  const std::vector<Eigen::Vector2d> &centers() const
  {
    return centers_;
  }
  const Eigen::VectorXd &weights() const
  {
    return weights_;
  }
  const Eigen::VectorXd &values() const
  {
    return values_;
  }
  const RbfBasis &basis() const
  {
    return basis_;
  }
  // max_i |sum_j w_j phi(|x_i - x_j|) - y_i| achieved by the solve
  double residual() const
  {
    return residual_;
  }
  size_t size() const
  {
    return centers_.size();
  }

 private:
  friend RbfModel solveWeights(std::span<const Eigen::Vector2d>, std::span<const double>,
      const RbfBasis &);

  std::vector<Eigen::Vector2d> centers_;
  Eigen::VectorXd weights_;
  Eigen::VectorXd values_;
  RbfBasis basis_;
  double residual_{0.0};
};

// Symmetric kernel matrix K(i, j) = phi(|x_i - x_j|).
Eigen::MatrixXd kernelMatrix(std::span<const Eigen::Vector2d> centers, const RbfBasis &basis);

// Dense LU with partial pivoting plus two steps of iterative refinement.
// Throws ArgumentError on size mismatch / empty input / non-finite values and
// SingularSystemError when two centers are closer than 1e-6 or a pivot falls
// below kSingularPivotRatio times the kernel's max-norm.
RbfModel solveWeights(std::span<const Eigen::Vector2d> centers, std::span<const double> values,
    const RbfBasis &basis);

inline double interpolate(const RbfModel &model, const Eigen::Vector2d &x)
{
  return model(x);
}

// Axis-aligned rectangle on the ground plane (x, z).
struct GridBounds
{
  double xMin{0.0};
  double xMax{1.0};
  double zMin{0.0};
  double zMax{1.0};
};

// values[j * xRes + i] = F(x_i, z_j) with x_i = xMin + i (xMax - xMin) / (xRes - 1)
// and z_j likewise; the last lattice line sits exactly on xMax / zMax.
struct ScalarGrid
{
  GridBounds bounds;
  size_t xRes{0};
  size_t zRes{0};
  std::vector<double> values;

  double at(size_t i, size_t j) const
  {
    return values[j * xRes + i];
  }
  Eigen::Vector2d latticePoint(size_t i, size_t j) const;
};

ScalarGrid evaluateGrid(const RbfModel &model, const GridBounds &bounds, size_t xRes, size_t zRes);

} // namespace stereocam
