// Copyright 2026 The Stereocam Authors
// SPDX-License-Identifier: Apache-2.0

#include "stereocam/rbf.h"
#include "stereocam/errors.h"

#include <Eigen/LU>

#include <cmath>
#include <limits>

namespace stereocam {

std::string_view basisName(BasisKind kind)
{
  switch (kind) {
  case BasisKind::InverseMultiquadric:
    return "inverse-multiquadric";
  case BasisKind::Gaussian:
    return "gaussian";
  }
  return "inverse-multiquadric";
}

double RbfBasis::operator()(double r) const
{
  switch (kind) {
  case BasisKind::Gaussian: {
    const double u = r / shape;
    return std::exp(-u * u);
  }
  case BasisKind::InverseMultiquadric:
    break;
  }
  return 1.0 / std::sqrt(r * r + shape * shape);
}

double basisEval(const RbfBasis &basis, double r)
{
  if (!(basis.shape > 0.0) || !std::isfinite(basis.shape))
    throw ArgumentError("basis shape parameter must be positive and finite");
  if (!(r >= 0.0) || !std::isfinite(r))
    throw ArgumentError("basis distance must be finite and non-negative");
  return basis(r);
}

double RbfModel::operator()(const Eigen::Vector2d &x) const
{
  double sum = 0.0;
  for (size_t j = 0; j < centers_.size(); ++j)
    sum += weights_[Eigen::Index(j)] * basis_((x - centers_[j]).norm());
  return sum;
}

Eigen::MatrixXd kernelMatrix(std::span<const Eigen::Vector2d> centers, const RbfBasis &basis)
{
  const auto m = Eigen::Index(centers.size());
  Eigen::MatrixXd k(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    k(i, i) = basis(0.0);
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double v = basis((centers[size_t(i)] - centers[size_t(j)]).norm());
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

namespace {

struct NearestPair
{
  size_t i{0};
  size_t j{0};
  double distance{std::numeric_limits<double>::infinity()};
};

NearestPair nearestPair(std::span<const Eigen::Vector2d> centers)
{
  NearestPair best;
  for (size_t j = 1; j < centers.size(); ++j)
    for (size_t i = 0; i < j; ++i) {
      const double d = (centers[i] - centers[j]).norm();
      if (d < best.distance)
        best = {i, j, d};
    }
  return best;
}

[[noreturn]] void throwSingular(std::span<const Eigen::Vector2d> centers)
{
  const NearestPair p = nearestPair(centers);
  throw SingularSystemError(p.i, p.j, p.distance);
}

} // namespace

RbfModel solveWeights(std::span<const Eigen::Vector2d> centers, std::span<const double> values,
    const RbfBasis &basis)
{
  if (centers.size() != values.size())
    throw ArgumentError("centers and values differ in length");
  if (centers.empty())
    throw ArgumentError("at least one center is required");
  if (!(basis.shape > 0.0) || !std::isfinite(basis.shape))
    throw ArgumentError("basis shape parameter must be positive and finite");
  for (const auto &c : centers)
    if (!c.allFinite())
      throw ArgumentError("centers must be finite");

  const auto m = Eigen::Index(centers.size());
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    y[i] = values[size_t(i)];
    if (!std::isfinite(y[i]))
      throw ArgumentError("values must be finite");
  }

  if (nearestPair(centers).distance < 1e-6)
    throwSingular(centers);

  const Eigen::MatrixXd k = kernelMatrix(centers, basis);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(k);
  const double maxNorm = k.cwiseAbs().maxCoeff();
  if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() < kSingularPivotRatio * maxNorm)
    throwSingular(centers);

  Eigen::VectorXd w = lu.solve(y);
  for (int step = 0; step < 2; ++step)
    w += lu.solve(y - k * w);

  RbfModel model;
  model.centers_.assign(centers.begin(), centers.end());
  model.weights_ = std::move(w);
  model.values_ = std::move(y);
  model.basis_ = basis;
  model.residual_ = (k * model.weights_ - model.values_).cwiseAbs().maxCoeff();
  return model;
}

Eigen::Vector2d ScalarGrid::latticePoint(size_t i, size_t j) const
{
  const auto lattice = [](double lo, double hi, size_t k, size_t n) {
    return k + 1 == n ? hi : lo + (hi - lo) * double(k) / double(n - 1);
  };
  return {lattice(bounds.xMin, bounds.xMax, i, xRes), lattice(bounds.zMin, bounds.zMax, j, zRes)};
}

ScalarGrid evaluateGrid(const RbfModel &model, const GridBounds &bounds, size_t xRes, size_t zRes)
{
  if (!(bounds.xMin < bounds.xMax) || !(bounds.zMin < bounds.zMax)
      || !std::isfinite(bounds.xMin) || !std::isfinite(bounds.xMax)
      || !std::isfinite(bounds.zMin) || !std::isfinite(bounds.zMax))
    throw ArgumentError("grid bounds are degenerate");
  if (xRes < 2 || zRes < 2)
    throw ArgumentError("grid resolution must be at least 2 per axis");

  ScalarGrid g;
  g.bounds = bounds;
  g.xRes = xRes;
  g.zRes = zRes;
  g.values.resize(xRes * zRes);
  for (size_t j = 0; j < zRes; ++j)
    for (size_t i = 0; i < xRes; ++i)
      g.values[j * xRes + i] = model(g.latticePoint(i, j));
  return g;
}

} // namespace stereocam
