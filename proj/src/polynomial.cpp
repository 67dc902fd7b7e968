#include "secnoma/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace secnoma::poly {

namespace {

constexpr double kNegligibleLeading = 1e-14;
constexpr double kImagTolerance = 1e-9;

double evaluate_derivative(std::span<const double> coeffs, double x) {
  const std::size_t degree = coeffs.size() - 1;
  double acc = 0.0;
  for (std::size_t i = 0; i < degree; ++i) {
    acc = acc * x + coeffs[i] * static_cast<double>(degree - i);
  }
  return acc;
}

}  // namespace

double evaluate(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (const double c : coeffs) {
    acc = acc * x + c;
  }
  return acc;
}

std::vector<double> real_roots(std::span<const double> coeffs) {
  double scale = 0.0;
  for (const double c : coeffs) {
    scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0 || !std::isfinite(scale)) {
    return {};
  }
  std::vector<double> scaled(coeffs.begin(), coeffs.end());
  for (double& c : scaled) {
    c /= scale;
  }

  std::size_t first = 0;
  while (first < scaled.size() && std::abs(scaled[first]) <= kNegligibleLeading) {
    ++first;
  }
  const std::span<const double> reduced(scaled.data() + first, scaled.size() - first);
  const std::size_t degree = reduced.size() - 1;

  std::vector<double> roots;
  if (degree == 1) {
    roots.push_back(-reduced[1] / reduced[0]);
  } else if (degree >= 2) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (std::size_t j = 0; j < degree; ++j) {
      companion(0, j) = -reduced[j + 1] / reduced[0];
    }
    for (std::size_t i = 1; i < degree; ++i) {
      companion(i, i - 1) = 1.0;
    }
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    for (const auto& z : solver.eigenvalues()) {
      if (std::abs(z.imag()) < kImagTolerance * (1.0 + std::abs(z.real()))) {
        roots.push_back(z.real());
      }
    }
  }

  const std::span<const double> full(scaled);
  for (double& r : roots) {
    for (int step = 0; step < 2; ++step) {
      const double slope = evaluate_derivative(full, r);
      if (slope == 0.0 || !std::isfinite(slope)) {
        break;
      }
      const double next = r - evaluate(full, r) / slope;
      // Near repeated roots Newton can overshoot; keep only improving steps.
      if (!std::isfinite(next) || std::abs(evaluate(full, next)) > std::abs(evaluate(full, r))) {
        break;
      }
      r = next;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace secnoma::poly
