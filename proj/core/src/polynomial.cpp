#include "tbdoa/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace tbdoa {

std::vector<Complex> polynomial_roots(const CVec& coeffs, double tol) {
  if (coeffs.size() == 0) throw std::invalid_argument("polynomial_roots: empty coefficient vector");
  double max_abs = 0.0;
  for (Index i = 0; i < coeffs.size(); ++i) max_abs = std::max(max_abs, std::abs(coeffs[i]));
  if (max_abs == 0.0) throw std::invalid_argument("polynomial_roots: zero polynomial");

  Index hi = coeffs.size() - 1;
  while (hi > 0 && std::abs(coeffs[hi]) <= tol * max_abs) --hi;
  Index lo = 0;
  while (lo < hi && std::abs(coeffs[lo]) <= tol * max_abs) ++lo;

  std::vector<Complex> roots(static_cast<size_t>(lo), Complex{0.0, 0.0});
  const Index degree = hi - lo;
  if (degree == 0) return roots;

  CMat companion = CMat::Zero(degree, degree);
  for (Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Index i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[lo + i] / coeffs[hi];

  Eigen::ComplexEigenSolver<CMat> es(companion, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("polynomial_roots: eigen solver failed to converge");
  for (Index i = 0; i < degree; ++i) roots.push_back(es.eigenvalues()[i]);
  return roots;
}

LaurentOnCircle::LaurentOnCircle(CVec coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 == 0) throw std::invalid_argument("LaurentOnCircle: coefficient count must be odd");
  half_degree_ = coeffs_.size() / 2;
}

double LaurentOnCircle::value(double t) const {
  double acc = coeffs_[half_degree_].real();
  for (Index d = 1; d <= half_degree_; ++d)
    acc += 2.0 * (coeffs_[half_degree_ + d] * std::exp(kJ * (static_cast<double>(d) * t))).real();
  return acc;
}

double LaurentOnCircle::derivative(double t) const {
  double acc = 0.0;
  for (Index d = 1; d <= half_degree_; ++d)
    acc += 2.0 * (kJ * static_cast<double>(d) * coeffs_[half_degree_ + d] *
                  std::exp(kJ * (static_cast<double>(d) * t)))
                     .real();
  return acc;
}

double LaurentOnCircle::second_derivative(double t) const {
  double acc = 0.0;
  for (Index d = 1; d <= half_degree_; ++d)
    acc += 2.0 * (-static_cast<double>(d * d) * coeffs_[half_degree_ + d] *
                  std::exp(kJ * (static_cast<double>(d) * t)))
                     .real();
  return acc;
}

CVec LaurentOnCircle::cleared_polynomial() const { return coeffs_; }

double LaurentOnCircle::refine_minimum(double t0, int max_iters) const {
  double t = t0;
  for (int it = 0; it < max_iters; ++it) {
    const double g = derivative(t);
    const double h = second_derivative(t);
    if (!(h > 0.0)) break;  // not locally convex; keep current point
    const double step = g / h;
    t -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return t;
}

Complex nearest_unit_circle_root(const std::vector<Complex>& roots, double max_distance) {
  if (roots.empty()) throw std::runtime_error("nearest_unit_circle_root: no roots");
  double best = std::numeric_limits<double>::infinity();
  Complex best_root{0.0, 0.0};
  for (const Complex& z : roots) {
    const double d = std::abs(std::abs(z) - 1.0);
    // Conjugate-reciprocal partners share the same argument; prefer the root
    // inside the circle on ties.
    if (d < best - 1e-15 || (std::abs(d - best) <= 1e-15 && std::abs(z) < std::abs(best_root))) {
      best = d;
      best_root = z;
    }
  }
  if (best > max_distance)
    throw std::runtime_error("nearest_unit_circle_root: no root within distance " +
                             std::to_string(max_distance) + " of the unit circle");
  return best_root;
}

}  // namespace tbdoa
