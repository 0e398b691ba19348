#pragma once

#include <vector>

#include "tbdoa/types.hpp"

namespace tbdoa {

// Roots of c[0] + c[1] z + ... + c[n] z^n via the companion-matrix
// eigenvalues. Leading coefficients below tol * max|c| are trimmed; trailing
// zero coefficients contribute roots at the origin.
std::vector<Complex> polynomial_roots(const CVec& coeffs, double tol = 1e-12);

// Laurent polynomial F(z) = sum_{d=-D..D} c_d z^d restricted to the unit
// circle, i.e. the real trigonometric function F(t) = sum c_d e^{i d t}.
// Coefficients must satisfy c_{-d} = conj(c_d) so F is real.
class LaurentOnCircle {
 public:
  // coeffs has length 2D+1 and stores c_{-D}..c_{D}.
  explicit LaurentOnCircle(CVec coeffs);

  double value(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

  // Ordinary polynomial z^D F(z) of degree 2D (ascending coefficients).
  CVec cleared_polynomial() const;

  // Newton polish of a local minimum of F(t) starting from t0.
  double refine_minimum(double t0, int max_iters = 8) const;

 private:
  CVec coeffs_;  // c_{-D}..c_{D}
  Index half_degree_;
};

// Among the given roots, the one minimizing ||z|-1|. Throws when the best
// distance exceeds max_distance (no admissible unit-circle root).
Complex nearest_unit_circle_root(const std::vector<Complex>& roots, double max_distance = 0.5);

}  // namespace tbdoa
