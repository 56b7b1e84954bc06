#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace su21 {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod 7/15 on [a, b].  Known kinks in `splits` become
/// initial subdivision points.  Deterministic: fixed node order, serial
/// left-to-right accumulation.
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                        double tol, const std::vector<double>& splits = {},
                        int max_depth = 40);

/// Nested adaptive quadrature over a box, innermost axis first in the
/// integrand's argument order f(x0, x1, x2).
QuadResult integrate_3d(const std::function<double(double, double, double)>& f,
                        const std::array<std::pair<double, double>, 3>& box, double tol);

}  // namespace su21
