#pragma once

#include <functional>

#include <shearspec/error.hpp>

namespace shearspec {

struct QuadratureResult {
  double value;
  double abs_error_estimate;
};

// Adaptive Gauss-Legendre integration of f over [a, b]: a panel is accepted
// when the two-half refinement changes it by less than
// max(abs_tol, rel_tol*|whole estimate|) scaled to the panel, otherwise it
// is bisected.  Throws QuadratureError when max_depth subdivisions cannot
// reach the tolerance.  Integrable endpoint behavior must already be
// substituted away by the caller; the nodes never touch a or b.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-10,
                           double rel_tol = 1e-10, int max_depth = 40);

}  // namespace shearspec
