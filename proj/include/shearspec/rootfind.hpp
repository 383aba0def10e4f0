#pragma once

#include <functional>

#include <shearspec/error.hpp>

namespace shearspec {

// Brent-style root refinement on a bracketing interval: f(lo) and f(hi)
// must have opposite signs (a zero endpoint is returned as-is).  Combines
// inverse quadratic interpolation, secant and bisection steps; terminates
// when the bracket shrinks below xtol_abs + xtol_rel*|x|.  Throws
// BracketError when the input does not bracket a sign change.
double refine_root(const std::function<double(double)>& f, double lo,
                   double hi, double xtol_abs = 1e-12,
                   double xtol_rel = 1e-14);

}  // namespace shearspec
