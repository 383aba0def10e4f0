#pragma once

#include <utility>
#include <vector>

#include <shearspec/spectrum.hpp>

namespace shearspec {

// Matched piecewise closed-form bound state.  The right branch is
// alpha_plus times the decaying special function of the nu side, the left
// branch alpha_minus times its conjugate-side partner, glued at 0 by the
// matching system; norm_constant rescales the pair to unit L2 norm.
// Beyond (x_min, x_max) the state is numerically zero (|psi| < 1e-14) and
// evaluate returns exactly 0.
struct PiecewiseEigenfunction {
  MonomialFamily family;
  ShearParam shear;
  double E;
  double alpha_plus;
  double alpha_minus;
  double norm_constant;
  double x_min;
  double x_max;
};

// Solves the two-row matching system at the converged level and normalizes.
// Each row of the rank-one system yields the amplitude pair directly, with
// no division; at symmetric or resonant parameters one row degenerates to
// 0 = 0 and the other still determines the state, so the larger row wins.
// Throws MatchingError only if both rows vanish.  The sign convention is a
// positive right-hand tail.
PiecewiseEigenfunction build(const MonomialFamily& fam, const ShearParam& s,
                             const EnergyLevel& level);

double evaluate(const PiecewiseEigenfunction& psi, double x);

// Strict sign changes of psi across the classically allowed region; equals
// the level index.  Throws ResolutionError if two nodes sit closer than
// 1e-9.
int count_nodes(const PiecewiseEigenfunction& psi);

// Integral of |psi|^2 over x < 0.
double probability_left(const PiecewiseEigenfunction& psi);

std::vector<std::pair<double, double>> dump_profile(
    const PiecewiseEigenfunction& psi, const std::vector<double>& x_grid);

}  // namespace shearspec
