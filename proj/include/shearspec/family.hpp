#pragma once

#include <shearspec/error.hpp>

namespace shearspec {

// Monomial well selector: order n in {1, 2} and dimensionless strength k.
// For n=1 the Schrodinger problem is written with E = 2mEphys/hbar^2 and
// k = 2m*kappa/hbar^2; for n=2 with E = Ephys/(hbar*omega) and
// k = sqrt(2m*omega/hbar).  Those maps live in documentation only; nothing
// here ever sees m, hbar or omega.
struct MonomialFamily {
  int order;
  double k;

  MonomialFamily(int order_, double k_);
};

MonomialFamily linear_family(double k = 1.0);
MonomialFamily harmonic_family(double k = 1.0);

// Shearing parameter nu in (1/2, 1] with its conjugate nu' = nu/(2nu-1)
// precomputed, so downstream code never redoes the cancellation-prone
// 1/(2nu-1).  Values of nu at or below 1/2 + 1e-6 are rejected here; the
// nu = 1/2 impenetrable-barrier limit is served by a dedicated closed-form
// path in the spectrum module instead of a diverging conjugate.
struct ShearParam {
  double nu;
  double nu_conjugate;

  explicit ShearParam(double nu_);
};

// Roots of E = U(x): a < 0 < b.  The width b - a depends only on (n, k, E),
// never on nu; that is the defining property of the family.
struct TurningPoints {
  double a;
  double b;
};

// Classical-view potential k*(nu*|x|)^n for x >= 0 and k*(nu'*|x|)^n for
// x < 0, continuous with value 0 at the origin.
double potential_value(const MonomialFamily& fam, const ShearParam& s,
                       double x);

// Potential in the quantum unit scheme used by the spectral and
// eigenfunction machinery: n=1 keeps k*nu*x (same units as the classical
// view), n=2 becomes (nu*x)^2/4 with the coordinate already scaled by k, so
// harmonic eigenvalues come out in hbar*omega units and are k-free.
double quantum_potential_value(const MonomialFamily& fam, const ShearParam& s,
                               double x);

// Closed-form turning points b = E^{1/n}/(k^{1/n} nu),
// a = -E^{1/n} (2nu-1)/(k^{1/n} nu) of the classical-view potential.
TurningPoints turning_points(const MonomialFamily& fam, const ShearParam& s,
                             double E);

// Turning points of quantum_potential_value at energy E.
TurningPoints quantum_turning_points(const MonomialFamily& fam,
                                     const ShearParam& s, double E);

// nu/(2nu-1).  Involution on (1/2, infinity); restricted here to the
// family's nu range.
double conjugate_shear(double nu);

}  // namespace shearspec
