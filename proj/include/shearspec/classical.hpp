#pragma once

#include <shearspec/family.hpp>
#include <shearspec/quadrature.hpp>

namespace shearspec {

// Classical period tau = sqrt(2) * int_a^b dx / sqrt(E - U(x)) of the
// classical-view potential, in units with 2m = 1.  Equal for every nu at
// fixed (n, k, E); that invariance is what the family construction
// guarantees and what the tests pin down.
QuadratureResult classical_period(const MonomialFamily& fam,
                                  const ShearParam& s, double E);

// Action J = 2 * int_a^b sqrt(E - U(x)) dx, strictly increasing in E and
// nu-independent like the period.
QuadratureResult action_integral(const MonomialFamily& fam,
                                 const ShearParam& s, double E);

// Solves J(E) = pi*(2n+1) for E.  The result is in the classical-view units
// of this module (potential k*(nu*x)^order).  For order 1 these coincide
// with the quantum units of the spectrum module.  For order 2 they do not:
// the quantum scheme rescales the coordinate by k, and the two eigenvalue
// scales relate through E_quantum = E_wkb / (2 sqrt(k)), which for the
// harmonic well is exact level by level.  That map is asserted in tests.
double wkb_level(const MonomialFamily& fam, const ShearParam& s, int n);

// WKB estimate already mapped onto the quantum unit scheme: order 1 passes
// through, order 2 divides by 2 sqrt(k).  This is what the spectral scan
// window is built from.
double wkb_level_quantum(const MonomialFamily& fam, const ShearParam& s,
                         int n);

}  // namespace shearspec
