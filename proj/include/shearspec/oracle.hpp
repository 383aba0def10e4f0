#pragma once

#include <functional>
#include <vector>

#include <shearspec/family.hpp>

namespace shearspec {

// Symmetric tridiagonal discretization of -psi'' + U(x) psi on a uniform
// grid, Dirichlet walls at both artificial boundaries.  The potential is
// the quantum-scheme one, so eigenvalues land in the same units as the
// transcendental spectra they are meant to arbitrate.
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;  // one shorter than diag
  double h;
  double x0;  // coordinate of grid point 0
};

enum class OracleBoundary { dirichlet_full_line, dirichlet_half_line };

// Grid spans (-L, L) exclusive for the full line, (0, L) for the half line,
// with N interior points.  Requires U at the clipped boundary to clear
// E_max_hint + 10 so no bound state of interest leaks; E_max_hint is the
// caller's top target energy.
TridiagonalOperator discretize(const MonomialFamily& fam, const ShearParam& s,
                               double L, int N, OracleBoundary boundary,
                               double E_max_hint);

// Half-line Dirichlet discretization of the nu = 1/2 limit, where the
// conjugate parameter has left the building: U on x > 0 uses shear factor
// exactly 1/2 (order 1) or the matching quarter-strength quadratic
// (order 2).
TridiagonalOperator discretize_dirichlet_limit(const MonomialFamily& fam,
                                               double L, int N,
                                               double E_max_hint);

// m smallest eigenvalues by Sturm-sequence counting plus bisection, each to
// 1e-10 absolute.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& T, int m);

// Number of eigenvalues strictly below lambda (the Sturm count).
int sturm_count(const TridiagonalOperator& T, double lambda);

// Inverse-iteration eigenvector for an eigenvalue estimate accurate to
// ~1e-8, L2-normalized with the grid measure h.
std::vector<double> eigenvector(const TridiagonalOperator& T, double lambda);

// Richardson-extrapolated lowest eigenvalues: build(N) and build(2N+1)
// produce the same problem on grids whose spacing halves exactly, and the
// (4 E_fine - E_coarse)/3 combination kills the O(h^2) error of the
// central-difference scheme.
std::vector<double> lowest_eigenvalues_richardson(
    const std::function<TridiagonalOperator(int)>& build, int N, int m);

}  // namespace shearspec
