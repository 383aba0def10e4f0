#pragma once

#include <string>
#include <vector>

#include <shearspec/family.hpp>

namespace shearspec {

struct EnergyLevel {
  MonomialFamily family;
  double nu;
  int n;           // level index, ascending from 0
  double E;        // dimensionless eigenvalue in the quantum unit scheme
  double residual; // |spectral function| at E
};

// Index bookkeeping for the sheared oscillator matching problem.
struct OscillatorMatch {
  double sigma_plus;   // E/nu - 1/2
  double mu;           // nu/(2nu - 1)
  double sigma_minus;  // E/mu - 1/2

  OscillatorMatch(const ShearParam& s, double E);
};

// Spectral function for the order-1 family.  Zero exactly at the
// eigenvalues.  The cube-root prefactor uses the real negative branch so
// that nu = 1 collapses to -2 Ai(-E/k^{2/3}) Ai'(-E/k^{2/3}).
double f_linear(const MonomialFamily& fam, const ShearParam& s, double E);

// Spectral function for the order-2 family, assembled from reciprocal
// gammas so it stays entire in E: poles of the gamma closed forms become
// exact zeros of the factors instead of infinities.  Equals
// sqrt(2nu-1) D'_{sigma(nu)}(0) D_{sigma(mu)}(0)
//   + D_{sigma(nu)}(0) D'_{sigma(mu)}(0)
// times the positive smooth factor pi 2^E Gamma-normalization carried
// inside; the zero set is the spectrum.
double f_oscillator(const MonomialFamily& fam, const ShearParam& s, double E);

struct FindLevelsOptions {
  bool verify_nodes = true;       // rebuild each state and count its nodes
  int max_step_halvings = 6;      // rescan refinement before giving up
  double scan_pad_spacings = 3.0; // window extends past WKB(n_max) by this
  std::vector<std::string>* warnings = nullptr;  // near-degeneracy reports
};

// Levels 0..n_max of the transcendental spectral equation: WKB-sized scan
// window, sign-change bracketing (with exact grid zeros honored as roots),
// Brent refinement to 1e-12, ascending index assignment, and node-count
// verification of every returned state.
std::vector<EnergyLevel> find_levels(const MonomialFamily& fam,
                                     const ShearParam& s, int n_max,
                                     const FindLevelsOptions& opts = {});

// Closed-form spectrum of the nu = 1/2 impenetrable-barrier limit: zeros of
// Ai for order 1 (E_j = (k/2)^{2/3} |a_{j+1}|), the odd half of the
// squeezed symmetric oscillator for order 2 (E_j = j + 3/4).  Not a
// nu -> 1/2 limit of the matching equations; the conjugate parameter never
// appears.
std::vector<EnergyLevel> find_levels_dirichlet(const MonomialFamily& fam,
                                               int n_max);

struct SweepRow {
  double nu;
  int n;
  double E;
  double E_normalized;  // E divided by the nu = 1 level of the same index
  bool failed;
  std::string message;
};

// Spectrum across a nu grid with per-row failure capture.  Rows come out
// ordered by (grid position, n) no matter how many worker threads run; a
// failing grid point marks its rows failed and the sweep continues.
std::vector<SweepRow> sweep(const MonomialFamily& fam,
                            const std::vector<double>& nu_grid, int n_max,
                            int threads = 1);

// dE/dnu at a converged level via the parameter-derivative expectation
// value <psi| dU/dnu |psi> on the normalized eigenfunction.
double hellmann_feynman_derivative(const MonomialFamily& fam,
                                   const ShearParam& s,
                                   const EnergyLevel& level);

// j-th negative zero of Ai (j >= 1), by bracketed bisection on airy_ai.
double airy_zero(int j);

}  // namespace shearspec
