#include <shearspec/eigenfunction.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <shearspec/quadrature.hpp>
#include <shearspec/rootfind.hpp>
#include <shearspec/specfun.hpp>

namespace shearspec {
namespace {

// Matching system at x = 0, written as
//   alpha_plus * v_plus  - alpha_minus * v_minus = 0   (value row)
//   alpha_plus * d_plus  + alpha_minus * d_minus = 0   (derivative row)
// The sign split follows from the left branch being a function of |x|.
// dscale carries the slope-factor magnitude so the two rows can be
// compared in the same units.
struct MatchRows {
  double v_plus, v_minus, d_plus, d_minus, dscale;
};

MatchRows match_rows(const MonomialFamily& fam, const ShearParam& s,
                     double E) {
  MatchRows r;
  if (fam.order == 1) {
    const double cp = std::cbrt(fam.k * s.nu);
    const double cm = std::cbrt(fam.k * s.nu_conjugate);
    const double tp = -E / (cp * cp);
    const double tm = -E / (cm * cm);
    r.v_plus = airy_ai(tp).value;
    r.v_minus = airy_ai(tm).value;
    r.d_plus = cp * airy_ai_prime(tp).value;
    r.d_minus = cm * airy_ai_prime(tm).value;
    r.dscale = std::max(cp, cm);
  } else {
    const OscillatorMatch om(s, E);
    r.v_plus = pcf_d_at0(om.sigma_plus);
    r.v_minus = pcf_d_at0(om.sigma_minus);
    r.d_plus = std::sqrt(s.nu) * pcf_d_prime_at0(om.sigma_plus);
    r.d_minus = std::sqrt(om.mu) * pcf_d_prime_at0(om.sigma_minus);
    r.dscale = std::sqrt(om.mu);
  }
  return r;
}

// Unnormalized branch values; the public evaluate multiplies by
// norm_constant and applies the tail cutoffs.
double branch_value(const PiecewiseEigenfunction& psi, double x) {
  const MonomialFamily& fam = psi.family;
  const ShearParam& s = psi.shear;
  if (fam.order == 1) {
    if (x >= 0.0) {
      const double c = std::cbrt(fam.k * s.nu);
      return psi.alpha_plus * airy_ai((fam.k * s.nu * x - psi.E) / (c * c)).value;
    }
    const double c = std::cbrt(fam.k * s.nu_conjugate);
    return psi.alpha_minus *
           airy_ai((fam.k * s.nu_conjugate * -x - psi.E) / (c * c)).value;
  }
  const OscillatorMatch om(s, psi.E);
  if (x >= 0.0)
    return psi.alpha_plus * pcf_d(om.sigma_plus, std::sqrt(s.nu) * x).value;
  return psi.alpha_minus * pcf_d(om.sigma_minus, std::sqrt(om.mu) * -x).value;
}

// Gaussian-side cutoff: smallest z with z^2/4 - sigma ln z > 34, where the
// parabolic cylinder envelope has fallen to ~1e-15.
double weber_cutoff(double sigma) {
  double z = 2.0 * std::sqrt(34.0);
  for (int i = 0; i < 8; ++i)
    z = 2.0 * std::sqrt(34.0 + sigma * std::log(std::max(z, 2.0)));
  return std::max(z, 4.0);
}

QuadratureResult norm_pieces(const PiecewiseEigenfunction& psi,
                             double lo, double hi) {
  // Split at the turning points and the matching point; between those the
  // integrand is smooth and the adaptive rule settles quickly.
  const TurningPoints tp =
      quantum_turning_points(psi.family, psi.shear, psi.E);
  double cuts[5] = {lo, tp.a, 0.0, tp.b, hi};
  auto f = [&](double x) {
    const double v = branch_value(psi, x);
    return v * v;
  };
  double total = 0.0, err = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double a = std::clamp(cuts[i], lo, hi);
    const double b = std::clamp(cuts[i + 1], lo, hi);
    if (b <= a) continue;
    const QuadratureResult q = integrate(f, a, b, 1e-12, 1e-11);
    total += q.value;
    err += q.abs_error_estimate;
  }
  return {total, err};
}

}  // namespace

PiecewiseEigenfunction build(const MonomialFamily& fam, const ShearParam& s,
                             const EnergyLevel& level) {
  if (level.family.order != fam.order || level.family.k != fam.k ||
      level.nu != s.nu)
    throw DomainError("build: level does not belong to this (family, nu)");
  if (!(level.residual < 1e-10))
    throw DomainError("build: level residual too large, not a converged root");
  if (!(level.E > 0.0)) throw DomainError("build: level energy must be > 0");

  const MatchRows r = match_rows(fam, s, level.E);
  // At an eigenvalue the 2x2 system has rank one, so each row yields a
  // null vector without any division: (v_minus, v_plus) satisfies the
  // value row identically, (d_minus, -d_plus) the derivative row.  A row
  // can degenerate to 0 = 0 (symmetric wells, resonant sigma), in which
  // case its null vector collapses; take the row with the larger
  // magnitude, measured in common units.
  const double m_val = std::fabs(r.v_plus) + std::fabs(r.v_minus);
  const double m_der = (std::fabs(r.d_plus) + std::fabs(r.d_minus)) / r.dscale;
  if (!(m_val > 0.0) && !(m_der > 0.0))
    throw MatchingError("build: both matching rows vanished at the origin");
  double ap, am;
  if (m_val >= m_der) {
    ap = r.v_minus;
    am = r.v_plus;
  } else {
    ap = r.d_minus;
    am = -r.d_plus;
  }
  // Sign convention: the decaying tail on the right is positive.
  if (ap < 0.0 || (ap == 0.0 && am < 0.0)) {
    ap = -ap;
    am = -am;
  }

  PiecewiseEigenfunction psi{fam, s, level.E, ap, am, 1.0, 0.0, 0.0};
  if (fam.order == 1) {
    // Ai at 13.5 is ~6e-16; past that the branch is numerically dead.
    const double t_cut = 13.5;
    const double cp2 = std::cbrt(fam.k * s.nu) * std::cbrt(fam.k * s.nu);
    const double cm2 = std::cbrt(fam.k * s.nu_conjugate) *
                       std::cbrt(fam.k * s.nu_conjugate);
    psi.x_max = (level.E + t_cut * cp2) / (fam.k * s.nu);
    psi.x_min = -(level.E + t_cut * cm2) / (fam.k * s.nu_conjugate);
  } else {
    const OscillatorMatch om(s, level.E);
    psi.x_max = weber_cutoff(om.sigma_plus) / std::sqrt(s.nu);
    psi.x_min = -weber_cutoff(om.sigma_minus) / std::sqrt(om.mu);
  }

  const QuadratureResult norm = norm_pieces(psi, psi.x_min, psi.x_max);
  if (!(norm.value > 0.0))
    throw QuadratureError("build: norm integral came out non-positive");
  psi.norm_constant = 1.0 / std::sqrt(norm.value);
  return psi;
}

double evaluate(const PiecewiseEigenfunction& psi, double x) {
  if (x < psi.x_min || x > psi.x_max) return 0.0;
  return psi.norm_constant * branch_value(psi, x);
}

int count_nodes(const PiecewiseEigenfunction& psi) {
  const TurningPoints tp =
      quantum_turning_points(psi.family, psi.shear, psi.E);
  const double pad = 0.05 * (tp.b - tp.a) + 0.3;
  const double lo = std::max(psi.x_min, tp.a - pad);
  const double hi = std::min(psi.x_max, tp.b + pad);
  const int M = 4000;
  const double h = (hi - lo) / M;

  std::vector<double> nodes;
  double prev_sign = 0.0, prev_x = lo;
  for (int i = 0; i <= M; ++i) {
    const double x = lo + i * h;
    const double v = evaluate(psi, x);
    const double sgn = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    if (sgn == 0.0) continue;  // exact zero on a sample is the node itself
    if (prev_sign != 0.0 && sgn != prev_sign) {
      const double root = refine_root(
          [&](double t) { return evaluate(psi, t); }, prev_x, x, 1e-12, 0.0);
      nodes.push_back(root);
    }
    prev_sign = sgn;
    prev_x = x;
  }
  for (size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i] - nodes[i - 1] < 1e-9)
      throw ResolutionError(
          "count_nodes: two sign changes within 1e-9 of each other");
  return (int)nodes.size();
}

double probability_left(const PiecewiseEigenfunction& psi) {
  if (psi.x_min >= 0.0) return 0.0;
  const QuadratureResult q = norm_pieces(psi, psi.x_min, 0.0);
  const double p = q.value * psi.norm_constant * psi.norm_constant;
  return std::min(std::max(p, 0.0), 1.0);
}

std::vector<std::pair<double, double>> dump_profile(
    const PiecewiseEigenfunction& psi, const std::vector<double>& x_grid) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(x_grid.size());
  for (double x : x_grid) rows.emplace_back(x, evaluate(psi, x));
  return rows;
}

}  // namespace shearspec
