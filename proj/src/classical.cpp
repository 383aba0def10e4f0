#include <shearspec/classical.hpp>

#include <cmath>

#include <shearspec/rootfind.hpp>

namespace shearspec {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Integrates g over one side of the well with the endpoint substitution
// x = outer - outer*sin^2(theta) (inner endpoint is always 0 here).  The
// inverse square root of E - U at the outer turning point turns into a
// bounded function of theta, so plain Gauss-Legendre panels converge fast.
QuadratureResult side_integral(const std::function<double(double)>& g,
                               double outer) {
  auto h = [&](double theta) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double x = outer * ct * ct;
    return g(x) * std::fabs(2.0 * outer * st * ct);
  };
  return integrate(h, 0.0, 0.5 * kPi, 1e-12, 1e-11);
}

QuadratureResult both_sides(const MonomialFamily& fam, const ShearParam& s,
                            double E,
                            const std::function<double(double)>& kernel) {
  const TurningPoints tp = turning_points(fam, s, E);
  auto g = [&](double x) {
    const double rest = std::max(E - potential_value(fam, s, x), 0.0);
    return kernel(rest);
  };
  const QuadratureResult right = side_integral(g, tp.b);
  const QuadratureResult left = side_integral(g, tp.a);
  return {left.value + right.value,
          left.abs_error_estimate + right.abs_error_estimate};
}

}  // namespace

QuadratureResult classical_period(const MonomialFamily& fam,
                                  const ShearParam& s, double E) {
  if (!(E > 0.0)) throw DomainError("classical_period: E must be positive");
  QuadratureResult r = both_sides(
      fam, s, E, [](double rest) { return 1.0 / std::sqrt(rest); });
  r.value *= std::sqrt(2.0);
  r.abs_error_estimate *= std::sqrt(2.0);
  return r;
}

QuadratureResult action_integral(const MonomialFamily& fam,
                                 const ShearParam& s, double E) {
  if (!(E > 0.0)) throw DomainError("action_integral: E must be positive");
  QuadratureResult r =
      both_sides(fam, s, E, [](double rest) { return std::sqrt(rest); });
  r.value *= 2.0;
  r.abs_error_estimate *= 2.0;
  return r;
}

double wkb_level(const MonomialFamily& fam, const ShearParam& s, int n) {
  if (n < 0) throw DomainError("wkb_level: level index must be >= 0");
  const double target = kPi * (2.0 * n + 1.0);
  // Monomial actions invert in closed form; the quadrature root-find below
  // only polishes against that guess, so the bracket hunt is short.
  const double guess =
      fam.order == 1
          ? std::pow(3.0 * target * fam.k / 8.0, 2.0 / 3.0)
          : target * std::sqrt(fam.k) / kPi;
  auto fall = [&](double E) { return action_integral(fam, s, E).value - target; };
  double lo = 0.8 * guess, hi = 1.25 * guess;
  for (int i = 0; i < 60 && fall(lo) > 0.0; ++i) lo *= 0.5;
  for (int i = 0; i < 60 && fall(hi) < 0.0; ++i) hi *= 2.0;
  if (fall(lo) > 0.0 || fall(hi) < 0.0)
    throw BracketError("wkb_level: could not bracket the action target");
  return refine_root(fall, lo, hi, 0.0, 1e-13);
}

double wkb_level_quantum(const MonomialFamily& fam, const ShearParam& s,
                         int n) {
  const double e = wkb_level(fam, s, n);
  return fam.order == 1 ? e : e / (2.0 * std::sqrt(fam.k));
}

}  // namespace shearspec
