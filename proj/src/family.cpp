#include <shearspec/family.hpp>

#include <cmath>
#include <string>

namespace shearspec {

MonomialFamily::MonomialFamily(int order_, double k_) : order(order_), k(k_) {
  if (order != 1 && order != 2)
    throw DomainError("MonomialFamily: order must be 1 or 2, got " +
                      std::to_string(order));
  if (!(k > 0.0) || !std::isfinite(k))
    throw DomainError("MonomialFamily: strength k must be positive and finite");
}

MonomialFamily linear_family(double k) { return MonomialFamily(1, k); }

MonomialFamily harmonic_family(double k) { return MonomialFamily(2, k); }

double conjugate_shear(double nu) {
  if (!(nu > 0.5 + 1e-6) || !(nu <= 1.0))
    throw DomainError(
        "conjugate_shear: nu must lie in (1/2 + 1e-6, 1]; nu = 1/2 is the "
        "impenetrable-barrier limit served by the Dirichlet path");
  return nu / (2.0 * nu - 1.0);
}

ShearParam::ShearParam(double nu_) : nu(nu_), nu_conjugate(conjugate_shear(nu_)) {}

double potential_value(const MonomialFamily& fam, const ShearParam& s,
                       double x) {
  const double scale = x >= 0.0 ? s.nu : s.nu_conjugate;
  const double u = scale * std::fabs(x);
  return fam.order == 1 ? fam.k * u : fam.k * u * u;
}

double quantum_potential_value(const MonomialFamily& fam, const ShearParam& s,
                               double x) {
  const double scale = x >= 0.0 ? s.nu : s.nu_conjugate;
  const double u = scale * std::fabs(x);
  return fam.order == 1 ? fam.k * u : 0.25 * u * u;
}

TurningPoints turning_points(const MonomialFamily& fam, const ShearParam& s,
                             double E) {
  if (!(E > 0.0)) throw DomainError("turning_points: E must be positive");
  const double r = fam.order == 1 ? E / fam.k : std::sqrt(E / fam.k);
  // b - a = 2 r independently of nu: a = -r/nu', b = r/nu and
  // 1/nu + 1/nu' = 2.
  return {-r / s.nu_conjugate, r / s.nu};
}

TurningPoints quantum_turning_points(const MonomialFamily& fam,
                                     const ShearParam& s, double E) {
  if (!(E > 0.0))
    throw DomainError("quantum_turning_points: E must be positive");
  const double r = fam.order == 1 ? E / fam.k : 2.0 * std::sqrt(E);
  return {-r / s.nu_conjugate, r / s.nu};
}

}  // namespace shearspec
