#include <shearspec/spectrum.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

#include <shearspec/eigenfunction.hpp>
#include <shearspec/quadrature.hpp>
#include <shearspec/rootfind.hpp>
#include <shearspec/specfun.hpp>

namespace shearspec {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Closed-form WKB level in quantum units, used only to size the scan
// window and step.  These are the exact inversions of the monomial action
// integrals (J = (8/3) E^{3/2}/k and J = pi E/sqrt(k) mapped to quantum
// units); the quadrature-based wkb_level is asserted against them in tests.
double wkb_quantum_closed(const MonomialFamily& fam, int n) {
  if (fam.order == 1)
    return std::pow(3.0 * kPi * (2.0 * n + 1.0) * fam.k / 8.0, 2.0 / 3.0);
  return n + 0.5;
}

struct ScanHit {
  double E;
  double residual;
};

}  // namespace

OscillatorMatch::OscillatorMatch(const ShearParam& s, double E)
    : sigma_plus(E / s.nu - 0.5),
      mu(s.nu_conjugate),
      sigma_minus(E / s.nu_conjugate - 0.5) {}

double f_linear(const MonomialFamily& fam, const ShearParam& s, double E) {
  if (fam.order != 1)
    throw DomainError("f_linear: family must have order 1");
  if (!(E > 0.0)) throw DomainError("f_linear: E must be positive");
  const double cp = std::cbrt(fam.k * s.nu);
  const double cm = std::cbrt(fam.k * s.nu_conjugate);
  const double tp = -E / (cp * cp);
  const double tm = -E / (cm * cm);
  // real negative cube root of 1/(2nu-1)
  const double pref = -std::cbrt(1.0 / (2.0 * s.nu - 1.0));
  return pref * airy_ai(tp).value * airy_ai_prime(tm).value -
         airy_ai_prime(tp).value * airy_ai(tm).value;
}

double f_oscillator(const MonomialFamily& fam, const ShearParam& s,
                    double E) {
  if (fam.order != 2)
    throw DomainError("f_oscillator: family must have order 2");
  if (!(E > 0.0)) throw DomainError("f_oscillator: E must be positive");
  const double mu = s.nu_conjugate;
  // The D(0), D'(0) closed forms share the factor sqrt(pi) 2^{E/2nu +- 1/4};
  // collecting them and using 1/(2nu) + 1/(2mu) = 1 leaves an entire
  // function of E whose only zeros are the eigenvalues.
  const double g1 = rgamma(0.25 - 0.5 * E / s.nu);
  const double g2 = rgamma(0.75 - 0.5 * E / mu);
  const double g3 = rgamma(0.75 - 0.5 * E / s.nu);
  const double g4 = rgamma(0.25 - 0.5 * E / mu);
  return -kPi * std::exp2(E) *
         (std::sqrt(2.0 * s.nu - 1.0) * g1 * g2 + g3 * g4);
}

namespace {

// One pass over the scan grid.  Exact zeros of the spectral function do
// happen on the grid (the symmetric oscillator roots are representable
// multiples of the step and the reciprocal gammas vanish exactly there);
// such samples are roots in their own right and must not double as
// bracket endpoints.
std::vector<ScanHit> scan_grid(const MonomialFamily& fam, const ShearParam& s,
                               double step, double top) {
  auto f = [&](double E) {
    return fam.order == 1 ? f_linear(fam, s, E) : f_oscillator(fam, s, E);
  };
  std::vector<ScanHit> hits;
  double last_sign = 0.0, last_E = 0.0;
  for (long i = 1; i * step <= top; ++i) {
    const double E = i * step;
    const double fi = f(E);
    if (fi == 0.0) {
      hits.push_back({E, 0.0});
      last_sign = 0.0;
      continue;
    }
    const double sgn = fi > 0.0 ? 1.0 : -1.0;
    if (last_sign != 0.0 && sgn != last_sign) {
      // Zero tolerances let the bisection floor at one ulp of E.  The
      // spectral function is steep near shear collapse and a 1e-13 stop
      // would leave |f| above the residual contract there.
      const double root = refine_root(f, last_E, E, 0.0, 0.0);
      hits.push_back({root, std::fabs(f(root))});
    }
    last_sign = sgn;
    last_E = E;
  }
  return hits;
}

}  // namespace

std::vector<EnergyLevel> find_levels(const MonomialFamily& fam,
                                     const ShearParam& s, int n_max,
                                     const FindLevelsOptions& opts) {
  if (n_max < 0) throw DomainError("find_levels: n_max must be >= 0");
  const double spacing =
      wkb_quantum_closed(fam, n_max + 1) - wkb_quantum_closed(fam, n_max);
  const double top =
      wkb_quantum_closed(fam, n_max) + opts.scan_pad_spacings * spacing;
  double step = spacing / 8.0;

  std::string last_problem = "fewer sign changes than levels requested";
  for (int halving = 0; halving <= opts.max_step_halvings; ++halving) {
    const std::vector<ScanHit> hits = scan_grid(fam, s, step, top);
    if ((int)hits.size() >= n_max + 1) {
      std::vector<EnergyLevel> levels;
      for (int n = 0; n <= n_max; ++n)
        levels.push_back({fam, s.nu, n, hits[n].E, hits[n].residual});

      bool ok = true;
      if (opts.verify_nodes) {
        for (const EnergyLevel& lev : levels) {
          const int nodes = count_nodes(build(fam, s, lev));
          if (nodes != lev.n) {
            ok = false;
            last_problem = "node count " + std::to_string(nodes) +
                           " disagrees with level index " +
                           std::to_string(lev.n) +
                           ", a root was likely missed";
            break;
          }
        }
      }
      if (ok) {
        if (opts.warnings) {
          for (size_t i = 1; i < hits.size(); ++i)
            if (hits[i].E - hits[i - 1].E < 1e-8)
              opts.warnings->push_back(
                  "near-degenerate roots at E = " + std::to_string(hits[i].E));
        }
        return levels;
      }
    }
    step *= 0.5;
  }
  throw BracketError("find_levels: " + last_problem + " (nu = " +
                     std::to_string(s.nu) + ", order " +
                     std::to_string(fam.order) + ")");
}

std::vector<EnergyLevel> find_levels_dirichlet(const MonomialFamily& fam,
                                               int n_max) {
  if (n_max < 0)
    throw DomainError("find_levels_dirichlet: n_max must be >= 0");
  std::vector<EnergyLevel> levels;
  if (fam.order == 1) {
    const double scale = std::pow(0.5 * fam.k, 2.0 / 3.0);
    for (int n = 0; n <= n_max; ++n)
      levels.push_back({fam, 0.5, n, scale * -airy_zero(n + 1), 0.0});
  } else {
    // Odd levels of the nu = 1/2 squeezed symmetric well, E = n + 3/4.
    for (int n = 0; n <= n_max; ++n)
      levels.push_back({fam, 0.5, n, n + 0.75, 0.0});
  }
  return levels;
}

double airy_zero(int j) {
  if (j < 1) throw DomainError("airy_zero: index starts at 1");
  auto f = [](double x) { return airy_ai(x).value; };
  int found = 0;
  double last_x = -0.5, last_f = f(last_x);
  for (double x = -0.75; x > -39.75; x -= 0.25) {
    const double fx = f(x);
    if ((fx > 0.0) != (last_f > 0.0)) {
      if (++found == j) return refine_root(f, x, last_x, 1e-14, 1e-15);
    }
    last_x = x;
    last_f = fx;
  }
  throw RangeError("airy_zero: index beyond the tabulated argument range");
}

std::vector<SweepRow> sweep(const MonomialFamily& fam,
                            const std::vector<double>& nu_grid, int n_max,
                            int threads) {
  const int T = std::max(1, std::min(threads, 64));
  std::vector<std::vector<EnergyLevel>> results(nu_grid.size());
  std::vector<std::string> failures(nu_grid.size());

  std::vector<double> reference(n_max + 1);
  {
    const std::vector<EnergyLevel> ref =
        find_levels(fam, ShearParam(1.0), n_max);
    for (int n = 0; n <= n_max; ++n) reference[n] = ref[n].E;
  }

  auto work = [&](int t) {
    for (size_t i = t; i < nu_grid.size(); i += T) {
      try {
        if (nu_grid[i] == 0.5) {
          results[i] = find_levels_dirichlet(fam, n_max);
        } else {
          results[i] = find_levels(fam, ShearParam(nu_grid[i]), n_max);
        }
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < T; ++t) pool.emplace_back(work, t);
    for (std::thread& th : pool) th.join();
  }

  std::vector<SweepRow> rows;
  rows.reserve(nu_grid.size() * (n_max + 1));
  const double nan = std::nan("");
  for (size_t i = 0; i < nu_grid.size(); ++i) {
    for (int n = 0; n <= n_max; ++n) {
      if (!failures[i].empty()) {
        rows.push_back({nu_grid[i], n, nan, nan, true, failures[i]});
      } else {
        const double E = results[i][n].E;
        rows.push_back({nu_grid[i], n, E, E / reference[n], false, ""});
      }
    }
  }
  return rows;
}

double hellmann_feynman_derivative(const MonomialFamily& fam,
                                   const ShearParam& s,
                                   const EnergyLevel& level) {
  if (!(level.residual < 1e-10))
    throw DomainError(
        "hellmann_feynman_derivative: level residual too large, refine the "
        "root first");
  const PiecewiseEigenfunction psi = build(fam, s, level);

  // dU/dnu in the quantum scheme.  The left side rides on the conjugate
  // parameter, whose nu-derivative is -1/(2nu-1)^2.
  auto kernel = [&](double x) {
    if (fam.order == 1) {
      if (x >= 0.0) return fam.k * x;
      const double d = 2.0 * s.nu - 1.0;
      return fam.k * x / (d * d);
    }
    if (x >= 0.0) return 0.5 * s.nu * x * x;
    const double d = 2.0 * s.nu - 1.0;
    return -0.5 * s.nu * x * x / (d * d * d);
  };

  const TurningPoints tp = quantum_turning_points(fam, s, level.E);
  const double cuts[5] = {psi.x_min, tp.a, 0.0, tp.b, psi.x_max};
  double expectation = 0.0, norm_check = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double a = std::max(cuts[i], psi.x_min);
    const double b = std::min(cuts[i + 1], psi.x_max);
    if (b <= a) continue;
    expectation += integrate(
                       [&](double x) {
                         const double v = evaluate(psi, x);
                         return v * v * kernel(x);
                       },
                       a, b, 1e-12, 1e-11)
                       .value;
    norm_check += integrate(
                      [&](double x) {
                        const double v = evaluate(psi, x);
                        return v * v;
                      },
                      a, b, 1e-12, 1e-11)
                      .value;
  }
  if (std::fabs(norm_check - 1.0) > 1e-6)
    throw DomainError(
        "hellmann_feynman_derivative: eigenfunction norm drifted from 1");
  return expectation;
}

}  // namespace shearspec
