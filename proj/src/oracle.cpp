#include <shearspec/oracle.hpp>

#include <cmath>
#include <string>

namespace shearspec {
namespace {

void check_wall(double u_wall, double E_max_hint, double where) {
  if (!(u_wall > E_max_hint + 10.0))
    throw DomainError(
        "discretize: domain too small, U(" + std::to_string(where) + ") = " +
        std::to_string(u_wall) + " does not clear E_max + 10 = " +
        std::to_string(E_max_hint + 10.0));
}

TridiagonalOperator assemble(const std::function<double(double)>& U, double x0,
                             double h, int N) {
  TridiagonalOperator T;
  T.h = h;
  T.x0 = x0;
  T.diag.resize(N);
  T.offdiag.assign(N - 1, -1.0 / (h * h));
  for (int i = 0; i < N; ++i) T.diag[i] = 2.0 / (h * h) + U(x0 + i * h);
  return T;
}

}  // namespace

TridiagonalOperator discretize(const MonomialFamily& fam, const ShearParam& s,
                               double L, int N, OracleBoundary boundary,
                               double E_max_hint) {
  if (N < 200) throw DomainError("discretize: need at least 200 grid points");
  if (!(L > 0.0)) throw DomainError("discretize: L must be positive");
  auto U = [&](double x) { return quantum_potential_value(fam, s, x); };
  if (boundary == OracleBoundary::dirichlet_full_line) {
    check_wall(U(-L), E_max_hint, -L);
    check_wall(U(L), E_max_hint, L);
    const double h = 2.0 * L / (N + 1);
    return assemble(U, -L + h, h, N);
  }
  check_wall(U(L), E_max_hint, L);
  const double h = L / (N + 1);
  return assemble(U, h, h, N);
}

TridiagonalOperator discretize_dirichlet_limit(const MonomialFamily& fam,
                                               double L, int N,
                                               double E_max_hint) {
  if (N < 200) throw DomainError("discretize: need at least 200 grid points");
  if (!(L > 0.0)) throw DomainError("discretize: L must be positive");
  // nu = 1/2 exactly; only the right half-line survives.
  auto U = [&](double x) {
    const double u = 0.5 * x;
    return fam.order == 1 ? fam.k * u : 0.25 * u * u;
  };
  check_wall(U(L), E_max_hint, L);
  const double h = L / (N + 1);
  return assemble(U, h, h, N);
}

int sturm_count(const TridiagonalOperator& T, double lambda) {
  const int N = (int)T.diag.size();
  int count = 0;
  double q = T.diag[0] - lambda;
  if (q == 0.0) q = -2.2e-308;
  if (q < 0.0) ++count;
  for (int i = 1; i < N; ++i) {
    const double e = T.offdiag[i - 1];
    q = T.diag[i] - lambda - e * e / q;
    if (q == 0.0) q = -2.2e-308;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& T, int m) {
  const int N = (int)T.diag.size();
  if (m < 1 || m > N)
    throw DomainError("lowest_eigenvalues: m out of range");
  // Gershgorin bounds enclose the whole spectrum.
  double glo = T.diag[0], ghi = T.diag[0];
  for (int i = 0; i < N; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(T.offdiag[i - 1]);
    if (i < N - 1) r += std::fabs(T.offdiag[i]);
    glo = std::min(glo, T.diag[i] - r);
    ghi = std::max(ghi, T.diag[i] + r);
  }
  std::vector<double> out(m);
  for (int j = 0; j < m; ++j) {
    double lo = glo, hi = ghi;
    // smallest lambda with at least j+1 eigenvalues below it
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // spacing underflow
      if (sturm_count(T, mid) >= j + 1)
        hi = mid;
      else
        lo = mid;
    }
    out[j] = 0.5 * (lo + hi);
  }
  return out;
}

std::vector<double> eigenvector(const TridiagonalOperator& T, double lambda) {
  const int N = (int)T.diag.size();
  // Partially pivoted LU of the shifted matrix; pivoting introduces one
  // extra superdiagonal of fill.
  std::vector<double> sub(N, 0.0), dia(N), sup(N, 0.0), fill(N, 0.0);
  std::vector<int> swapped(N, 0);
  for (int i = 0; i < N; ++i) dia[i] = T.diag[i] - lambda;
  for (int i = 0; i + 1 < N; ++i) sup[i] = sub[i + 1] = T.offdiag[i];

  std::vector<double> low(N, 0.0);  // elimination multipliers
  for (int i = 0; i + 1 < N; ++i) {
    if (std::fabs(sub[i + 1]) > std::fabs(dia[i])) {
      std::swap(dia[i], sub[i + 1]);
      std::swap(sup[i], dia[i + 1]);
      if (i + 2 < N) std::swap(fill[i], sup[i + 1]);
      swapped[i] = 1;
    }
    double piv = dia[i];
    if (piv == 0.0) piv = dia[i] = 1e-300;
    const double mult = sub[i + 1] / piv;
    low[i] = mult;
    dia[i + 1] -= mult * sup[i];
    if (i + 2 < N) sup[i + 1] -= mult * fill[i];
  }
  if (dia[N - 1] == 0.0) dia[N - 1] = 1e-300;

  auto solve = [&](std::vector<double>& rhs) {
    for (int i = 0; i + 1 < N; ++i) {
      if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= low[i] * rhs[i];
    }
    for (int i = N - 1; i >= 0; --i) {
      double v = rhs[i];
      if (i + 1 < N) v -= sup[i] * rhs[i + 1];
      if (i + 2 < N) v -= fill[i] * rhs[i + 2];
      rhs[i] = v / dia[i];
    }
  };

  // A constant start vector is exactly orthogonal to every odd-parity
  // mode on a symmetric grid; seed with a fixed LCG stream instead.
  std::vector<double> v(N), prev;
  unsigned long long state = 42;
  for (int i = 0; i < N; ++i) {
    state = (6364136223846793005ull * state + 1442695040888963407ull);
    v[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  }
  for (int iter = 0; iter < 50; ++iter) {
    prev = v;
    solve(v);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw ConvergenceError("eigenvector: inverse iteration broke down");
    for (double& x : v) x /= norm;
    if (iter >= 2) {
      double dot = 0.0;
      for (int i = 0; i < N; ++i) dot += v[i] * prev[i];
      if (1.0 - std::fabs(dot) < 1e-12) break;
      if (iter == 49)
        throw ConvergenceError(
            "eigenvector: no convergence after 50 inverse iterations");
    }
  }
  // Fix global sign and rescale to the grid measure.
  double scale = 0.0;
  for (double x : v) scale += x * x;
  scale = std::sqrt(scale * T.h);
  int lead = 0;
  for (int i = 0; i < N; ++i)
    if (std::fabs(v[i]) > std::fabs(v[lead])) lead = i;
  const double sgn = v[lead] >= 0.0 ? 1.0 : -1.0;
  for (double& x : v) x *= sgn / scale;
  return v;
}

std::vector<double> lowest_eigenvalues_richardson(
    const std::function<TridiagonalOperator(int)>& build, int N, int m) {
  // Odd N keeps x = 0 on a node of both grids.  The sheared potential has
  // a kink there; when the kink sits between nodes on one grid and on a
  // node of the other, the two h^2 error coefficients differ and the
  // extrapolation loses most of its benefit.
  N += (N % 2 == 0) ? 1 : 0;
  const std::vector<double> coarse = lowest_eigenvalues(build(N), m);
  const std::vector<double> fine = lowest_eigenvalues(build(2 * N + 1), m);
  std::vector<double> out(m);
  for (int j = 0; j < m; ++j) out[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
  return out;
}

}  // namespace shearspec
