#include <doctest.h>

#include <cmath>
#include <vector>

#include <shearspec/error.hpp>
#include <shearspec/oracle.hpp>

namespace ss = shearspec;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_SUITE("oracle") {

TEST_CASE("free particle eigenvalues match the discrete closed form") {
  // With U = 0 the operator eigenvalues are (2 - 2 cos(j pi/(N+1)))/h^2
  // exactly; this checks the Sturm bisection, not the discretization.
  const int N = 500;
  const double h = 0.01;
  ss::TridiagonalOperator T;
  T.h = h;
  T.x0 = h;
  T.diag.assign(N, 2.0 / (h * h));
  T.offdiag.assign(N - 1, -1.0 / (h * h));
  const std::vector<double> ev = ss::lowest_eigenvalues(T, 6);
  for (int j = 1; j <= 6; ++j) {
    CAPTURE(j);
    const double want = (2.0 - 2.0 * std::cos(j * kPi / (N + 1))) / (h * h);
    CHECK(std::fabs(ev[j - 1] - want) < 1e-9 * want + 1e-9);
  }
}

TEST_CASE("sturm count brackets each eigenvalue") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const ss::TridiagonalOperator T = ss::discretize(
      har, ss::ShearParam(1.0), 12.0, 801, ss::OracleBoundary::dirichlet_full_line,
      6.0);
  const std::vector<double> ev = ss::lowest_eigenvalues(T, 4);
  for (int j = 0; j < 4; ++j) {
    CAPTURE(j);
    CHECK(ss::sturm_count(T, ev[j] - 1e-6) == j);
    CHECK(ss::sturm_count(T, ev[j] + 1e-6) == j + 1);
  }
}

TEST_CASE("grid geometry covers the interval symmetrically") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const ss::TridiagonalOperator T = ss::discretize(
      har, ss::ShearParam(0.8), 10.0, 999, ss::OracleBoundary::dirichlet_full_line,
      5.0);
  CHECK(T.h == doctest::Approx(20.0 / 1000.0));
  CHECK(T.x0 == doctest::Approx(-10.0 + T.h));
  CHECK(T.diag.size() == 999);
  const double x_last = T.x0 + 998 * T.h;
  CHECK(x_last == doctest::Approx(10.0 - T.h));
}

TEST_CASE("symmetric oscillator through the full-line oracle") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const std::vector<double> ev = ss::lowest_eigenvalues_richardson(
      [&](int n) {
        return ss::discretize(har, ss::ShearParam(1.0), 14.0, n,
                              ss::OracleBoundary::dirichlet_full_line, 8.0);
      },
      1601, 5);
  for (int j = 0; j < 5; ++j) {
    CAPTURE(j);
    CHECK(std::fabs(ev[j] - (j + 0.5)) < 1e-8);
  }
}

TEST_CASE("richardson beats the plain grid") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  auto build = [&](int n) {
    return ss::discretize(har, ss::ShearParam(1.0), 14.0, n,
                          ss::OracleBoundary::dirichlet_full_line, 8.0);
  };
  const double plain = ss::lowest_eigenvalues(build(1601), 1)[0];
  const double extr = ss::lowest_eigenvalues_richardson(build, 1601, 1)[0];
  CHECK(std::fabs(extr - 0.5) * 100.0 < std::fabs(plain - 0.5));
}

TEST_CASE("half-line limit reproduces the squeezed levels") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const std::vector<double> ev = ss::lowest_eigenvalues_richardson(
      [&](int n) { return ss::discretize_dirichlet_limit(har, 20.0, n, 8.0); },
      2001, 3);
  CHECK(std::fabs(ev[0] - 0.75) < 1e-8);
  CHECK(std::fabs(ev[1] - 1.75) < 1e-8);
  CHECK(std::fabs(ev[2] - 2.75) < 1e-8);
}

TEST_CASE("eigenvectors are normalized, oscillate correctly, and solve T") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const ss::TridiagonalOperator T = ss::discretize(
      har, ss::ShearParam(0.7), 13.0, 2001,
      ss::OracleBoundary::dirichlet_full_line, 7.0);
  const std::vector<double> ev = ss::lowest_eigenvalues(T, 4);
  for (int j = 0; j < 4; ++j) {
    CAPTURE(j);
    const std::vector<double> v = ss::eigenvector(T, ev[j]);
    double norm = 0.0, vmax = 0.0;
    for (double x : v) {
      norm += x * x;
      vmax = std::max(vmax, std::fabs(x));
    }
    CHECK(std::fabs(norm * T.h - 1.0) < 1e-10);
    int nodes = 0;
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] * v[i] < 0.0) ++nodes;
    CHECK(nodes == j);
    // residual of (T - lambda) v: dominated by the 1e-10 bisection
    // tolerance on lambda itself
    double worst = 0.0;
    const int N = (int)v.size();
    for (int i = 0; i < N; ++i) {
      double r = (T.diag[i] - ev[j]) * v[i];
      if (i > 0) r += T.offdiag[i - 1] * v[i - 1];
      if (i + 1 < N) r += T.offdiag[i] * v[i + 1];
      worst = std::max(worst, std::fabs(r));
    }
    CHECK(worst < 1e-8 * vmax);
  }
}

TEST_CASE("parity of the symmetric well survives inverse iteration") {
  // Odd eigenvectors are orthogonal to constants: a symmetric start vector
  // would stall, so this guards the seeding strategy.
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const ss::TridiagonalOperator T = ss::discretize(
      har, ss::ShearParam(1.0), 13.0, 2001,
      ss::OracleBoundary::dirichlet_full_line, 7.0);
  const std::vector<double> ev = ss::lowest_eigenvalues(T, 2);
  const std::vector<double> v = ss::eigenvector(T, ev[1]);
  const int N = (int)v.size();
  double worst = 0.0;
  for (int i = 0; i < N / 2; ++i)
    worst = std::max(worst, std::fabs(v[i] + v[N - 1 - i]));
  CHECK(worst < 1e-7);
}

TEST_CASE("wall clearance and size guards") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  CHECK_THROWS_AS(
      ss::discretize(har, ss::ShearParam(0.8), 3.0, 500,
                     ss::OracleBoundary::dirichlet_full_line, 50.0),
      ss::DomainError);
  CHECK_THROWS_AS(
      ss::discretize(har, ss::ShearParam(0.8), 12.0, 100,
                     ss::OracleBoundary::dirichlet_full_line, 5.0),
      ss::DomainError);
}

}  // TEST_SUITE
