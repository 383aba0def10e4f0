#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <shearspec/error.hpp>
#include <shearspec/oracle.hpp>
#include <shearspec/spectrum.hpp>

#include "airy_reference.hpp"

namespace ss = shearspec;

TEST_SUITE("spectrum") {

TEST_CASE("symmetric oscillator levels are exactly half-integers") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const std::vector<ss::EnergyLevel> lv =
      ss::find_levels(har, ss::ShearParam(1.0), 4);
  REQUIRE(lv.size() == 5);
  for (int n = 0; n < 5; ++n) {
    CAPTURE(n);
    CHECK(std::fabs(lv[n].E - (n + 0.5)) < 1e-10);
    CHECK(lv[n].n == n);
    CHECK(lv[n].residual < 1e-10);
  }
}

TEST_CASE("symmetric linear well interleaves the airy zero families") {
  const ss::MonomialFamily lin = ss::linear_family(1.0);
  const std::vector<ss::EnergyLevel> lv =
      ss::find_levels(lin, ss::ShearParam(1.0), 3);
  // even levels at zeros of Ai', odd at zeros of Ai (independent oracle)
  CHECK(std::fabs(lv[0].E + airyref::zero(true, 1)) < 1e-10);
  CHECK(std::fabs(lv[1].E + airyref::zero(false, 1)) < 1e-10);
  CHECK(std::fabs(lv[2].E + airyref::zero(true, 2)) < 1e-10);
  CHECK(std::fabs(lv[3].E + airyref::zero(false, 2)) < 1e-10);
}

TEST_CASE("oscillator matching exponents") {
  const ss::OscillatorMatch om(ss::ShearParam(0.6), 1.5);
  CHECK(om.sigma_plus == doctest::Approx(1.5 / 0.6 - 0.5));
  CHECK(om.mu == doctest::Approx(3.0));
  CHECK(om.sigma_minus == doctest::Approx(0.0));
}

TEST_CASE("oscillator determinant vanishes exactly on the nu=1 grid") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const ss::ShearParam sym(1.0);
  for (int n = 0; n < 6; ++n) {
    CAPTURE(n);
    CHECK(ss::f_oscillator(har, sym, n + 0.5) == 0.0);
    CHECK(ss::f_oscillator(har, sym, n + 0.25) != 0.0);
  }
}

TEST_CASE("linear determinant vanishes at the airy zeros for nu=1") {
  const ss::ShearParam sym(1.0);
  const double a1 = airyref::zero(false, 1);
  CHECK(std::fabs(ss::f_linear(ss::linear_family(1.0), sym, -a1)) < 1e-12);
  const double ap1 = airyref::zero(true, 1);
  CHECK(std::fabs(ss::f_linear(ss::linear_family(1.0), sym, -ap1)) < 1e-12);
}

TEST_CASE("sheared harmonic levels match the grid oracle tables") {
  // Frozen Richardson-extrapolated finite-difference values.
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const struct {
    double nu;
    double E[5];
  } table[] = {
      {0.51, {0.65291436, 1.61214674, 2.58581875, 3.56667486, 4.55195551}},
      {0.60, {0.54316809, 1.5, 2.49216408, 3.49541844, 4.5}},
      {0.75, {0.50896449, 1.49501833, 2.50109873, 3.50061102, 4.49923059}},
      {0.90, {0.5009522, 1.49928501, 2.50047372, 3.49968231, 4.50021125}},
  };
  for (const auto& row : table) {
    CAPTURE(row.nu);
    const std::vector<ss::EnergyLevel> lv =
        ss::find_levels(har, ss::ShearParam(row.nu), 4);
    for (int n = 0; n < 5; ++n) {
      CAPTURE(n);
      CHECK(std::fabs(lv[n].E - row.E[n]) < 2e-7 * row.E[n]);
    }
  }
}

TEST_CASE("exact resonances at nu = 0.6 sit at half-integers") {
  // 1/nu + 1/nu' = 2 makes E = 1.5 and E = 4.5 exact eigenvalues at
  // nu = 0.6: both matching exponents turn integer simultaneously.
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const std::vector<ss::EnergyLevel> lv =
      ss::find_levels(har, ss::ShearParam(0.6), 4);
  CHECK(std::fabs(lv[1].E - 1.5) < 1e-12);
  CHECK(std::fabs(lv[4].E - 4.5) < 1e-12);
}

TEST_CASE("levels are strictly increasing with positive energies") {
  for (int order : {1, 2}) {
    const ss::MonomialFamily fam(order, 1.0);
    for (double nu : {0.505, 0.58, 0.77, 1.0}) {
      CAPTURE(order);
      CAPTURE(nu);
      const std::vector<ss::EnergyLevel> lv =
          ss::find_levels(fam, ss::ShearParam(nu), 5);
      double prev = 0.0;
      for (const ss::EnergyLevel& l : lv) {
        CHECK(l.E > prev);
        CHECK(l.residual < 1e-10);
        prev = l.E;
      }
    }
  }
}

TEST_CASE("sheared linear levels match a fresh oracle run") {
  const ss::MonomialFamily lin = ss::linear_family(1.0);
  const ss::ShearParam s(0.7);
  const std::vector<ss::EnergyLevel> lv = ss::find_levels(lin, s, 3);
  const std::vector<double> ev = ss::lowest_eigenvalues_richardson(
      [&](int n) {
        return ss::discretize(lin, s, 30.0, n,
                              ss::OracleBoundary::dirichlet_full_line, 8.0);
      },
      2501, 4);
  for (int n = 0; n < 4; ++n) {
    CAPTURE(n);
    CHECK(std::fabs(lv[n].E - ev[n]) < 5e-6 * ev[n]);
  }
}

TEST_CASE("dirichlet limit closed forms") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const std::vector<ss::EnergyLevel> lh = ss::find_levels_dirichlet(har, 2);
  CHECK(lh[0].E == doctest::Approx(0.75));
  CHECK(lh[1].E == doctest::Approx(1.75));
  CHECK(lh[2].E == doctest::Approx(2.75));
  for (double k : {1.0, 2.0}) {
    const ss::MonomialFamily lin = ss::linear_family(k);
    const std::vector<ss::EnergyLevel> ll = ss::find_levels_dirichlet(lin, 1);
    const double scale = std::pow(0.5 * k, 2.0 / 3.0);
    CHECK(std::fabs(ll[0].E + scale * airyref::zero(false, 1)) < 1e-10);
    CHECK(std::fabs(ll[1].E + scale * airyref::zero(false, 2)) < 1e-10);
  }
}

TEST_CASE("airy zero helper against the reference bisection") {
  for (int j = 1; j <= 4; ++j) {
    CAPTURE(j);
    CHECK(std::fabs(ss::airy_zero(j) - airyref::zero(false, j)) < 1e-12);
  }
  CHECK_THROWS_AS(ss::airy_zero(0), ss::DomainError);
}

TEST_CASE("sweep emits ordered rows and normalizes against nu = 1") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const std::vector<double> grid = {0.5, 0.6, 0.8, 1.0};
  const std::vector<ss::SweepRow> rows = ss::sweep(har, grid, 2, 2);
  REQUIRE(rows.size() == 12);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].nu == grid[i / 3]);
    CHECK(rows[i].n == (int)(i % 3));
    CHECK(!rows[i].failed);
  }
  CHECK(rows[0].E == doctest::Approx(0.75));          // Dirichlet path
  CHECK(rows[0].E_normalized == doctest::Approx(1.5));
  CHECK(rows[9].E_normalized == doctest::Approx(1.0));
  CHECK(rows[10].E_normalized == doctest::Approx(1.0));
}

TEST_CASE("sweep is deterministic across thread counts") {
  const ss::MonomialFamily lin = ss::linear_family(1.0);
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.5 + 0.05 * i);
  const std::vector<ss::SweepRow> a = ss::sweep(lin, grid, 3, 1);
  const std::vector<ss::SweepRow> b = ss::sweep(lin, grid, 3, 7);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].E == b[i].E);  // bitwise, not approximate
    CHECK(a[i].E_normalized == b[i].E_normalized);
  }
}

TEST_CASE("sweep captures per-row failures without aborting") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  // 0.5000005 is inside [0.5, 1] but below the conditioning floor of
  // ShearParam, so its rows fail while the rest of the sweep proceeds.
  const std::vector<double> grid = {0.5000005, 0.8};
  const std::vector<ss::SweepRow> rows = ss::sweep(har, grid, 1, 1);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].failed);
  CHECK(std::isnan(rows[0].E));
  CHECK(!rows[0].message.empty());
  CHECK(!rows[2].failed);
  CHECK(rows[2].E == doctest::Approx(0.504929859944955));
}

TEST_CASE("hellmann-feynman derivative against frozen differences") {
  // Central differences of E(nu) with step 1e-4, frozen from a
  // cross-checked run; agreement is limited by the step, not the integral.
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const ss::MonomialFamily lin = ss::linear_family(1.0);
  const ss::ShearParam s(0.6);
  const std::vector<ss::EnergyLevel> lh = ss::find_levels(har, s, 2);
  const std::vector<ss::EnergyLevel> ll = ss::find_levels(lin, s, 2);
  CHECK(std::fabs(ss::hellmann_feynman_derivative(har, s, lh[0]) -
                  -0.465780523194459) < 1e-5);
  CHECK(std::fabs(ss::hellmann_feynman_derivative(har, s, lh[1]) -
                  -0.241160229824677) < 1e-5);
  CHECK(std::fabs(ss::hellmann_feynman_derivative(lin, s, ll[0]) -
                  -0.692222368102735) < 1e-5);
  CHECK(std::fabs(ss::hellmann_feynman_derivative(lin, s, ll[2]) -
                  0.418022708694732) < 1e-5);
}

TEST_CASE("hellmann-feynman rejects stale levels") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  const ss::ShearParam s(0.7);
  std::vector<ss::EnergyLevel> lv = ss::find_levels(har, s, 0);
  ss::EnergyLevel bad = lv[0];
  bad.E += 0.01;
  bad.residual = 1.0;
  CHECK_THROWS_AS(ss::hellmann_feynman_derivative(har, s, bad),
                  ss::DomainError);
}

TEST_CASE("scan options are honored") {
  const ss::MonomialFamily har = ss::harmonic_family(1.0);
  std::vector<std::string> warnings;
  ss::FindLevelsOptions opts;
  opts.warnings = &warnings;
  const std::vector<ss::EnergyLevel> lv =
      ss::find_levels(har, ss::ShearParam(0.77), 3, opts);
  CHECK(lv.size() == 4);
  CHECK(warnings.empty());
  ss::FindLevelsOptions no_verify;
  no_verify.verify_nodes = false;
  const std::vector<ss::EnergyLevel> lv2 =
      ss::find_levels(har, ss::ShearParam(0.77), 3, no_verify);
  for (int n = 0; n < 4; ++n) CHECK(lv2[n].E == lv[n].E);
}

}  // TEST_SUITE
