// Python face of the library.  Thin: every function forwards to the C++
// core and returns plain scalars, small structs, or lists, so the module
// has no state of its own.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <shearspec/classical.hpp>
#include <shearspec/eigenfunction.hpp>
#include <shearspec/error.hpp>
#include <shearspec/family.hpp>
#include <shearspec/oracle.hpp>
#include <shearspec/specfun.hpp>
#include <shearspec/spectrum.hpp>

namespace py = pybind11;
using namespace shearspec;

namespace {

// Oracle levels with the same automatic grid sizing the CLI validate
// subcommand uses; L <= 0 asks for the automatic width.
std::vector<double> oracle_levels(const MonomialFamily& fam, double nu,
                                  int count, double L, int N) {
  const double pi = 3.14159265358979324;
  const double e_hint =
      (fam.order == 1
           ? std::pow(3.0 * pi * (2.0 * count + 1.0) * fam.k / 8.0, 2.0 / 3.0)
           : count + 0.5) +
      3.0;
  const double wall_scale = nu == 0.5 ? 0.5 : nu;
  if (L <= 0.0)
    L = fam.order == 1 ? (e_hint + 12.0) / (fam.k * wall_scale) + 2.0
                       : 2.0 * std::sqrt(e_hint + 12.0) / wall_scale + 2.0;
  if (nu == 0.5)
    return lowest_eigenvalues_richardson(
        [&](int n) { return discretize_dirichlet_limit(fam, L, n, e_hint); },
        N, count);
  const ShearParam s(nu);
  return lowest_eigenvalues_richardson(
      [&](int n) {
        return discretize(fam, s, L, n, OracleBoundary::dirichlet_full_line,
                          e_hint);
      },
      N, count);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectra and eigenfunctions of sheared monomial wells";

  const py::exception<Error> base(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<OverflowError>(m, "OverflowError", base);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
  py::register_exception<QuadratureError>(m, "QuadratureError", base);
  py::register_exception<BracketError>(m, "BracketError", base);
  py::register_exception<MatchingError>(m, "MatchingError", base);
  py::register_exception<ResolutionError>(m, "ResolutionError", base);

  py::class_<MonomialFamily>(m, "MonomialFamily")
      .def(py::init<int, double>(), py::arg("order"), py::arg("k") = 1.0)
      .def_readonly("order", &MonomialFamily::order)
      .def_readonly("k", &MonomialFamily::k)
      .def("__repr__", [](const MonomialFamily& f) {
        return "MonomialFamily(order=" + std::to_string(f.order) +
               ", k=" + std::to_string(f.k) + ")";
      });
  m.def("linear_family", &linear_family, py::arg("k") = 1.0);
  m.def("harmonic_family", &harmonic_family, py::arg("k") = 1.0);

  py::class_<ShearParam>(m, "ShearParam")
      .def(py::init<double>(), py::arg("nu"))
      .def_readonly("nu", &ShearParam::nu)
      .def_readonly("nu_conjugate", &ShearParam::nu_conjugate)
      .def("__repr__", [](const ShearParam& s) {
        return "ShearParam(nu=" + std::to_string(s.nu) + ")";
      });
  m.def("conjugate_shear", &conjugate_shear, py::arg("nu"));

  py::class_<EnergyLevel>(m, "EnergyLevel")
      .def_readonly("family", &EnergyLevel::family)
      .def_readonly("nu", &EnergyLevel::nu)
      .def_readonly("n", &EnergyLevel::n)
      .def_readonly("E", &EnergyLevel::E)
      .def_readonly("residual", &EnergyLevel::residual)
      .def("__repr__", [](const EnergyLevel& l) {
        return "EnergyLevel(n=" + std::to_string(l.n) +
               ", E=" + std::to_string(l.E) + ")";
      });

  m.def(
      "find_levels",
      [](const MonomialFamily& fam, const ShearParam& s, int n_max) {
        return find_levels(fam, s, n_max);
      },
      py::arg("family"), py::arg("shear"), py::arg("n_max"),
      "Levels 0..n_max of the transcendental spectral equation");
  m.def("find_levels_dirichlet", &find_levels_dirichlet, py::arg("family"),
        py::arg("n_max"),
        "Closed-form spectrum of the nu = 1/2 impenetrable-barrier limit");
  m.def("f_linear", &f_linear, py::arg("family"), py::arg("shear"),
        py::arg("E"), "Spectral function of the order-1 family");
  m.def("f_oscillator", &f_oscillator, py::arg("family"), py::arg("shear"),
        py::arg("E"), "Spectral function of the order-2 family");
  m.def("hellmann_feynman_derivative", &hellmann_feynman_derivative,
        py::arg("family"), py::arg("shear"), py::arg("level"),
        "dE/dnu at a converged level");
  m.def("airy_zero", &airy_zero, py::arg("j"),
        "j-th negative zero of Ai, j >= 1");

  m.def(
      "classical_period",
      [](const MonomialFamily& fam, const ShearParam& s, double E) {
        return classical_period(fam, s, E).value;
      },
      py::arg("family"), py::arg("shear"), py::arg("E"),
      "Classical round-trip time at energy E, the same for every nu");
  m.def(
      "action_integral",
      [](const MonomialFamily& fam, const ShearParam& s, double E) {
        return action_integral(fam, s, E).value;
      },
      py::arg("family"), py::arg("shear"), py::arg("E"));
  m.def("wkb_level", &wkb_level, py::arg("family"), py::arg("shear"),
        py::arg("n"), "Semiclassical level in classical-view units");
  m.def("wkb_level_quantum", &wkb_level_quantum, py::arg("family"),
        py::arg("shear"), py::arg("n"),
        "Semiclassical level mapped onto the quantum unit scheme");

  py::class_<PiecewiseEigenfunction>(m, "PiecewiseEigenfunction")
      .def_readonly("E", &PiecewiseEigenfunction::E)
      .def_readonly("x_min", &PiecewiseEigenfunction::x_min)
      .def_readonly("x_max", &PiecewiseEigenfunction::x_max)
      .def("__call__",
           [](const PiecewiseEigenfunction& psi, double x) {
             return evaluate(psi, x);
           })
      .def("nodes",
           [](const PiecewiseEigenfunction& psi) { return count_nodes(psi); })
      .def("probability_left",
           [](const PiecewiseEigenfunction& psi) {
             return probability_left(psi);
           })
      .def("profile",
           [](const PiecewiseEigenfunction& psi,
              const std::vector<double>& grid) {
             return dump_profile(psi, grid);
           })
      .def("__repr__", [](const PiecewiseEigenfunction& psi) {
        return "PiecewiseEigenfunction(E=" + std::to_string(psi.E) + ")";
      });
  m.def("build", &build, py::arg("family"), py::arg("shear"),
        py::arg("level"), "Matched, normalized bound state at a level");

  m.def("oracle_levels", &oracle_levels, py::arg("family"), py::arg("nu"),
        py::arg("count"), py::arg("L") = 0.0, py::arg("N") = 3000,
        "Richardson-extrapolated finite-difference eigenvalues; nu = 0.5 "
        "uses the half-line Dirichlet limit");

  py::class_<FunctionValue>(m, "FunctionValue")
      .def_readonly("value", &FunctionValue::value)
      .def_readonly("abs_error_estimate", &FunctionValue::abs_error_estimate)
      .def("__float__",
           [](const FunctionValue& v) { return v.value; })
      .def("__repr__", [](const FunctionValue& v) {
        return "FunctionValue(" + std::to_string(v.value) + ")";
      });
  m.def("gamma", &shearspec::gamma, py::arg("x"));
  m.def("airy_ai", &airy_ai, py::arg("x"));
  m.def("airy_ai_prime", &airy_ai_prime, py::arg("x"));
  m.def("airy_bi", &airy_bi, py::arg("x"));
  m.def("airy_bi_prime", &airy_bi_prime, py::arg("x"));
  m.def("kummer_1f1", &kummer_1f1, py::arg("a"), py::arg("b"), py::arg("z"));
  m.def("pcf_u", &pcf_u, py::arg("a"), py::arg("z"));
  m.def("pcf_u_prime", &pcf_u_prime, py::arg("a"), py::arg("z"));
  m.def("pcf_d", &pcf_d, py::arg("sigma"), py::arg("z"));
  m.def("pcf_d_prime", &pcf_d_prime, py::arg("sigma"), py::arg("z"));
}
