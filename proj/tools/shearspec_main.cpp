// Command-line front end: every library computation behind one
// deterministic CSV (or minimal SVG) surface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <shearspec/classical.hpp>
#include <shearspec/eigenfunction.hpp>
#include <shearspec/error.hpp>
#include <shearspec/family.hpp>
#include <shearspec/oracle.hpp>
#include <shearspec/spectrum.hpp>

namespace {

using namespace shearspec;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "0.6" or "start:stop:count", both ends included, ascending.
std::vector<double> parse_nu_spec(const std::string& spec) {
  std::vector<double> out;
  const size_t c1 = spec.find(':');
  try {
    if (c1 == std::string::npos) {
      out.push_back(std::stod(spec));
    } else {
      const size_t c2 = spec.find(':', c1 + 1);
      if (c2 == std::string::npos)
        throw ConfigError("nu range needs start:stop:count");
      const double start = std::stod(spec.substr(0, c1));
      const double stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
      const long count = std::stol(spec.substr(c2 + 1));
      if (count < 1) throw ConfigError("nu range count must be >= 1");
      if (start > stop) throw ConfigError("nu range must be ascending");
      if (count == 1) {
        out.push_back(start);
      } else {
        for (long i = 0; i < count; ++i)
          out.push_back(start + (stop - start) * i / (count - 1));
      }
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("could not parse nu value '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw ConfigError("nu value out of numeric range in '" + spec + "'");
  }
  for (double nu : out)
    if (!(nu >= 0.5) || !(nu <= 1.0))
      throw ConfigError("nu must lie in [0.5, 1], got " + fmt(nu));
  return out;
}

MonomialFamily family_from_name(const std::string& name, double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw ConfigError("k must be positive and finite");
  if (name == "linear") return linear_family(k);
  if (name == "harmonic") return harmonic_family(k);
  throw ConfigError("family must be 'linear' or 'harmonic'");
}

void require_levels(int levels) {
  if (levels < 1) throw ConfigError("levels must be >= 1");
}

int thread_budget() {
  const char* env = std::getenv("SHEARSPEC_THREADS");
  if (!env) return 1;
  const int t = std::atoi(env);
  return t < 1 ? 1 : (t > 64 ? 64 : t);
}

// Output sink: stdout unless a path was given.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file '" + path + "'");
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

struct Series {
  std::string color;
  std::vector<std::pair<double, double>> pts;
};

// Hand-rolled polyline SVG: enough to eyeball a sweep, CSV remains the
// contract.
void write_svg(std::ostream& os, const std::vector<Series>& series,
               const std::string& x_label, const std::string& y_label) {
  const double W = 640, H = 480, M = 56;
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (const Series& s : series)
    for (auto& p : s.pts) {
      if (!std::isfinite(p.first) || !std::isfinite(p.second)) continue;
      xlo = std::min(xlo, p.first);
      xhi = std::max(xhi, p.first);
      ylo = std::min(ylo, p.second);
      yhi = std::max(yhi, p.second);
    }
  if (xhi <= xlo) xhi = xlo + 1.0;
  if (yhi <= ylo) yhi = ylo + 1.0;
  auto px = [&](double x) { return M + (x - xlo) / (xhi - xlo) * (W - 2 * M); };
  auto py = [&](double y) { return H - M - (y - ylo) / (yhi - ylo) * (H - 2 * M); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 480\">\n";
  os << "<rect x=\"" << fmt6(M) << "\" y=\"" << fmt6(M) << "\" width=\""
     << fmt6(W - 2 * M) << "\" height=\"" << fmt6(H - 2 * M)
     << "\" fill=\"none\" stroke=\"#888\"/>\n";
  for (const Series& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color
       << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (auto& p : s.pts) {
      if (!std::isfinite(p.first) || !std::isfinite(p.second)) continue;
      if (!first) os << ' ';
      os << fmt6(px(p.first)) << ',' << fmt6(py(p.second));
      first = false;
    }
    os << "\"/>\n";
  }
  os << "<text x=\"" << fmt6(W / 2) << "\" y=\"" << fmt6(H - 16)
     << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << fmt6(H / 2)
     << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << fmt6(H / 2) << ")\">" << y_label << "</text>\n";
  os << "<text x=\"" << fmt6(M) << "\" y=\"" << fmt6(H - M + 16)
     << "\" font-size=\"11\">" << fmt6(xlo) << "</text>\n";
  os << "<text x=\"" << fmt6(W - M) << "\" y=\"" << fmt6(H - M + 16)
     << "\" font-size=\"11\" text-anchor=\"end\">" << fmt6(xhi)
     << "</text>\n";
  os << "<text x=\"" << fmt6(M - 4) << "\" y=\"" << fmt6(H - M)
     << "\" font-size=\"11\" text-anchor=\"end\">" << fmt6(ylo)
     << "</text>\n";
  os << "<text x=\"" << fmt6(M - 4) << "\" y=\"" << fmt6(M + 4)
     << "\" font-size=\"11\" text-anchor=\"end\">" << fmt6(yhi)
     << "</text>\n";
  os << "</svg>\n";
}

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

// ---------------------------------------------------------------------
// spectrum

int cmd_spectrum(const std::string& family, const std::string& nu_spec,
                 double k, int levels, const std::string& output,
                 const std::string& format) {
  require_levels(levels);
  const MonomialFamily fam = family_from_name(family, k);
  const std::vector<double> grid = parse_nu_spec(nu_spec);
  const std::vector<SweepRow> rows =
      sweep(fam, grid, levels - 1, thread_budget());

  Sink sink(output);
  if (format == "csv") {
    sink.out() << "nu,n,E,E_normalized\n";
    for (const SweepRow& r : rows)
      sink.out() << fmt(r.nu) << ',' << r.n << ',' << fmt(r.E) << ','
                 << fmt(r.E_normalized) << '\n';
  } else {
    if (grid.size() < 2)
      throw ConfigError("svg spectrum output needs a nu range");
    std::vector<Series> series(levels);
    for (const SweepRow& r : rows) {
      series[r.n].color = kPalette[r.n % 8];
      series[r.n].pts.emplace_back(r.nu, r.E_normalized);
    }
    write_svg(sink.out(), series, "nu", "E_n(nu)/E_n(1)");
  }
  for (const SweepRow& r : rows)
    if (r.failed) {
      std::cerr << "spectrum: failure at nu=" << fmt(r.nu) << ", n=" << r.n
                << ": " << r.message << "\n";
      return 3;
    }
  return 0;
}

// ---------------------------------------------------------------------
// eigenfunction

int cmd_eigenfunction(const std::string& family, const std::string& nu_spec,
                      double k, int n, double x_min, double x_max, int points,
                      const std::string& output, const std::string& format) {
  const MonomialFamily fam = family_from_name(family, k);
  const std::vector<double> grid = parse_nu_spec(nu_spec);
  if (grid.size() != 1)
    throw ConfigError("eigenfunction takes a single nu, not a range");
  if (grid[0] == 0.5)
    throw ConfigError(
        "eigenfunction profiles need nu > 1/2; the Dirichlet-limit state "
        "lives on the half line only");
  if (points < 2) throw ConfigError("need at least 2 grid points");
  const ShearParam s(grid[0]);

  const std::vector<EnergyLevel> levels = find_levels(fam, s, n);
  const PiecewiseEigenfunction psi = build(fam, s, levels[n]);
  const double lo = std::isnan(x_min) ? psi.x_min : x_min;
  const double hi = std::isnan(x_max) ? psi.x_max : x_max;
  if (!(hi > lo)) throw ConfigError("x range must be increasing");

  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i)
    xs[i] = lo + (hi - lo) * i / (points - 1);
  const auto rows = dump_profile(psi, xs);

  Sink sink(output);
  if (format == "csv") {
    sink.out() << "x,psi\n";
    for (auto& r : rows)
      sink.out() << fmt(r.first) << ',' << fmt(r.second) << '\n';
  } else {
    Series ser{kPalette[0], rows};
    write_svg(sink.out(), {ser}, "x", "psi");
  }
  return 0;
}

// ---------------------------------------------------------------------
// period

int cmd_period(const std::string& family, const std::string& nu_spec,
               double k, double e_min, double e_max, int e_count,
               const std::string& output, const std::string& format) {
  const MonomialFamily fam = family_from_name(family, k);
  const std::vector<double> grid = parse_nu_spec(nu_spec);
  if (grid.size() != 1)
    throw ConfigError("period takes a single nu, not a range");
  if (grid[0] == 0.5)
    throw ConfigError("period needs nu > 1/2");
  if (!(e_min > 0.0) || !(e_max >= e_min) || e_count < 1)
    throw ConfigError("need 0 < e-min <= e-max and e-count >= 1");
  const ShearParam s(grid[0]);
  const ShearParam sym(1.0);

  Sink sink(output);
  std::vector<Series> series(2);
  if (format == "csv") sink.out() << "E,tau_nu,tau_1,rel_diff\n";
  for (int i = 0; i < e_count; ++i) {
    const double E =
        e_count == 1 ? e_min : e_min + (e_max - e_min) * i / (e_count - 1);
    const double tn = classical_period(fam, s, E).value;
    const double t1 = classical_period(fam, sym, E).value;
    if (format == "csv") {
      sink.out() << fmt(E) << ',' << fmt(tn) << ',' << fmt(t1) << ','
                 << fmt(std::fabs(tn - t1) / t1) << '\n';
    } else {
      series[0].pts.emplace_back(E, tn);
      series[1].pts.emplace_back(E, t1);
    }
  }
  if (format != "csv") {
    series[0].color = kPalette[0];
    series[1].color = kPalette[1];
    write_svg(sink.out(), series, "E", "tau");
  }
  return 0;
}

// ---------------------------------------------------------------------
// wkb

int cmd_wkb(const std::string& family, const std::string& nu_spec, double k,
            int levels, const std::string& output,
            const std::string& format) {
  require_levels(levels);
  if (format != "csv") throw ConfigError("wkb supports only csv output");
  const MonomialFamily fam = family_from_name(family, k);
  const std::vector<double> grid = parse_nu_spec(nu_spec);

  Sink sink(output);
  sink.out() << "nu,n,E_wkb\n";
  for (double nu : grid) {
    if (nu == 0.5) throw ConfigError("wkb needs nu > 1/2");
    const ShearParam s(nu);
    for (int n = 0; n < levels; ++n)
      sink.out() << fmt(nu) << ',' << n << ',' << fmt(wkb_level(fam, s, n))
                 << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------
// hf

int cmd_hf(const std::string& family, const std::string& nu_spec, double k,
           int levels, const std::string& output, const std::string& format) {
  require_levels(levels);
  if (format != "csv") throw ConfigError("hf supports only csv output");
  const MonomialFamily fam = family_from_name(family, k);
  const std::vector<double> grid = parse_nu_spec(nu_spec);
  const double h = 1e-4;

  Sink sink(output);
  sink.out() << "nu,n,dE_dnu_hf,dE_dnu_fd,rel_diff\n";
  for (double nu : grid) {
    if (nu == 0.5) throw ConfigError("hf needs nu > 1/2");
    const ShearParam s(nu);
    const std::vector<EnergyLevel> here = find_levels(fam, s, levels - 1);
    // Central difference when nu + h stays in range, else a one-sided
    // second-order stencil from below.
    std::vector<double> fd(levels);
    if (nu + h <= 1.0) {
      const auto up = find_levels(fam, ShearParam(nu + h), levels - 1);
      const auto dn = find_levels(fam, ShearParam(nu - h), levels - 1);
      for (int n = 0; n < levels; ++n)
        fd[n] = (up[n].E - dn[n].E) / (2.0 * h);
    } else {
      const auto d1 = find_levels(fam, ShearParam(nu - h), levels - 1);
      const auto d2 = find_levels(fam, ShearParam(nu - 2.0 * h), levels - 1);
      for (int n = 0; n < levels; ++n)
        fd[n] = (3.0 * here[n].E - 4.0 * d1[n].E + d2[n].E) / (2.0 * h);
    }
    for (int n = 0; n < levels; ++n) {
      const double hf = hellmann_feynman_derivative(fam, s, here[n]);
      const double denom = std::max(std::fabs(hf), 1e-300);
      sink.out() << fmt(nu) << ',' << n << ',' << fmt(hf) << ',' << fmt(fd[n])
                 << ',' << fmt(std::fabs(hf - fd[n]) / denom) << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------
// validate

int cmd_validate(const std::string& family, const std::string& nu_spec,
                 double k, int levels, double grid_L, int grid_N,
                 const std::string& output, const std::string& format) {
  require_levels(levels);
  if (format != "csv") throw ConfigError("validate supports only csv output");
  const MonomialFamily fam = family_from_name(family, k);
  const std::vector<double> grid = parse_nu_spec(nu_spec);

  Sink sink(output);
  sink.out() << "nu,n,E_closed,E_oracle,rel_err\n";
  bool all_ok = true;
  for (double nu : grid) {
    // Window sized from the top target level; the discretizer re-checks
    // that the walls clear it.
    const double e_hint =
        (fam.order == 1
             ? std::pow(3.0 * 3.14159265358979324 * (2.0 * levels + 1.0) *
                            fam.k / 8.0,
                        2.0 / 3.0)
             : levels + 0.5) +
        3.0;
    double L = grid_L;
    const double wall_scale = nu == 0.5 ? 0.5 : nu;
    if (L <= 0.0)
      L = fam.order == 1 ? (e_hint + 12.0) / (fam.k * wall_scale) + 2.0
                         : 2.0 * std::sqrt(e_hint + 12.0) / wall_scale + 2.0;
    const int N = grid_N > 0 ? grid_N : 3000;

    std::vector<EnergyLevel> closed;
    std::vector<double> oracle;
    if (nu == 0.5) {
      closed = find_levels_dirichlet(fam, levels - 1);
      oracle = lowest_eigenvalues_richardson(
          [&](int n) {
            return discretize_dirichlet_limit(fam, L, n, e_hint);
          },
          N, levels);
    } else {
      const ShearParam s(nu);
      closed = find_levels(fam, s, levels - 1);
      oracle = lowest_eigenvalues_richardson(
          [&](int n) {
            return discretize(fam, s, L, n,
                              OracleBoundary::dirichlet_full_line, e_hint);
          },
          N, levels);
    }
    for (int n = 0; n < levels; ++n) {
      const double rel =
          std::fabs(closed[n].E - oracle[n]) / std::fabs(oracle[n]);
      all_ok = all_ok && rel < 5e-4;
      sink.out() << fmt(nu) << ',' << n << ',' << fmt(closed[n].E) << ','
                 << fmt(oracle[n]) << ',' << fmt(rel) << '\n';
    }
  }
  if (!all_ok) {
    std::cerr << "validate: closed-form and oracle spectra disagree beyond "
                 "5e-4\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact spectra, eigenfunctions and classical invariants of sheared "
      "monomial wells"};
  app.require_subcommand(1);

  std::string family, nu_spec = "1", output, format = "csv";
  double k = 1.0;
  int levels = 5;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", family, "well family: linear or harmonic")
        ->required();
    sub->add_option("--nu", nu_spec,
                    "shearing parameter, single value or start:stop:count");
    sub->add_option("--k", k, "dimensionless strength (default 1)");
    sub->add_option("-o,--output", output, "output path (default stdout)");
    sub->add_option("--format", format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));
  };

  CLI::App* sp = app.add_subcommand("spectrum", "energy levels across nu");
  add_common(sp);
  sp->add_option("--levels", levels, "number of levels (default 5)");

  CLI::App* ef =
      app.add_subcommand("eigenfunction", "normalized bound-state profile");
  add_common(ef);
  int ef_n = 0, ef_points = 801;
  double ef_xmin = std::nan(""), ef_xmax = std::nan("");
  ef->add_option("--n", ef_n, "level index (default 0)");
  ef->add_option("--x-min", ef_xmin, "grid start (default: left tail cutoff)");
  ef->add_option("--x-max", ef_xmax, "grid end (default: right tail cutoff)");
  ef->add_option("--points", ef_points, "grid size (default 801)");

  CLI::App* pd = app.add_subcommand("period", "classical period vs energy");
  add_common(pd);
  double e_min = 0.5, e_max = 8.0;
  int e_count = 16;
  pd->add_option("--e-min", e_min, "lowest energy (default 0.5)");
  pd->add_option("--e-max", e_max, "highest energy (default 8)");
  pd->add_option("--e-count", e_count, "number of energies (default 16)");

  CLI::App* wk = app.add_subcommand("wkb", "semiclassical levels");
  add_common(wk);
  wk->add_option("--levels", levels, "number of levels (default 5)");

  CLI::App* hf = app.add_subcommand("hf", "dE/dnu, expectation vs difference");
  add_common(hf);
  hf->add_option("--levels", levels, "number of levels (default 5)");

  CLI::App* va =
      app.add_subcommand("validate", "closed forms against the grid oracle");
  add_common(va);
  double grid_L = 0.0;
  int grid_N = 0;
  va->add_option("--levels", levels, "number of levels (default 5)");
  va->add_option("--grid-L", grid_L, "oracle half-width override");
  va->add_option("--grid-N", grid_N, "oracle interior points override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sp->parsed())
      return cmd_spectrum(family, nu_spec, k, levels, output, format);
    if (ef->parsed())
      return cmd_eigenfunction(family, nu_spec, k, ef_n, ef_xmin, ef_xmax,
                               ef_points, output, format);
    if (pd->parsed())
      return cmd_period(family, nu_spec, k, e_min, e_max, e_count, output,
                        format);
    if (wk->parsed()) return cmd_wkb(family, nu_spec, k, levels, output, format);
    if (hf->parsed()) return cmd_hf(family, nu_spec, k, levels, output, format);
    if (va->parsed())
      return cmd_validate(family, nu_spec, k, levels, grid_L, grid_N, output,
                          format);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
