#include "csvout.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "entangle.hpp"

namespace sqz::csv {

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.points < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(spec.min < spec.max)) throw std::invalid_argument("grid min must be < max");
  if (spec.spacing == Spacing::log && !(spec.min > 0.0))
    throw std::invalid_argument("log spacing needs a positive minimum");
  std::vector<double> grid(spec.points);
  const int last = spec.points - 1;
  for (int i = 0; i <= last; ++i) {
    const double f = double(i) / double(last);
    if (spec.spacing == Spacing::linear)
      grid[i] = spec.min + f * (spec.max - spec.min);
    else
      grid[i] = std::exp(std::log(spec.min) + f * (std::log(spec.max) - std::log(spec.min)));
  }
  grid.front() = spec.min;
  grid.back() = spec.max;
  return grid;
}

std::string format_number(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

const char* spacing_name(Spacing s) {
  return s == Spacing::linear ? "linear" : "log";
}

Spacing parse_spacing(const std::string& name) {
  if (name == "linear") return Spacing::linear;
  if (name == "log") return Spacing::log;
  throw std::invalid_argument("spacing must be 'linear' or 'log'");
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

void grid_header(std::ofstream& out, const char* label, const GridSpec& g) {
  out << "# " << label << "\n";
  out << "# grid: min=" << format_number(g.min) << ", max=" << format_number(g.max)
      << ", points=" << g.points << ", spacing=" << spacing_name(g.spacing)
      << "\n";
  out << "# squeeze 1.0.0\n";
}

}  // namespace

void write_fig1(const std::string& path, const GridSpec& chi_grid) {
  const std::vector<double> grid = make_grid(chi_grid);
  std::ofstream out = open_out(path);
  grid_header(out, "fig1: deltaS = S(chi) - ln(chi)", chi_grid);
  out << "chi,tau,S,E,lnchi,deltaS\n";
  for (double chi : grid) {
    const ent::EntanglementCurvePoint p = ent::curve_chi(chi);
    out << format_number(p.chi) << ',' << format_number(p.tau) << ','
        << format_number(p.entropy) << ',' << format_number(p.energy) << ','
        << format_number(p.lnchi) << ',' << format_number(p.delta_s) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_curves(const std::string& path, const GridSpec& chi_grid) {
  const std::vector<double> grid = make_grid(chi_grid);
  std::ofstream out = open_out(path);
  grid_header(out, "entanglement curves over the chi grid", chi_grid);
  out << "tau,chi,S,E\n";
  for (double chi : grid) {
    const ent::EntanglementCurvePoint p = ent::curve_chi(chi);
    out << format_number(p.tau) << ',' << format_number(p.chi) << ','
        << format_number(p.entropy) << ',' << format_number(p.energy) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_psi_compare(const std::string& path, int n_max_compare) {
  if (n_max_compare < 2) throw std::invalid_argument("N_max must be >= 2");
  std::ofstream out = open_out(path);
  out << "# equal-energy comparison: TMSS at chi = N vs the equal-amplitude "
         "twin-Fock state\n";
  out << "# squeeze 1.0.0\n";
  out << "N,E_psi,S_psi,S_tmss,deltaS\n";
  for (int n = 2; n <= n_max_compare; ++n) {
    const ent::PsiStats st = ent::psi_n_stats(n);
    const ent::EntanglementCurvePoint p = ent::curve_chi(double(n));
    out << n << ',' << format_number(st.energy) << ','
        << format_number(st.entropy) << ',' << format_number(p.entropy) << ','
        << format_number(p.delta_s) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sqz::csv
