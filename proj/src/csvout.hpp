#ifndef SQUEEZE_CSVOUT_HPP
#define SQUEEZE_CSVOUT_HPP

#include <string>
#include <vector>

namespace sqz::csv {

enum class Spacing { linear, log };

struct GridSpec {
  double min;
  double max;
  int points;
  Spacing spacing;
};

// Validates 1 <= min < max (0 < min for log spacing) and points >= 2.
std::vector<double> make_grid(const GridSpec& spec);

// 12 significant digits, scientific below 1e-4 in magnitude, '.' decimal
// separator, no locale dependence.
std::string format_number(double x);

const char* spacing_name(Spacing s);
Spacing parse_spacing(const std::string& name);

// chi,tau,S,E,lnchi,deltaS over the chi grid.
void write_fig1(const std::string& path, const GridSpec& chi_grid);

// tau,chi,S,E over the chi grid (both parametrizations per row).
void write_curves(const std::string& path, const GridSpec& chi_grid);

// N,E_psi,S_psi,S_tmss,deltaS for N = 2..n_max_compare.
void write_psi_compare(const std::string& path, int n_max_compare);

}  // namespace sqz::csv

#endif
