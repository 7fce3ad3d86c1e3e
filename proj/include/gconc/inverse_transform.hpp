#pragma once
// Densities of D and G from the exact moments: closed forms at n = 2,
// Talbot contour inversion of the Laplace transform in the bulk, and the
// edge expansions near the ends of the support, stitched with declared
// windows and per-point error estimates.

#include <cstddef>
#include <vector>

namespace gconc {

enum class Variable { D, G };

enum class Method {
  closed_form,
  contour_inversion,
  edge_asymptote,
  stitched,
};

const char* variable_name(Variable v);
const char* method_name(Method m);

struct DensityCurve {
  Variable variable = Variable::D;
  int n = 2;
  int beta = 2;
  std::vector<double> grid;    // ascending abscissas inside the support
  std::vector<double> values;  // nonnegative densities
  Method method = Method::closed_form;
  // per-point method tag and relative error estimate (parallel to grid)
  std::vector<Method> point_method;
  std::vector<double> err_estimate;
  // declared stitch boundaries in t = -log D - n log n (when stitched)
  double t_right_window = -1.0;
  double t_left_window = -1.0;
};

// n = 2 closed-form laws on the closed support [0, 1/4] (D) or [0, 1] (G).
DensityCurve density_n2_closed(int beta, Variable variable,
                               std::vector<double> grid);

// P(D) for 2 <= n <= 12, grid strictly inside (0, n^-n).  Relative
// accuracy 1e-6 away from the edges; throws accuracy_error with the
// achieved estimate when that cannot be met.
DensityCurve density_d(int n, int beta, std::vector<double> grid);

// P(G) through the exact change of variable P(G) = (n D / G) P(D) with
// D = (G/n)^n, same engine and guarantees as density_d.
DensityCurve density_g(int n, int beta, std::vector<double> grid);

// Default grids: geometric in D, uniform in G, strictly inside the support.
std::vector<double> default_grid_d(int n, std::size_t count);
std::vector<double> default_grid_g(int n, std::size_t count);

// Moment of the abscissa over the full support: trapezoid on the declared
// grid plus analytic completions of the gaps at both edges.  Order 0 is
// the total mass, order 1 the mean.
double curve_moment(const DensityCurve& curve, int order);

double curve_mass(const DensityCurve& curve);
double curve_mean(const DensityCurve& curve);

namespace detail {

struct EtaValue {
  double value;
  double err;  // relative error estimate
};

// Laplace inversion of eta(t) = D P(D) at t = -log D - n log n >= 0.
EtaValue talbot_eta(int n, int beta, double t);

// Corrected right-edge series for eta(t) with its truncation estimate.
EtaValue edge_eta(int n, int beta, double t);

// Left-edge series for eta(t) (includes the closed n = 2 specials).
double left_eta(int n, int beta, double t);

// Validated stitch boundaries for the (n, beta) pair; negative entries
// mean no validated window exists on that side.
void stitch_windows(int n, int beta, double* t_right, double* t_left);

// Direct Bromwich check used by the out-of-support test: |eta| above the
// edge (t < 0) must vanish.
double bromwich_eta(int n, int beta, double t);

// Mass of the curve's law on [0, x], gap completions included; x may sit
// anywhere on the closed support.
double curve_cdf_at(const DensityCurve& curve, double x);

}  // namespace detail

}  // namespace gconc
