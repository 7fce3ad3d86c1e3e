#include "gconc/inverse_transform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "gconc/asymptotics.hpp"
#include "gconc/errors.hpp"
#include "gconc/kahan.hpp"
#include "gconc/moments.hpp"
#include "gconc/specfun.hpp"

namespace gconc {

const char* variable_name(Variable v) {
  return v == Variable::D ? "D" : "G";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::contour_inversion:
      return "contour_inversion";
    case Method::edge_asymptote:
      return "edge_asymptote";
    default:
      return "stitched";
  }
}

namespace {

// Validated stitch boundaries, keyed (n, beta).  t_right: largest t at
// which the corrected edge series meets the bulk tolerance; t_left:
// smallest t at which the left series takes over.  -1 = unavailable.
struct stitch_window {
  int n, beta;
  double t_right, t_left;
};
constexpr stitch_window kWindows[] = {
    {2, 2, 0.05, 7.0},   {2, 1, 0.1, 4.0},   {3, 2, 0.05, 8.0},
    {3, 1, 0.05, 6.0},   {4, 2, 0.03, 12.0}, {4, 1, 0.05, 6.0},
    {5, 2, 0.03, 13.0},  {5, 1, 0.05, 9.0},  {6, 2, 0.03, 16.0},
    {6, 1, 0.05, 12.0},  {8, 2, 0.02, 18.0}, {8, 1, 0.03, 18.0},
    {10, 2, -1.0, 20.0}, {10, 1, -1.0, 20.0}, {12, 2, -1.0, 24.0},
    {12, 1, 0.05, 24.0},
};

void check_system(int n, int beta) {
  if (beta != 1 && beta != 2)
    throw domain_error("inverse_transform: beta must be 1 or 2");
  if (n < 2 || n > 12)
    throw domain_error("inverse_transform: supported range is 2 <= n <= 12");
}

std::complex<double> log_shifted_transform(int n, int beta,
                                           std::complex<double> s) {
  return detail::log_det_moment_hs(n, beta, s) +
         s * (double(n) * std::log(double(n)));
}

// Fixed-Talbot evaluation with the largest |Re term| retained so the
// caller can estimate the roundoff floor.
void talbot_raw(int n, int beta, double t, int mt, double* value,
                double* maxterm) {
  double r = 2.0 * mt / (5.0 * t);
  double head =
      0.5 * std::exp(t * r + log_shifted_transform(n, beta, {r, 0.0}).real());
  kahan<double> sum;
  double mx = head;
  for (int k = 1; k < mt; ++k) {
    double th = k * M_PI / mt;
    double cot = std::cos(th) / std::sin(th);
    std::complex<double> s(r * th * cot, r * th);
    double sig = th + (th * cot - 1.0) * cot;
    std::complex<double> term =
        std::exp(t * s + log_shifted_transform(n, beta, s)) *
        std::complex<double>(1.0, sig);
    sum.add(term.real());
    mx = std::max(mx, std::abs(term.real()));
  }
  *value = (r / mt) * (head + sum.value());
  *maxterm = (r / mt) * mx;
}

// g_j cumulants of the right-edge correction series, from the Stirling
// correction coefficients.
struct edge_series {
  double log_a;
  double p;
  double a;
  double g[5];  // g_0..g_4
};

edge_series make_edge_series(int n, int beta) {
  edge_series es;
  es.log_a = detail::log_stirling_amplitude(n, beta);
  es.p = stirling_exponent(n, beta);
  StirlingCorrection sc = stirling_correction_coeffs(n, beta);
  double a = sc.a, b = sc.b, c = sc.c, d = sc.d;
  es.a = a;
  es.g[0] = 1.0;
  es.g[1] = a;
  es.g[2] = 0.5 * a * a + b;
  es.g[3] = a * a * a / 6.0 + a * b + c;
  es.g[4] = a * a * a * a / 24.0 + 0.5 * a * a * b + 0.5 * b * b + a * c + d;
  return es;
}

double left_series_eval(int n, int beta, double d) {
  if (n == 2) {
    // truncations of the closed-form laws, used only for stitching
    return beta == 2 ? 6.0 - 12.0 * d : 4.0;
  }
  EdgeExpansion exp_ = beta == 2 ? left_edge_coeffs_complex(n)
                                 : left_edge_coeffs_real(n);
  return left_edge_eval(exp_, d);
}

struct StitchPoint {
  double value;
  double err;
  Method method;
};

double blend_weight(double u) {
  // raised-cosine taper, 1 at u = 0 down to 0 at u = 1
  return 0.5 * (1.0 + std::cos(M_PI * u));
}

StitchPoint eta_stitched(int n, int beta, double t, double t_right,
                         double t_left) {
  if (t_right > 0.0 && t <= t_right) {
    detail::EtaValue edge = detail::edge_eta(n, beta, t);
    if (t <= 0.7 * t_right) return {edge.value, edge.err, Method::edge_asymptote};
    detail::EtaValue mid = detail::talbot_eta(n, beta, t);
    if (mid.err > 1e-6 && edge.err < mid.err)
      return {edge.value, edge.err, Method::edge_asymptote};
    double w = blend_weight((t - 0.7 * t_right) / (0.3 * t_right));
    return {w * edge.value + (1.0 - w) * mid.value,
            w * edge.err + (1.0 - w) * mid.err, Method::stitched};
  }
  // t_right < 0 marks systems with no usable right-edge window: the
  // expansion coefficients grow too fast there, so the contour carries
  // the whole right side (its small-t points are massless anyway)
  if (t <= t_left) {
    detail::EtaValue mid = detail::talbot_eta(n, beta, t);
    return {mid.value, mid.err, Method::contour_inversion};
  }
  double left = detail::left_eta(n, beta, t);
  double err_left =
      std::max(5e-7 * std::exp(-(t - t_left)), 1e-12);
  if (t >= 1.3 * t_left) return {left, err_left, Method::edge_asymptote};
  detail::EtaValue mid = detail::talbot_eta(n, beta, t);
  if (mid.err > 1e-6)
    return {left, err_left, Method::edge_asymptote};
  double w = blend_weight((t - t_left) / (0.3 * t_left));
  return {w * mid.value + (1.0 - w) * left, w * mid.err + (1.0 - w) * err_left,
          Method::stitched};
}

// shared post-pass: clip harmless ringing, enforce the bulk tolerance
void finalize_curve(DensityCurve& curve) {
  double vmax = 0.0;
  for (double v : curve.values) vmax = std::max(vmax, v);
  if (!(vmax > 0.0))
    throw accuracy_error("density: no positive values on the grid", 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    double& v = curve.values[i];
    if (v < 0.0) {
      if (v < -1e-8 * vmax)
        throw accuracy_error("density: negative ringing beyond tolerance",
                             -v / vmax);
      v = 0.0;
    }
    if (v > 1e-6 * vmax && curve.err_estimate[i] > 1e-6)
      worst = std::max(worst, curve.err_estimate[i]);
  }
  if (worst > 0.0)
    throw accuracy_error("density: relative accuracy 1e-6 not met in the bulk",
                         worst);
}

double nlogn(int n) { return double(n) * std::log(double(n)); }

// ---- completions used by curve_moment ----

double simpson(const std::function<double(double)>& f, double a, double b,
               int intervals) {
  if (b <= a) return 0.0;
  double h = (b - a) / intervals;
  kahan<double> acc;
  acc.add(f(a));
  acc.add(f(b));
  for (int i = 1; i < intervals; ++i)
    acc.add((i % 2 ? 4.0 : 2.0) * f(a + i * h));
  return acc.value() * h / 3.0;
}

// integral of d^A log(d)^B on (0, x] for B <= 2 and A > -1
double left_power_log_integral(double power, int log_pow, double x) {
  if (x <= 0.0) return 0.0;
  double ap1 = power + 1.0;
  double lx = std::log(x);
  double head = std::exp(ap1 * lx);
  switch (log_pow) {
    case 0:
      return head / ap1;
    case 1:
      return head * (lx / ap1 - 1.0 / (ap1 * ap1));
    default:
      return head * (lx * lx / ap1 - 2.0 * lx / (ap1 * ap1) +
                     2.0 / (ap1 * ap1 * ap1));
  }
}

// integral of x^mu P over the gap between the last grid point and the
// right edge, from the corrected edge series: T is t at the gap start,
// c the exponential rate in t, scale the prefactor of the abscissa power
double right_gap_series(int n, int beta, double big_t, double c,
                        double scale) {
  edge_series es = make_edge_series(n, beta);
  kahan<double> total;
  for (int j = 0; j <= 4; ++j) {
    if (es.g[j] == 0.0) continue;
    kahan<double> inner;
    double cm = 1.0;  // (-c)^m / m!
    for (int m = 0; m < 12; ++m) {
      double pjm = es.p + j + m;
      inner.add(cm * std::exp(pjm * std::log(big_t)) / pjm);
      cm *= -c / (m + 1);
    }
    total.add(es.g[j] * std::exp(es.log_a - ln_gamma(es.p + j)) *
              inner.value());
  }
  return scale * total.value();
}

struct left_term {
  double power;
  int log_pow;
  double coeff;
};

std::vector<left_term> left_series_terms(int n, int beta) {
  if (n == 2) {
    if (beta == 2) return {{0.0, 0, 6.0}, {1.0, 0, -12.0}};
    return {{0.0, 0, 4.0}};
  }
  EdgeExpansion exp_ = beta == 2 ? left_edge_coeffs_complex(n)
                                 : left_edge_coeffs_real(n);
  std::vector<left_term> out;
  for (const auto& term : exp_.terms)
    if (term.coeff != 0.0)
      out.push_back({term.d_power(), term.log_power, term.coeff});
  return out;
}

// integral of x^mu P over (0, first grid point], from the left series
double left_gap_series(int n, int beta, Variable variable, double x_lo,
                       int order) {
  double d_lo, shift, scale;
  if (variable == Variable::D) {
    d_lo = x_lo;
    shift = order;
    scale = 1.0;
  } else {
    d_lo = std::exp(double(n) * std::log(x_lo / n));
    shift = double(order) / n;
    scale = std::exp(order * std::log(double(n)));
  }
  kahan<double> acc;
  for (const auto& term : left_series_terms(n, beta))
    acc.add(term.coeff *
            left_power_log_integral(term.power + shift, term.log_pow, d_lo));
  return scale * acc.value();
}

double closed_density(int beta, Variable variable, double x) {
  if (variable == Variable::D)
    return beta == 2 ? 6.0 * std::sqrt(std::max(0.0, 1.0 - 4.0 * x)) : 4.0;
  return beta == 2 ? 3.0 * x * std::sqrt(std::max(0.0, 1.0 - x * x))
                   : 2.0 * x;
}

// gap integrals for the closed n = 2 laws; the beta = 2 right gaps get a
// square-root substitution so the integrand is smooth
double closed_right_gap(int beta, Variable variable, double x_hi, int order) {
  if (beta == 2) {
    if (variable == Variable::D) {
      double u1 = std::sqrt(std::max(0.0, 1.0 - 4.0 * x_hi));
      auto f = [order](double u) {
        return 3.0 * u * u * std::pow(0.25 * (1.0 - u * u), order);
      };
      return simpson(f, 0.0, u1, 512);
    }
    double u1 = std::sqrt(std::max(0.0, (1.0 - x_hi) * (1.0 + x_hi)));
    auto f = [order](double u) {
      return 3.0 * u * u * std::pow(1.0 - u * u, 0.5 * order);
    };
    return simpson(f, 0.0, u1, 512);
  }
  double edge = variable == Variable::D ? 0.25 : 1.0;
  auto f = [beta, variable, order](double x) {
    return closed_density(beta, variable, x) * std::pow(x, order);
  };
  return simpson(f, x_hi, edge, 512);
}

double closed_left_gap(int beta, Variable variable, double x_lo, int order) {
  auto f = [beta, variable, order](double x) {
    return closed_density(beta, variable, x) *
           (order == 0 ? 1.0 : std::pow(x, order));
  };
  return simpson(f, 0.0, x_lo, 512);
}

std::vector<double> check_grid(std::vector<double> grid, double lo,
                               double hi, bool open) {
  if (grid.size() < 1) throw domain_error("density: empty grid");
  double prev = -std::numeric_limits<double>::infinity();
  for (double x : grid) {
    bool inside = open ? (x > lo && x < hi) : (x >= lo && x <= hi);
    if (!inside)
      throw domain_error("density: grid point outside the support");
    if (x <= prev)
      throw domain_error("density: grid must be strictly increasing");
    prev = x;
  }
  return grid;
}

}  // namespace

namespace detail {

EtaValue talbot_eta(int n, int beta, double t) {
  // node ladder: large n needs more nodes before the integrand settles,
  // while past ~80 the cancellation outgrows the truncation gain
  static const int kRungs[] = {24, 32, 40, 56, 80};
  // roundoff floor: the compensated sum is good to a few ulps of its
  // largest term, so the floor scales with maxterm alone, not with the
  // term count
  const double eps = 2.2e-16;
  double f[5], m[5], d[5];
  double d_prev = std::numeric_limits<double>::infinity();
  talbot_raw(n, beta, t, kRungs[0], &f[0], &m[0]);
  for (int i = 1; i < 5; ++i) {
    talbot_raw(n, beta, t, kRungs[i], &f[i], &m[i]);
    double sc = std::max(std::abs(f[i]), 1e-300);
    d[i] = std::abs(f[i] - f[i - 1]) / sc;
    double floor_i = 10.0 * eps * m[i] / sc;
    if (d[i] < 1e-9) return {f[i], std::max({d[i], floor_i, 1e-15})};
    if (d[i] >= d_prev) {
      // the gaps grow again: roundoff regime, the rung before the first
      // widening is the best one, and the last shrinking gap overstates
      // its error by the growth factor, so damp the estimate
      int j = i - 2;
      double floor_j = 10.0 * eps * m[j] / std::max(std::abs(f[j]), 1e-300);
      return {f[j], std::max({d_prev * (d_prev / d[i]), floor_j, 1e-15})};
    }
    d_prev = d[i];
  }
  double sc = std::max(std::abs(f[4]), 1e-300);
  return {f[4], std::max({d[4], 10.0 * eps * m[4] / sc, 1e-15})};
}

EtaValue edge_eta(int n, int beta, double t) {
  edge_series es = make_edge_series(n, beta);
  double p = es.p;
  double corr = es.g[0];
  double denom = p;
  double tpow = t;
  corr += es.g[1] * tpow / denom;
  denom *= p + 1.0;
  tpow *= t;
  corr += es.g[2] * tpow / denom;
  denom *= p + 2.0;
  tpow *= t;
  corr += es.g[3] * tpow / denom;
  denom *= p + 3.0;
  tpow *= t;
  corr += es.g[4] * tpow / denom;
  double value =
      std::exp(es.log_a + (p - 1.0) * std::log(t) - ln_gamma(p)) * corr;
  denom *= p + 4.0;
  tpow *= t;
  double next = std::abs(es.g[4] * es.a / 5.0) * tpow / denom;
  double err = corr > 0.0 ? 3.0 * next / corr : 1.0;
  return {value, std::max(err, 1e-16)};
}

double left_eta(int n, int beta, double t) {
  double d = std::exp(-t - nlogn(n));
  return d * left_series_eval(n, beta, d);
}

void stitch_windows(int n, int beta, double* t_right, double* t_left) {
  check_system(n, beta);
  for (const auto& w : kWindows)
    if (w.n == n && w.beta == beta) {
      *t_right = w.t_right;
      *t_left = w.t_left;
      return;
    }
  // odd n in 7..11 has no probed row: borrow conservatively from the
  // even neighbours (left boundary from above, right from the smaller
  // neighbour window, or none at all past n = 8)
  if (n == 7) {
    *t_right = beta == 2 ? 0.02 : 0.03;
    *t_left = 18.0;
  } else if (n == 9) {
    *t_right = -1.0;
    *t_left = 20.0;
  } else {
    *t_right = -1.0;
    *t_left = 24.0;
  }
}

double curve_cdf_at(const DensityCurve& curve, double x) {
  double edge = curve.variable == Variable::D
                    ? std::exp(-nlogn(curve.n))
                    : 1.0;
  if (curve.variable == Variable::D && curve.n == 2 &&
      curve.method == Method::closed_form)
    edge = 0.25;
  x = std::min(std::max(x, 0.0), edge);
  int n = curve.n;
  bool closed = curve.method == Method::closed_form;
  double x_lo = curve.grid.front();
  double x_hi = curve.grid.back();

  auto left_mass = [&](double upto) {
    if (closed) return closed_left_gap(curve.beta, curve.variable, upto, 0);
    return left_gap_series(n, curve.beta, curve.variable, upto, 0);
  };
  auto right_tail = [&](double from) {  // mass on [from, edge]
    if (closed) return closed_right_gap(curve.beta, curve.variable, from, 0);
    double big_t = curve.variable == Variable::D
                       ? -std::log(from) - nlogn(n)
                       : -double(n) * std::log(from);
    if (big_t <= 0.0) return 0.0;
    return right_gap_series(n, curve.beta, big_t, 0.0, 1.0);
  };

  if (x <= x_lo) return left_mass(x);
  kahan<double> acc;
  acc.add(left_mass(x_lo));
  std::size_t i = 0;
  while (i + 1 < curve.grid.size() && curve.grid[i + 1] <= x) {
    acc.add(0.5 * (curve.grid[i + 1] - curve.grid[i]) *
            (curve.values[i] + curve.values[i + 1]));
    ++i;
  }
  if (i + 1 == curve.grid.size()) {
    // beyond the grid: whole tail minus the part still above x
    acc.add(right_tail(x_hi));
    if (x < edge) acc.add(-right_tail(x));
    return acc.value();
  }
  double g0 = curve.grid[i], g1 = curve.grid[i + 1];
  double v0 = curve.values[i], v1 = curve.values[i + 1];
  double vx = v0 + (v1 - v0) * (x - g0) / (g1 - g0);
  acc.add(0.5 * (x - g0) * (v0 + vx));
  return acc.value();
}

double bromwich_eta(int n, int beta, double t) {
  if (t == 0.0) throw domain_error("bromwich_eta: t must be nonzero");
  check_system(n, beta);
  double c0 = 40.0 / std::abs(t);
  double y_max = 6.0 * c0;
  const int points = 4001;
  double h = y_max / (points - 1);
  kahan<double> acc;
  for (int i = 0; i < points; ++i) {
    double y = i * h;
    std::complex<double> s(c0, y);
    std::complex<double> v =
        std::exp(t * s + log_shifted_transform(n, beta, s));
    acc.add((i == 0 || i == points - 1 ? 0.5 : 1.0) * v.real());
  }
  return acc.value() * h / M_PI;
}

}  // namespace detail

DensityCurve density_n2_closed(int beta, Variable variable,
                               std::vector<double> grid) {
  if (beta != 1 && beta != 2)
    throw domain_error("density_n2_closed: beta must be 1 or 2");
  double hi = variable == Variable::D ? 0.25 : 1.0;
  DensityCurve curve;
  curve.variable = variable;
  curve.n = 2;
  curve.beta = beta;
  curve.grid = check_grid(std::move(grid), 0.0, hi, false);
  curve.method = Method::closed_form;
  curve.values.reserve(curve.grid.size());
  for (double x : curve.grid)
    curve.values.push_back(closed_density(beta, variable, x));
  curve.point_method.assign(curve.grid.size(), Method::closed_form);
  curve.err_estimate.assign(curve.grid.size(), 2.2e-16);
  return curve;
}

DensityCurve density_d(int n, int beta, std::vector<double> grid) {
  check_system(n, beta);
  double dmax = std::exp(-nlogn(n));
  DensityCurve curve;
  curve.variable = Variable::D;
  curve.n = n;
  curve.beta = beta;
  curve.grid = check_grid(std::move(grid), 0.0, dmax, true);
  curve.method = Method::stitched;
  detail::stitch_windows(n, beta, &curve.t_right_window,
                         &curve.t_left_window);
  curve.values.reserve(curve.grid.size());
  curve.point_method.reserve(curve.grid.size());
  curve.err_estimate.reserve(curve.grid.size());
  for (double d : curve.grid) {
    double t = -std::log(d) - nlogn(n);
    StitchPoint pt = eta_stitched(n, beta, t, curve.t_right_window,
                                  curve.t_left_window);
    curve.values.push_back(pt.value / d);
    curve.point_method.push_back(pt.method);
    curve.err_estimate.push_back(pt.err);
  }
  finalize_curve(curve);
  return curve;
}

DensityCurve density_g(int n, int beta, std::vector<double> grid) {
  check_system(n, beta);
  DensityCurve curve;
  curve.variable = Variable::G;
  curve.n = n;
  curve.beta = beta;
  curve.grid = check_grid(std::move(grid), 0.0, 1.0, true);
  curve.method = Method::stitched;
  detail::stitch_windows(n, beta, &curve.t_right_window,
                         &curve.t_left_window);
  curve.values.reserve(curve.grid.size());
  curve.point_method.reserve(curve.grid.size());
  curve.err_estimate.reserve(curve.grid.size());
  for (double g : curve.grid) {
    double t = -double(n) * std::log(g);
    StitchPoint pt = eta_stitched(n, beta, t, curve.t_right_window,
                                  curve.t_left_window);
    curve.values.push_back(double(n) * pt.value / g);
    curve.point_method.push_back(pt.method);
    curve.err_estimate.push_back(pt.err);
  }
  finalize_curve(curve);
  return curve;
}

std::vector<double> default_grid_d(int n, std::size_t count) {
  check_system(n, 2);
  if (count < 2) throw domain_error("default_grid_d: need at least 2 points");
  double t_right, t_left;
  // beta does not move the defaults; take the wider left boundary
  double tl2, tr2;
  detail::stitch_windows(n, 2, &tr2, &tl2);
  detail::stitch_windows(n, 1, &t_right, &t_left);
  t_left = std::max(t_left, tl2);
  double log_lo = -(t_left + 2.0) - nlogn(n);
  double log_hi = -0.02 - nlogn(n);
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = std::exp(log_lo +
                       (log_hi - log_lo) * double(i) / double(count - 1));
  return grid;
}

std::vector<double> default_grid_g(int n, std::size_t count) {
  check_system(n, 2);
  if (count < 2) throw domain_error("default_grid_g: need at least 2 points");
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = double(i + 1) / double(count + 1);
  return grid;
}

double curve_moment(const DensityCurve& curve, int order) {
  if (order < 0) throw domain_error("curve_moment: order must be >= 0");
  if (curve.grid.size() < 2)
    throw domain_error("curve_moment: need at least 2 grid points");
  kahan<double> acc;
  auto weighted = [&](std::size_t i) {
    return order == 0 ? curve.values[i]
                      : curve.values[i] * std::pow(curve.grid[i], order);
  };
  for (std::size_t i = 0; i + 1 < curve.grid.size(); ++i)
    acc.add(0.5 * (curve.grid[i + 1] - curve.grid[i]) *
            (weighted(i) + weighted(i + 1)));
  double interior = acc.value();

  int n = curve.n;
  double x_lo = curve.grid.front();
  double x_hi = curve.grid.back();
  double right, left;
  if (curve.method == Method::closed_form) {
    right = closed_right_gap(curve.beta, curve.variable, x_hi, order);
    left = closed_left_gap(curve.beta, curve.variable, x_lo, order);
  } else if (curve.variable == Variable::D) {
    double big_t = -std::log(x_hi) - nlogn(n);
    right = right_gap_series(n, curve.beta, big_t, double(order),
                             std::exp(-order * nlogn(n)));
    left = left_gap_series(n, curve.beta, Variable::D, x_lo, order);
  } else {
    double big_t = -double(n) * std::log(x_hi);
    right = right_gap_series(n, curve.beta, big_t, double(order) / n, 1.0);
    left = left_gap_series(n, curve.beta, Variable::G, x_lo, order);
  }
  return interior + right + left;
}

double curve_mass(const DensityCurve& curve) { return curve_moment(curve, 0); }

double curve_mean(const DensityCurve& curve) { return curve_moment(curve, 1); }

}  // namespace gconc
