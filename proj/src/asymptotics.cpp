#include "gconc/asymptotics.hpp"

#include <cmath>

#include "gconc/errors.hpp"
#include "gconc/kahan.hpp"
#include "gconc/moments.hpp"
#include "gconc/specfun.hpp"

namespace gconc {

namespace {

void check_system(int n, int beta) {
  if (n < 2) throw domain_error("asymptotics: need n >= 2");
  if (beta != 1 && beta != 2)
    throw domain_error("asymptotics: beta must be 1 or 2");
}

// Bernoulli polynomials entering the Stirling correction ladder.
double bern2(double x) { return (x - 1.0) * x + 1.0 / 6.0; }
double bern3(double x) { return ((x - 1.5) * x + 0.5) * x; }
double bern4(double x) { return ((x - 2.0) * x + 1.0) * x * x - 1.0 / 30.0; }
double bern5(double x) {
  return (((x - 2.5) * x + 5.0 / 3.0) * x * x - 1.0 / 6.0) * x;
}

double lg(double x) { return ln_gamma(x); }

}  // namespace

double stirling_amplitude(int n, int beta) {
  check_system(n, beta);
  return std::exp(detail::log_stirling_amplitude(n, beta));
}

double stirling_exponent(int n, int beta) {
  check_system(n, beta);
  return beta == 2 ? 0.5 * (double(n) * n - 1.0)
                   : 0.25 * (double(n) * n + n - 2.0);
}

double stirling_amplitude_g(int n, int beta) {
  check_system(n, beta);
  double p = stirling_exponent(n, beta);
  return std::exp(detail::log_stirling_amplitude(n, beta) +
                  std::log(double(n)) - ln_gamma(p));
}

StirlingCorrection stirling_correction_coeffs(int n, int beta) {
  check_system(n, beta);
  double c0 = beta == 2 ? double(n) * n : 0.5 * (double(n) * n + n);
  kahan<double> sa, sb, sc, sd;
  for (int j = 1; j <= n; ++j) {
    double cj = beta == 2 ? double(j) : 0.5 * (j + 1);
    sa.add(bern2(cj));
    sb.add(bern3(cj));
    sc.add(bern4(cj));
    sd.add(bern5(cj));
  }
  double dn = n;
  StirlingCorrection out;
  out.a = 0.5 * sa.value() - bern2(c0) / (2.0 * dn);
  out.b = -sb.value() / 6.0 + bern3(c0) / (6.0 * dn * dn);
  out.c = sc.value() / 12.0 - bern4(c0) / (12.0 * dn * dn * dn);
  out.d = -sd.value() / 20.0 + bern5(c0) / (20.0 * dn * dn * dn * dn);
  return out;
}

double right_edge_density(int n, int beta, double d) {
  check_system(n, beta);
  if (!(d > 0.0)) throw domain_error("right_edge_density: need d > 0");
  double nlogn = double(n) * std::log(double(n));
  double t = -std::log(d) - nlogn;
  if (t < 0.0) return 0.0;  // above the edge d = n^-n
  double pe = stirling_exponent(n, beta) - 1.0;
  if (t == 0.0) return pe == 0.0 ? stirling_amplitude(n, beta) / d : 0.0;
  return std::exp(detail::log_stirling_amplitude(n, beta) +
                  pe * std::log(t) - ln_gamma(pe + 1.0) - std::log(d));
}

double right_edge_density_g(int n, int beta, double g) {
  check_system(n, beta);
  if (!(g > 0.0)) throw domain_error("right_edge_density_g: need g > 0");
  if (g > 1.0) return 0.0;
  double pe = stirling_exponent(n, beta) - 1.0;
  // 1 - g^n computed as -expm1(n log g) to keep accuracy near g = 1
  double one_minus = -std::expm1(double(n) * std::log(g));
  if (one_minus == 0.0)
    return pe == 0.0 ? stirling_amplitude_g(n, beta) / g : 0.0;
  return stirling_amplitude_g(n, beta) * std::pow(one_minus, pe) / g;
}

EdgeExpansion left_edge_coeffs_complex(
    int n, const std::function<double(double)>& psi) {
  check_system(n, 2);
  if (n < 3)
    throw domain_error(
        "left_edge_coeffs_complex: n = 2 has a closed-form law; "
        "use density_n2_closed");
  auto wp = [&](double c, double x) { return weighted_digamma(c, x, psi); };
  double nn = double(n) * n;
  double z = std::exp(lg(nn) - lg(nn - n) - lg(double(n)));
  double x = std::exp(lg(nn) - lg(nn - 2.0 * n) - lg(double(n)) -
                      lg(double(n) - 1.0));
  double xt = x * (n - 4.0 + wp(n, nn - 2.0 * n) - wp(2.0, 1.0) -
                   wp(n - 2.0, n - 2.0));
  EdgeExpansion out;
  out.edge = Edge::left;
  out.n = n;
  out.beta = 2;
  out.truncated = n > 3;
  out.terms = {{0, 1, 0, z}, {1, 1, 1, x}, {1, 1, 0, xt}};
  if (n == 3) {
    out.terms.push_back({2, 1, 2, 0.0});
    out.terms.push_back({2, 1, 1, 30240.0});
    out.terms.push_back({2, 1, 0, 45360.0});
  }
  return out;
}

EdgeExpansion left_edge_coeffs_real(
    int n, const std::function<double(double)>& psi) {
  check_system(n, 1);
  if (n < 3)
    throw domain_error(
        "left_edge_coeffs_real: n = 2 has a closed-form law; "
        "use density_n2_closed");
  auto wp = [&](double c, double x) { return weighted_digamma(c, x, psi); };
  double nn = double(n) * n;
  double dn = n;
  double log2 = std::log(2.0);
  double logpi = std::log(M_PI);
  double z = std::exp((dn - 1.0) * log2 + lg(0.5 * (nn + dn)) -
                      lg(0.5 * (nn - dn)) - lg(dn));
  double y = -std::exp(0.5 * logpi + (dn - 1.0) * log2 +
                       lg(0.5 * (nn + dn)) - lg(0.5 * (nn - 2.0 * dn)) -
                       lg(0.5 * (dn + 1.0)) - lg(dn - 1.0));
  double x, xt, w, wt;
  if (n == 3) {
    // Gamma((n^2-3n)/2) = Gamma(0) in the prefactor kills the log term
    x = 0.0;
    xt = 1440.0;
  } else {
    x = -std::exp((2.0 * dn - 3.0) * log2 + lg(0.5 * (nn + dn)) -
                  lg(0.5 * (nn - 3.0 * dn)) - lg(dn) - lg(dn - 2.0));
    xt = x * (dn - 8.0 + wp(dn, 0.5 * (nn - 3.0 * dn)) - wp(1.5, 0.5) -
              wp(2.0, 1.0) - wp(0.5 * (dn - 3.0), 0.5 * (dn - 3.0)) -
              wp(0.5 * (dn - 4.0), 0.5 * (dn - 4.0)));
  }
  if (n == 3) {
    w = 0.0;
    wt = 480.0;
  } else if (n == 4) {
    w = 0.0;
    wt = 10321920.0;
  } else {
    w = -(std::sqrt(M_PI) / 3.0) *
        std::exp((2.0 * dn - 3.0) * log2 + lg(0.5 * (nn + dn)) -
                 lg(0.5 * (nn - 4.0 * dn)) - lg(0.5 * (dn + 1.0)) -
                 lg(dn - 1.0) - lg(dn - 3.0));
    wt = w * (dn - 35.0 / 3.0 + wp(dn, 0.5 * (nn - 4.0 * dn)) -
              wp(2.5, 0.5) - wp(2.0, 1.0) -
              wp(0.5 * (dn - 4.0), 0.5 * (dn - 4.0)) -
              wp(0.5 * (dn - 5.0), 0.5 * (dn - 5.0)));
  }
  EdgeExpansion out;
  out.edge = Edge::left;
  out.n = n;
  out.beta = 1;
  out.truncated = false;
  out.terms = {{0, 1, 0, z},  {1, 2, 0, y},  {1, 1, 1, x},
               {1, 1, 0, xt}, {3, 2, 1, w},  {3, 2, 0, wt}};
  return out;
}

double left_edge_eval(const EdgeExpansion& expansion, double d) {
  if (d < 0.0) throw domain_error("left_edge_eval: need d >= 0");
  if (d == 0.0) {
    double v = 0.0;
    for (const auto& term : expansion.terms)
      if (term.num == 0 && term.log_power == 0) v += term.coeff;
    return v;
  }
  double ld = std::log(d);
  kahan<double> acc;
  for (const auto& term : expansion.terms) {
    if (term.coeff == 0.0) continue;
    double v = term.coeff * std::exp(term.d_power() * ld);
    for (int i = 0; i < term.log_power; ++i) v *= ld;
    acc.add(v);
  }
  return acc.value();
}

}  // namespace gconc
