#include "gconc/moments.hpp"

#include <cmath>
#include <sstream>

#include "gconc/errors.hpp"
#include "gconc/kahan.hpp"
#include "gconc/specfun.hpp"

namespace gconc {

namespace {

void check_system(int n, int beta) {
  if (n < 2) throw domain_error("moments: need n >= 2");
  if (beta != 1 && beta != 2) throw domain_error("moments: beta must be 1 or 2");
}

int hs_k(int n, int beta) { return n + 2 - beta; }

}  // namespace

namespace detail {

std::complex<double> log_c_ratio(int n, int k, int beta,
                                 std::complex<double> q) {
  // alpha_j = alpha0 + (j-1) beta/2, c_tot = sum_j alpha_j
  double alpha0 = 0.5 * beta * (k - n + 1);
  double c_tot = n * alpha0 + 0.5 * beta * n * (n - 1);
  kahan<std::complex<double>> acc;
  acc.add(ln_gamma(std::complex<double>(c_tot, 0.0)));
  acc.add(-ln_gamma(c_tot + double(n) * q));
  for (int j = 1; j <= n; ++j) {
    double aj = alpha0 + 0.5 * beta * (j - 1);
    acc.add(ln_gamma(aj + q));
    acc.add(std::complex<double>(-ln_gamma(aj), 0.0));
  }
  return acc.value();
}

std::complex<double> log_det_moment_hs(int n, int beta,
                                       std::complex<double> m) {
  return log_c_ratio(n, hs_k(n, beta), beta, m);
}

double log_stirling_amplitude(int n, int beta) {
  kahan<double> acc;
  if (beta == 2) {
    acc.add(0.5 * (n - 1) * std::log(2.0 * M_PI));
    acc.add(ln_gamma(double(n) * n));
    acc.add(-(double(n) * n - 0.5) * std::log(double(n)));
    for (int j = 1; j <= n; ++j) acc.add(-ln_gamma(double(j)));
  } else {
    double c = 0.5 * (double(n) * n + n);
    acc.add(0.5 * (n - 1) * std::log(2.0 * M_PI));
    acc.add(ln_gamma(c));
    acc.add(-0.5 * (double(n) * n + n - 1.0) * std::log(double(n)));
    for (int j = 1; j <= n; ++j) acc.add(-ln_gamma(0.5 * (j + 1)));
  }
  return acc.value();
}

}  // namespace detail

MomentValue det_moment_hs(int n, int beta, std::complex<double> m) {
  check_system(n, beta);
  if (!(m.real() > -1.0)) {
    std::ostringstream os;
    os << "det_moment_hs: Re m = " << m.real()
       << " is not right of the first pole at m = -1";
    throw pole_error(os.str(), -1.0);
  }
  return {m, detail::log_det_moment_hs(n, beta, m)};
}

MomentValue g_moment_hs(int n, int beta, std::complex<double> m) {
  check_system(n, beta);
  if (!(m.real() > -double(n))) {
    std::ostringstream os;
    os << "g_moment_hs: Re m = " << m.real()
       << " is not right of the first pole at m = " << -n;
    throw pole_error(os.str(), -double(n));
  }
  // G^m = n^m D^(m/n)
  std::complex<double> log_v =
      m * std::log(double(n)) +
      detail::log_c_ratio(n, hs_k(n, beta), beta, m / double(n));
  return {m, log_v};
}

MomentValue g_moment_induced(int n, int k, int beta, std::complex<double> m) {
  check_system(n, beta);
  if (k < n) throw domain_error("g_moment_induced: need k >= n");
  double alpha0 = 0.5 * beta * (k - n + 1);
  double first_pole = -double(n) * alpha0;
  if (!(m.real() > first_pole)) {
    std::ostringstream os;
    os << "g_moment_induced: Re m = " << m.real()
       << " is not right of the first pole at m = " << first_pole;
    throw pole_error(os.str(), first_pole);
  }
  std::complex<double> log_v =
      m * std::log(double(n)) +
      detail::log_c_ratio(n, k, beta, m / double(n));
  return {m, log_v};
}

MomentValue det_moment_stirling(int n, int beta, std::complex<double> m) {
  check_system(n, beta);
  if (m == std::complex<double>(0.0, 0.0))
    throw pole_error("det_moment_stirling: pole of order p at m = 0", 0.0);
  double p = beta == 2 ? 0.5 * (double(n) * n - 1.0)
                       : 0.25 * (double(n) * n + n - 2.0);
  std::complex<double> log_v = detail::log_stirling_amplitude(n, beta) -
                               m * (double(n) * std::log(double(n))) -
                               p * std::log(m);
  return {m, log_v};
}

double limit_moment(double m) {
  if (!(m >= 0.0)) throw domain_error("limit_moment: need m >= 0");
  return std::exp(-m);
}

double concentration_point(double q) {
  if (!(q > 1.0))
    throw domain_error("concentration_point: need Renyi parameter q > 1");
  // X_q = exp(-1 + (q-1) log(1 + 1/(q-1))), stable for q -> 1+ and q -> inf
  double qm1 = q - 1.0;
  return std::exp(-1.0 + qm1 * std::log1p(1.0 / qm1));
}

}  // namespace gconc
