#pragma once
// Exact moments of the determinant D and the G-concurrence G = N D^(1/N)
// for fixed-trace ensembles, plus the large-order Stirling form and the
// large-N limits.  Values are carried in log form; the analytic
// continuation in the order is handled by the complex log-gamma.

#include <complex>

namespace gconc {

// A moment in log form: value = exp(log_value).
struct MomentValue {
  std::complex<double> order;
  std::complex<double> log_value;
};

// <D^m> under the Hilbert-Schmidt measure (k = n + 2 - beta).
// Requires Re m > -1; the first pole sits at m = -1.
MomentValue det_moment_hs(int n, int beta, std::complex<double> m);

// <G^m> under the Hilbert-Schmidt measure.  Requires Re m > -n.
MomentValue g_moment_hs(int n, int beta, std::complex<double> m);

// <G^m> under the induced measure with k >= n extra dimensions.
// Requires Re m > -n alpha0 with alpha0 = beta (k - n + 1) / 2.
MomentValue g_moment_induced(int n, int k, int beta, std::complex<double> m);

// Stirling form D_S(m) = A_N exp(-m n log n) / m^p.  Requires m != 0.
MomentValue det_moment_stirling(int n, int beta, std::complex<double> m);

// N -> infinity limit of <G^m>: G concentrates at 1/e, so the limit is
// exp(-m).  Requires m >= 0.
double limit_moment(double m);

// Concentration point of tau_q^(1/n) for Renyi parameter q > 1:
// X_q = (1/e) (q/(q-1))^(q-1), continuous limit 1/e as q -> 1+.
double concentration_point(double q);

namespace detail {

// log <D^m> without the pole-side precondition; used by the contour
// inversion, which evaluates left of the first pole (off the real axis).
std::complex<double> log_det_moment_hs(int n, int beta,
                                       std::complex<double> m);

// log of the unified moment ratio for arbitrary alpha0 = beta(k-n+1)/2:
// log < prod lambda^q > at the given q.
std::complex<double> log_c_ratio(int n, int k, int beta,
                                 std::complex<double> q);

// log A_N, the prefactor of the Stirling form (shared with asymptotics).
double log_stirling_amplitude(int n, int beta);

}  // namespace detail

}  // namespace gconc
