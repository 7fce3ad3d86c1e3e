#include "gconc/specfun.hpp"

#include <cmath>

#include "gconc/errors.hpp"

namespace gconc {

namespace {

// ---- frozen series coefficients -------------------------------------

// log Gamma(1+w) = -gamma w + sum_{k>=2} (-1)^k zeta(k)/k w^k  (|w| <= 0.25)
constexpr double kTaylor1[] = {
    -0.5772156649015329, 0.8224670334241132, -0.40068563438653143,
    0.27058080842778454, -0.20738555102867398, 0.1695571769974082,
    -0.1440498967688461, 0.12550966952474304, -0.11133426586956469,
    0.1000994575127818, -0.09095401714582904, 0.083353840546109,
    -0.0769325164113522, 0.07143294629536133, -0.06666870588242046,
    0.06250095514121304, -0.058823978658684585, 0.055555767627403614,
    -0.05263167937961666, 0.05000004769810169, -0.047619070330142226,
    0.04545455629320467, -0.04347826605304026,
};

// log Gamma(2+w) = (1-gamma) w + sum_{k>=2} (-1)^k (zeta(k)-1)/k w^k
constexpr double kTaylor2[] = {
    0.42278433509846713, 0.3224670334241132, -0.0673523010531981,
    0.020580808427784546, -0.007385551028673986, 0.0028905103307415234,
    -0.001192753911703261, 0.0005096695247430425, -0.00022315475845357939,
    9.945751278180853e-05, -4.492623673813314e-05, 2.050721277567069e-05,
    -9.439488275268397e-06, 4.374866789907488e-06, -2.039215753801366e-06,
    9.55141213040742e-07, -4.492469198764566e-07, 2.1207184805554665e-07,
    -1.0043224823968099e-07, 4.7698101693639804e-08, -2.2711094608943164e-08,
    1.0838659214896955e-08, -5.183475041970047e-09,
};

// B_{2k} / (2k (2k-1)), k = 1..10, for the Stirling asymptotic series.
constexpr double kStirlingLg[] = {
    0.08333333333333333, -0.002777777777777778, 0.0007936507936507937,
    -0.0005952380952380953, 0.0008417508417508417, -0.0019175269175269176,
    0.00641025641025641, -0.029550653594771242, 0.17964437236883057,
    -1.3924322169059011,
};

// B_{2k} / (2k), k = 1..7, for the digamma asymptotic series.
constexpr double kDigammaAsym[] = {
    1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0,
};

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kLogPi = 1.1447298858494001741434273;
constexpr double kHalfLog2Pi = 0.9189385332046727417803297;

std::complex<double> taylor(std::complex<double> w, const double* c, int len) {
  std::complex<double> acc(c[len - 1], 0.0);
  for (int i = len - 2; i >= 0; --i) acc = acc * w + c[i];
  return w * acc;
}

// (z - 1/2) log z - z + log(2 pi)/2 + sum B_{2k} / (2k(2k-1) z^{2k-1}),
// valid for Re z > 7 or |Im z| > 7.
std::complex<double> lg_asymptotic(std::complex<double> z) {
  std::complex<double> r =
      (z - 0.5) * std::log(z) - z + kHalfLog2Pi;
  std::complex<double> zi = 1.0 / z;
  std::complex<double> z2 = zi * zi;
  std::complex<double> t = zi;
  for (double c : kStirlingLg) {
    r += c * t;
    t *= z2;
  }
  return r;
}

// log(sin(pi z)) on the principal branch.  The real part of z is reduced
// mod 2 (exact, sin is 2-periodic) so huge arguments stay accurate; for
// very large |Im z| the hyperbolic factors would overflow, so switch to
// the dominant-exponential form there.
std::complex<double> log_sin_pi(std::complex<double> z) {
  double xr = std::fmod(z.real(), 2.0);
  double y = z.imag();
  double s = std::sin(M_PI * xr);
  double c = std::cos(M_PI * xr);
  if (std::fabs(y) < 150.0) {
    return std::log(std::complex<double>(s * std::cosh(M_PI * y),
                                         c * std::sinh(M_PI * y)));
  }
  double sgn = y > 0.0 ? 1.0 : -1.0;
  return {M_PI * std::fabs(y) - M_LN2, std::atan2(c * sgn, s)};
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw domain_error("ln_gamma: argument must be positive");
  int sign = 0;
  return lgamma_r(x, &sign);
}

std::complex<double> ln_gamma(std::complex<double> z) {
  double x = z.real();
  double y = z.imag();
  if (y == 0.0) {
    if (x > 0.0) return {ln_gamma(x), 0.0};
    if (x == std::floor(x))
      throw domain_error("ln_gamma: pole at nonpositive integer");
  }
  if (std::signbit(y)) return std::conj(ln_gamma(std::conj(z)));

  if (x < 0.1) {
    // reflection; the floor term keeps the branch principal
    std::complex<double> shift(kLogPi,
                               kTwoPi * std::floor(0.5 * x + 0.25));
    return shift - log_sin_pi(z) - ln_gamma(1.0 - z);
  }
  if (std::abs(z - 1.0) <= 0.25) return taylor(z - 1.0, kTaylor1, 23);
  if (std::abs(z - 2.0) <= 0.25) return taylor(z - 2.0, kTaylor2, 23);
  if (x > 7.0 || y > 7.0) return lg_asymptotic(z);

  // shift right until the asymptotic region, tracking how often the
  // running product's argument wraps past pi (principal log loses 2 pi
  // per + -> - crossing of the imaginary part)
  std::complex<double> prod = z;
  bool neg = std::signbit(prod.imag());
  int wraps = 0;
  double xs = x + 1.0;
  while (xs <= 7.0) {
    prod *= std::complex<double>(xs, y);
    bool nb = std::signbit(prod.imag());
    if (nb && !neg) ++wraps;
    neg = nb;
    xs += 1.0;
  }
  std::complex<double> lg_shift = std::log(prod) +
      std::complex<double>(0.0, kTwoPi * wraps);
  return lg_asymptotic(std::complex<double>(xs, y)) - lg_shift;
}

double digamma(double x) {
  if (!(x > 0.0)) throw domain_error("digamma: argument must be positive");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double u = 1.0 / (x * x);
  double tail = 0.0;
  for (int i = 6; i >= 0; --i) tail = tail * u + kDigammaAsym[i];
  return acc + std::log(x) - 0.5 / x - tail * u;
}

double weighted_digamma(double c, double x) {
  if (x == 0.0) {
    if (c != 0.0)
      throw domain_error("weighted_digamma: psi pole with nonzero weight");
    return -1.0;
  }
  if (c == 0.0) return 0.0;
  return c * digamma(x);
}

double weighted_digamma(double c, double x,
                        const std::function<double(double)>& psi) {
  if (!psi) return weighted_digamma(c, x);
  if (x == 0.0) {
    if (c != 0.0)
      throw domain_error("weighted_digamma: psi pole with nonzero weight");
    return -1.0;
  }
  if (c == 0.0) return 0.0;
  return c * psi(x);
}

}  // namespace gconc
