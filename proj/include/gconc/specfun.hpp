#pragma once
// Log-gamma (real and complex principal branch), digamma, and the weighted
// digamma convention used by the edge coefficient tables.

#include <complex>
#include <functional>

namespace gconc {

// log Gamma(x) for x > 0.
double ln_gamma(double x);

// Principal branch of log Gamma on the cut plane.  The imaginary part is
// continuous away from the negative real axis and is NOT reduced mod 2 pi,
// so exp(ln_gamma(z)) == Gamma(z) and ln_gamma(conj z) == conj(ln_gamma(z)).
std::complex<double> ln_gamma(std::complex<double> z);

// psi(x) = d/dx log Gamma(x) for x > 0.
double digamma(double x);

// c * psi(x), with the limit convention that weight and argument vanishing
// together gives lim_{e->0} e * psi(e) = -1.  A zero argument with a
// nonzero weight is a genuine pole and throws.
double weighted_digamma(double c, double x);

// Same convention around a caller-supplied psi (used to verify that the
// edge coefficients are invariant under psi -> psi + const).
double weighted_digamma(double c, double x,
                        const std::function<double(double)>& psi);

}  // namespace gconc
