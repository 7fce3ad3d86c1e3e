#pragma once
// Edge behaviour of the determinant law: the Stirling large-order form of
// the moments with its 1/m correction ladder, the right-edge density near
// D_max = n^-n (and its G counterpart), and the small-D expansions.

#include <functional>
#include <vector>

namespace gconc {

enum class Edge { left, right };

// One term coeff * d^(num/den) * (log d)^log_power.  The d-power is kept
// rational exactly; den is 1 or 2 (half powers appear only for beta = 1).
struct EdgeTerm {
  int num;
  int den;
  int log_power;
  double coeff;
  double d_power() const { return double(num) / den; }
};

struct EdgeExpansion {
  Edge edge;
  int n;
  int beta;
  bool truncated;  // structurally nonzero higher orders were left out
  std::vector<EdgeTerm> terms;
};

// Prefactor A_N of the Stirling moment form D_S = A_N n^(-mn) / m^p.
double stirling_amplitude(int n, int beta);

// Its G-variable companion Atilde_N = A_N n / Gamma(p).
double stirling_amplitude_g(int n, int beta);

// Pole order p of the Stirling form: (n^2-1)/2 complex, (n^2+n-2)/4 real.
double stirling_exponent(int n, int beta);

// Coefficients of log<D^m> - log D_S = a/m + b/m^2 + c/m^3 + d/m^4 + ...
struct StirlingCorrection {
  double a, b, c, d;
};
StirlingCorrection stirling_correction_coeffs(int n, int beta);

// Leading right-edge density A_N (-log d - n log n)^(p-1) / (d (p-1)!),
// zero above the edge d = n^-n.
double right_edge_density(int n, int beta, double d);

// The same law in the G variable: Atilde_N (1 - g^n)^(p-1) / g for
// 0 < g <= 1, zero above g = 1.
double right_edge_density_g(int n, int beta, double g);

// Small-D expansion of P(D) for n >= 3 (n = 2 has a closed form law).
// The optional psi lets tests verify invariance under psi -> psi + const.
EdgeExpansion left_edge_coeffs_complex(
    int n, const std::function<double(double)>& psi = nullptr);
EdgeExpansion left_edge_coeffs_real(
    int n, const std::function<double(double)>& psi = nullptr);

// Sum the expansion terms at d (left edge: d small, d >= 0).
double left_edge_eval(const EdgeExpansion& expansion, double d);

}  // namespace gconc
