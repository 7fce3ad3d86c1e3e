#pragma once
// Sampling of random bipartite pure states: counter-based Gaussian stream,
// Ginibre draws, reduction to Schmidt spectra, and symmetric monotones.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gconc {

// Bipartite n x k system, n <= k; beta = 1 real, beta = 2 complex.
struct SystemSpec {
  int n = 2;
  int k = 2;
  int beta = 2;
};

// HS measure is the induced measure at k = n + 2 - beta.
SystemSpec hs_spec(int n, int beta);

void validate(const SystemSpec& spec);

// Schmidt spectrum of one normalized sample.
struct SchmidtSpectrum {
  std::vector<double> values;  // descending, sums to 1
  double det_log;              // sum of log values; -inf when one underflows
  double g;                    // n * exp(det_log / n), in [0, 1]
};

// Row-major Ginibre draw; beta = 2 interleaves (re, im) per entry.
struct GinibreMatrix {
  int n = 0;
  int k = 0;
  int beta = 2;
  std::vector<double> data;
};

// Philox4x32-10 counter-based stream of standard normals.  The pair
// (seed, sample_index) pins the stream completely, so any sample of a
// batch can be regenerated in isolation and in any order.
class PhiloxRng {
 public:
  PhiloxRng(std::uint64_t seed, std::uint64_t sample_index);

  // Standard normal deviates, two per counter block via Box-Muller.
  double normal();

  // One raw Philox4x32-10 block (exposed for known-answer tests).
  static void block(const std::uint32_t ctr[4], const std::uint32_t key[2],
                    std::uint32_t out[4]);

 private:
  std::uint64_t sample_;
  std::uint32_t key_[2];
  std::uint32_t block_idx_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// n x k matrix of i.i.d. standard normals (real and imaginary parts
// independently N(0,1) for beta = 2), consuming the stream row by row.
GinibreMatrix sample_ginibre(const SystemSpec& spec, PhiloxRng& rng);

// Eigenvalues of A A^dag / Tr(A A^dag), sorted descending.
SchmidtSpectrum reduce_to_spectrum(const GinibreMatrix& a);

// Elementary symmetric polynomial tau_k = e_k(values) and its rescaled
// n-th root tau_k^(1/n); k must lie in 2..n.
std::pair<double, double> symmetric_monotones(const SchmidtSpectrum& s,
                                              int k);

// `count` independent spectra for (spec, seed).  Honors the GCONC_THREADS
// environment override; results are identical for any worker count.
std::vector<SchmidtSpectrum> sample_batch(const SystemSpec& spec,
                                          std::size_t count,
                                          std::uint64_t seed);

}  // namespace gconc
