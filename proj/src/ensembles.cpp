#include "gconc/ensembles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "gconc/errors.hpp"
#include "gconc/kahan.hpp"

namespace gconc {

void validate(const SystemSpec& spec) {
  if (spec.n < 2) throw domain_error("SystemSpec: need n >= 2");
  if (spec.k < spec.n)
    throw domain_error("SystemSpec: need k >= n (trace down the larger side)");
  if (spec.beta != 1 && spec.beta != 2)
    throw domain_error("SystemSpec: beta must be 1 (real) or 2 (complex)");
}

SystemSpec hs_spec(int n, int beta) {
  SystemSpec spec{n, n + 2 - beta, beta};
  validate(spec);
  return spec;
}

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(uint32_t x[4], const uint32_t k[2]) {
  uint64_t p0 = uint64_t(kPhiloxM0) * x[0];
  uint64_t p1 = uint64_t(kPhiloxM1) * x[2];
  uint32_t y0 = uint32_t(p1 >> 32) ^ x[1] ^ k[0];
  uint32_t y1 = uint32_t(p1);
  uint32_t y2 = uint32_t(p0 >> 32) ^ x[3] ^ k[1];
  uint32_t y3 = uint32_t(p0);
  x[0] = y0;
  x[1] = y1;
  x[2] = y2;
  x[3] = y3;
}

constexpr double kTwoPi = 6.283185307179586476925287;

}  // namespace

void PhiloxRng::block(const uint32_t ctr[4], const uint32_t key[2],
                      uint32_t out[4]) {
  uint32_t x[4] = {ctr[0], ctr[1], ctr[2], ctr[3]};
  uint32_t k[2] = {key[0], key[1]};
  for (int round = 0; round < 9; ++round) {
    philox_round(x, k);
    k[0] += kPhiloxW0;
    k[1] += kPhiloxW1;
  }
  philox_round(x, k);
  out[0] = x[0];
  out[1] = x[1];
  out[2] = x[2];
  out[3] = x[3];
}

PhiloxRng::PhiloxRng(uint64_t seed, uint64_t sample_index)
    : sample_(sample_index) {
  key_[0] = uint32_t(seed);
  key_[1] = uint32_t(seed >> 32);
}

double PhiloxRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  uint32_t ctr[4] = {block_idx_, uint32_t(sample_), uint32_t(sample_ >> 32),
                     0u};
  uint32_t w[4];
  block(ctr, key_, w);
  ++block_idx_;
  // center each 64-bit draw in its cell so u is never 0 or 1
  double u1 =
      (double((uint64_t(w[0]) << 32) | w[1]) + 0.5) * 0x1p-64;
  double u2 =
      (double((uint64_t(w[2]) << 32) | w[3]) + 0.5) * 0x1p-64;
  double r = std::sqrt(-2.0 * std::log(u1));
  double z0 = r * std::cos(kTwoPi * u2);
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return z0;
}

GinibreMatrix sample_ginibre(const SystemSpec& spec, PhiloxRng& rng) {
  validate(spec);
  GinibreMatrix a;
  a.n = spec.n;
  a.k = spec.k;
  a.beta = spec.beta;
  std::size_t cells = std::size_t(spec.n) * std::size_t(spec.k);
  a.data.resize(spec.beta == 2 ? 2 * cells : cells);
  for (double& v : a.data) v = rng.normal();
  return a;
}

SchmidtSpectrum reduce_to_spectrum(const GinibreMatrix& a) {
  if (a.n < 2 || a.k < a.n || (a.beta != 1 && a.beta != 2))
    throw domain_error("reduce_to_spectrum: malformed matrix header");
  std::size_t cells = std::size_t(a.n) * std::size_t(a.k);
  if (a.data.size() != (a.beta == 2 ? 2 * cells : cells))
    throw domain_error("reduce_to_spectrum: data length does not match shape");

  Eigen::VectorXd eig;
  if (a.beta == 2) {
    Eigen::MatrixXcd m(a.n, a.k);
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.k; ++j) {
        std::size_t base = 2 * (std::size_t(i) * a.k + j);
        m(i, j) = std::complex<double>(a.data[base], a.data[base + 1]);
      }
    Eigen::MatrixXcd w = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w);
    eig = solver.eigenvalues();
  } else {
    Eigen::MatrixXd m(a.n, a.k);
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.k; ++j)
        m(i, j) = a.data[std::size_t(i) * a.k + j];
    Eigen::MatrixXd w = m * m.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w);
    eig = solver.eigenvalues();
  }

  double trace = eig.sum();
  if (!(trace > 0.0))
    throw degenerate_input_error("reduce_to_spectrum: zero or invalid matrix");

  SchmidtSpectrum s;
  s.values.resize(a.n);
  for (int i = 0; i < a.n; ++i) {
    double lam = eig[a.n - 1 - i] / trace;  // descending
    if (lam < 0.0) {
      if (lam < -1e-14)
        throw degenerate_input_error(
            "reduce_to_spectrum: eigenvalue below tolerance");
      lam = 0.0;
    }
    s.values[i] = lam;
  }
  kahan<double> logsum;
  bool singular = false;
  for (double lam : s.values) {
    if (lam == 0.0) {
      singular = true;
      break;
    }
    logsum.add(std::log(lam));
  }
  s.det_log = singular ? -std::numeric_limits<double>::infinity()
                       : logsum.value();
  s.g = singular ? 0.0 : a.n * std::exp(s.det_log / a.n);
  return s;
}

std::pair<double, double> symmetric_monotones(const SchmidtSpectrum& s,
                                              int k) {
  int n = int(s.values.size());
  if (k < 2 || k > n)
    throw domain_error("symmetric_monotones: need 2 <= k <= n");
  // ascending update keeps every partial sum a polynomial of the prefix
  std::vector<double> e(std::size_t(k) + 1, 0.0);
  e[0] = 1.0;
  for (double lam : s.values)
    for (int j = std::min<int>(k, n); j >= 1; --j)
      e[j] += lam * e[j - 1];
  double ek = e[k];
  double root = ek > 0.0 ? std::exp(std::log(ek) / n) : 0.0;
  return {ek, root};
}

std::vector<SchmidtSpectrum> sample_batch(const SystemSpec& spec,
                                          std::size_t count, uint64_t seed) {
  validate(spec);
  std::vector<SchmidtSpectrum> out(count);
  if (count == 0) return out;

  std::size_t threads = 1;
  if (const char* env = std::getenv("GCONC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 1) threads = std::size_t(v);
  }
  threads = std::min(threads, count);

  std::atomic<std::size_t> first_fail{count};
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        PhiloxRng rng(seed, i);
        GinibreMatrix a = sample_ginibre(spec, rng);
        out[i] = reduce_to_spectrum(a);
      } catch (const std::exception&) {
        std::size_t expect = first_fail.load();
        while (i < expect && !first_fail.compare_exchange_weak(expect, i)) {
        }
        return;
      }
    }
  };

  if (threads == 1) {
    worker(0, count);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      std::size_t begin = t * chunk;
      std::size_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::size_t fail = first_fail.load();
  if (fail < count) {
    out.resize(fail);
    throw partial_result_error("sample_batch: sample failed", fail);
  }
  return out;
}

}  // namespace gconc
