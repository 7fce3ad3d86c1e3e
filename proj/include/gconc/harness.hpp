#pragma once
// Statistical validation: histogram experiments against density curves,
// moment-matching tables with jackknife errors, and concentration scans
// over growing dimensions.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gconc/ensembles.hpp"
#include "gconc/inverse_transform.hpp"

namespace gconc {

struct HistogramData {
  Variable variable = Variable::D;
  SystemSpec spec;
  std::uint64_t seed = 0;
  std::vector<double> edges;   // bins + 1 ascending boundaries
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  std::vector<double> density;  // counts / (total * width); integrates to 1
};

struct FitReport {
  double ks_distance = 0.0;
  double chi_square = 0.0;
  int dof = 0;
  double max_abs_residual_sigma = 0.0;
};

// Uniform-bin histogram of D on [0, n^-n] or G on [0, 1].
HistogramData run_histogram_experiment(const SystemSpec& spec,
                                       std::size_t samples, int bins,
                                       Variable variable,
                                       std::uint64_t seed);

// KS distance between CDFs plus Pearson chi^2 with per-bin expected counts
// integrated from the curve (bins with expected < 10 merged).
FitReport compare_density(const HistogramData& h, const DensityCurve& c);

struct MomentRow {
  double order = 0.0;
  double exact = 0.0;
  double empirical = 0.0;
  double std_error = 0.0;
  double z_score = 0.0;
};

// Empirical moments of D or G with jackknife standard errors over 100
// blocks, against the exact values from the moments module.
std::vector<MomentRow> moment_check(const SystemSpec& spec,
                                    std::size_t samples, Variable variable,
                                    const std::vector<double>& orders,
                                    std::uint64_t seed);

struct ConcentrationRow {
  int j = 0;
  int n = 0;
  int k = 0;
  double mean_g = 0.0;
  double var_g = 0.0;
  double x_target = 0.0;
};

// Scan J in j_values with N = J l1, K = J l2 (q = l2 / l1 >= 1); the
// target column is X_q, or 1/e for q = 1.  N*K is capped to keep the
// eigenproblems desk-sized.
std::vector<ConcentrationRow> concentration_scan(
    int l1, int l2, const std::vector<int>& j_values, int beta,
    std::size_t samples, std::uint64_t seed,
    std::size_t nk_cap = 16384);

}  // namespace gconc
