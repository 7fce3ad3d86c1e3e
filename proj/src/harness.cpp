#include "gconc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gconc/errors.hpp"
#include "gconc/kahan.hpp"
#include "gconc/moments.hpp"

namespace gconc {

namespace {

double observable(const SchmidtSpectrum& s, Variable variable) {
  if (variable == Variable::G) return s.g;
  return std::isfinite(s.det_log) ? std::exp(s.det_log) : 0.0;
}

}  // namespace

HistogramData run_histogram_experiment(const SystemSpec& spec,
                                       std::size_t samples, int bins,
                                       Variable variable,
                                       std::uint64_t seed) {
  validate(spec);
  if (samples == 0)
    throw contract_error("run_histogram_experiment: need samples > 0");
  if (bins < 2)
    throw contract_error("run_histogram_experiment: need at least 2 bins");

  double hi = variable == Variable::D
                  ? std::exp(-double(spec.n) * std::log(double(spec.n)))
                  : 1.0;
  HistogramData h;
  h.variable = variable;
  h.spec = spec;
  h.seed = seed;
  h.edges.resize(std::size_t(bins) + 1);
  for (int j = 0; j <= bins; ++j)
    h.edges[std::size_t(j)] = hi * double(j) / double(bins);
  h.counts.assign(std::size_t(bins), 0);

  std::vector<SchmidtSpectrum> batch = sample_batch(spec, samples, seed);
  for (const auto& s : batch) {
    double x = observable(s, variable);
    int j = int(std::floor(x / hi * bins));
    j = std::clamp(j, 0, bins - 1);
    ++h.counts[std::size_t(j)];
  }
  h.total = samples;
  h.density.resize(std::size_t(bins));
  for (int j = 0; j < bins; ++j) {
    double width = h.edges[std::size_t(j) + 1] - h.edges[std::size_t(j)];
    h.density[std::size_t(j)] =
        double(h.counts[std::size_t(j)]) / (double(h.total) * width);
  }
  return h;
}

FitReport compare_density(const HistogramData& h, const DensityCurve& c) {
  if (h.variable != c.variable)
    throw contract_error("compare_density: histogram and curve variables differ");
  if (h.spec.n != c.n || h.spec.beta != c.beta)
    throw contract_error("compare_density: histogram and curve systems differ");
  if (h.spec.k != h.spec.n + 2 - h.spec.beta)
    throw contract_error(
        "compare_density: density curves describe the k = n + 2 - beta "
        "ensemble only");
  if (h.total == 0) throw contract_error("compare_density: empty histogram");

  std::size_t bins = h.counts.size();
  double mass = detail::curve_cdf_at(c, h.edges.back());
  if (!(mass > 0.0))
    throw contract_error("compare_density: curve carries no mass");

  // KS on the shared bin-edge lattice
  std::vector<double> cdf(bins + 1);
  for (std::size_t j = 0; j <= bins; ++j)
    cdf[j] = detail::curve_cdf_at(c, h.edges[j]) / mass;
  FitReport report;
  std::uint64_t cum = 0;
  for (std::size_t j = 0; j <= bins; ++j) {
    if (j > 0) cum += h.counts[j - 1];
    double emp = double(cum) / double(h.total);
    report.ks_distance = std::max(report.ks_distance, std::abs(emp - cdf[j]));
  }

  // Pearson chi^2 with expected counts >= 10 per merged bin
  std::vector<double> exp_merged, obs_merged;
  double e_acc = 0.0, o_acc = 0.0;
  for (std::size_t j = 0; j < bins; ++j) {
    e_acc += double(h.total) * (cdf[j + 1] - cdf[j]);
    o_acc += double(h.counts[j]);
    if (e_acc >= 10.0) {
      exp_merged.push_back(e_acc);
      obs_merged.push_back(o_acc);
      e_acc = 0.0;
      o_acc = 0.0;
    }
  }
  if (e_acc > 0.0 || o_acc > 0.0) {
    if (exp_merged.empty()) {
      exp_merged.push_back(e_acc);
      obs_merged.push_back(o_acc);
    } else {
      exp_merged.back() += e_acc;
      obs_merged.back() += o_acc;
    }
  }
  kahan<double> chi;
  for (std::size_t j = 0; j < exp_merged.size(); ++j) {
    double r = (obs_merged[j] - exp_merged[j]) / std::sqrt(exp_merged[j]);
    chi.add(r * r);
    report.max_abs_residual_sigma =
        std::max(report.max_abs_residual_sigma, std::abs(r));
  }
  report.chi_square = chi.value();
  report.dof = int(exp_merged.size()) - 1;
  return report;
}

std::vector<MomentRow> moment_check(const SystemSpec& spec,
                                    std::size_t samples, Variable variable,
                                    const std::vector<double>& orders,
                                    std::uint64_t seed) {
  validate(spec);
  if (orders.empty()) throw contract_error("moment_check: no orders given");
  if (samples < 200)
    throw contract_error("moment_check: need at least 200 samples");
  bool hs = spec.k == spec.n + 2 - spec.beta;
  if (variable == Variable::D && !hs)
    throw contract_error(
        "moment_check: exact D moments are wired for k = n + 2 - beta; "
        "use Variable::G for induced ensembles");

  std::vector<SchmidtSpectrum> batch = sample_batch(spec, samples, seed);
  const std::size_t blocks = 100;
  std::vector<MomentRow> rows;
  rows.reserve(orders.size());
  for (double m : orders) {
    MomentRow row;
    row.order = m;
    row.exact = variable == Variable::D
                    ? std::exp(det_moment_hs(spec.n, spec.beta, m)
                                   .log_value.real())
                    : std::exp(g_moment_induced(spec.n, spec.k, spec.beta, m)
                                   .log_value.real());

    std::vector<double> block_sum(blocks, 0.0);
    std::vector<std::size_t> block_count(blocks, 0);
    kahan<double> total;
    for (std::size_t i = 0; i < samples; ++i) {
      double base = variable == Variable::D
                        ? batch[i].det_log
                        : (batch[i].g > 0.0 ? std::log(batch[i].g)
                                            : -std::numeric_limits<
                                                  double>::infinity());
      double v = m == 0.0 ? 1.0 : std::exp(m * base);
      std::size_t b = i * blocks / samples;
      block_sum[b] += v;
      block_count[b] += 1;
      total.add(v);
    }
    row.empirical = total.value() / double(samples);

    // jackknife over the blocks
    double theta_bar = 0.0;
    std::vector<double> theta(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      theta[b] = (total.value() - block_sum[b]) /
                 double(samples - block_count[b]);
      theta_bar += theta[b];
    }
    theta_bar /= double(blocks);
    kahan<double> var;
    for (std::size_t b = 0; b < blocks; ++b) {
      double d = theta[b] - theta_bar;
      var.add(d * d);
    }
    row.std_error =
        std::sqrt(var.value() * double(blocks - 1) / double(blocks));
    row.z_score = row.std_error > 0.0
                      ? (row.empirical - row.exact) / row.std_error
                      : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConcentrationRow> concentration_scan(
    int l1, int l2, const std::vector<int>& j_values, int beta,
    std::size_t samples, std::uint64_t seed, std::size_t nk_cap) {
  if (l1 < 1 || l2 < l1)
    throw domain_error("concentration_scan: need l2 >= l1 >= 1");
  if (beta != 1 && beta != 2)
    throw domain_error("concentration_scan: beta must be 1 or 2");
  if (samples < 2)
    throw contract_error("concentration_scan: need at least 2 samples");
  if (j_values.empty())
    throw contract_error("concentration_scan: no J values given");

  double q = double(l2) / double(l1);
  double target = l2 == l1 ? std::exp(-1.0) : concentration_point(q);

  std::vector<ConcentrationRow> rows;
  rows.reserve(j_values.size());
  for (int j : j_values) {
    if (j < 1) throw domain_error("concentration_scan: J values must be >= 1");
    SystemSpec spec{j * l1, j * l2, beta};
    if (std::size_t(spec.n) * std::size_t(spec.k) > nk_cap)
      throw capability_error(
          "concentration_scan: N*K exceeds the configured cap");
    validate(spec);
    std::vector<SchmidtSpectrum> batch =
        sample_batch(spec, samples, seed + std::uint64_t(j));
    kahan<double> sum;
    for (const auto& s : batch) sum.add(s.g);
    double mean = sum.value() / double(samples);
    kahan<double> var;
    for (const auto& s : batch) {
      double d = s.g - mean;
      var.add(d * d);
    }
    rows.push_back({j, spec.n, spec.k, mean,
                    var.value() / double(samples - 1), target});
  }
  return rows;
}

}  // namespace gconc
