// Command line front end: exact moments, density curves, edge expansion
// coefficients, Monte Carlo sampling, a quick self-validation suite, and
// the large-N limit tables.
//
// Exit codes: 0 success, 2 usage, 3 domain/capability, 4 accuracy or a
// failed validation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gconc/asymptotics.hpp"
#include "gconc/ensembles.hpp"
#include "gconc/errors.hpp"
#include "gconc/harness.hpp"
#include "gconc/inverse_transform.hpp"
#include "gconc/moments.hpp"

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file)
        throw gconc::domain_error("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

gconc::Variable parse_variable(const std::string& s) {
  if (s == "D" || s == "d") return gconc::Variable::D;
  if (s == "G" || s == "g") return gconc::Variable::G;
  throw gconc::domain_error("variable must be D or G");
}

// ---- moment ----

struct MomentOpts {
  int n = 2;
  int k = -1;  // -1: k = n + 2 - beta
  int beta = 2;
  std::string variable = "D";
  std::vector<double> orders;
  bool stirling = false;
  std::string output;
};

int run_moment(const MomentOpts& o) {
  gconc::Variable var = parse_variable(o.variable);
  int k = o.k < 0 ? o.n + 2 - o.beta : o.k;
  bool hs = k == o.n + 2 - o.beta;
  if (var == gconc::Variable::D && !hs)
    throw gconc::domain_error(
        "exact D moments are available for k = n + 2 - beta only; "
        "use --variable G for induced ensembles");
  Sink sink(o.output);
  sink.out() << "# gconc moment n=" << o.n << " k=" << k
             << " beta=" << o.beta << " variable=" << o.variable
             << (o.stirling ? " stirling=1" : "") << "\n";
  sink.out() << (o.stirling
                     ? "order,moment,log_moment,stirling_log_moment\n"
                     : "order,moment,log_moment\n");
  for (double m : o.orders) {
    gconc::MomentValue v =
        var == gconc::Variable::D
            ? gconc::det_moment_hs(o.n, o.beta, m)
            : gconc::g_moment_induced(o.n, k, o.beta, m);
    double lg = v.log_value.real();
    sink.out() << fmt17(m) << ',' << fmt17(std::exp(lg)) << ',' << fmt17(lg);
    if (o.stirling) {
      gconc::MomentValue s = gconc::det_moment_stirling(o.n, o.beta, m);
      sink.out() << ',' << fmt17(s.log_value.real());
    }
    sink.out() << "\n";
  }
  return 0;
}

// ---- density ----

struct DensityOpts {
  int n = 2;
  int beta = 2;
  std::string variable = "D";
  std::size_t count = 200;
  std::string method = "auto";
  std::vector<double> points;
  std::string output;
};

int run_density(const DensityOpts& o) {
  gconc::Variable var = parse_variable(o.variable);
  if (o.n > 12 && o.method != "closed")
    throw gconc::capability_error(
        "density inversion is wired for n <= 12; the edge-coeffs and "
        "sample commands still cover larger systems");
  bool closed = o.method == "closed" || (o.method == "auto" && o.n == 2);
  if (o.method == "closed" && o.n != 2)
    throw gconc::domain_error("--method closed exists only at n = 2");

  std::vector<double> grid = o.points;
  if (grid.empty())
    grid = var == gconc::Variable::D ? gconc::default_grid_d(o.n, o.count)
                                     : gconc::default_grid_g(o.n, o.count);
  gconc::DensityCurve curve =
      closed ? gconc::density_n2_closed(o.beta, var, std::move(grid))
      : var == gconc::Variable::D
          ? gconc::density_d(o.n, o.beta, std::move(grid))
          : gconc::density_g(o.n, o.beta, std::move(grid));

  Sink sink(o.output);
  sink.out() << "# gconc density n=" << o.n << " beta=" << o.beta
             << " variable=" << o.variable
             << " method=" << gconc::method_name(curve.method)
             << " count=" << curve.grid.size() << "\n";
  if (curve.method != gconc::Method::closed_form)
    sink.out() << "# t_right_window=" << fmt17(curve.t_right_window)
               << " t_left_window=" << fmt17(curve.t_left_window) << "\n";
  sink.out() << "abscissa,density,method,err_estimate\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    sink.out() << fmt17(curve.grid[i]) << ',' << fmt17(curve.values[i])
               << ',' << gconc::method_name(curve.point_method[i]) << ','
               << fmt17(curve.err_estimate[i]) << "\n";
  return 0;
}

// ---- edge-coeffs ----

struct EdgeOpts {
  int n = 3;
  int beta = 2;
  std::string edge = "right";
  std::string output;
};

int run_edge(const EdgeOpts& o) {
  Sink sink(o.output);
  if (o.edge == "right") {
    gconc::StirlingCorrection sc =
        gconc::stirling_correction_coeffs(o.n, o.beta);
    sink.out() << "# gconc edge-coeffs n=" << o.n << " beta=" << o.beta
               << " edge=right\n";
    sink.out() << "quantity,value\n";
    sink.out() << "amplitude," << fmt17(gconc::stirling_amplitude(o.n, o.beta))
               << "\n";
    sink.out() << "amplitude_g,"
               << fmt17(gconc::stirling_amplitude_g(o.n, o.beta)) << "\n";
    sink.out() << "exponent," << fmt17(gconc::stirling_exponent(o.n, o.beta))
               << "\n";
    sink.out() << "a," << fmt17(sc.a) << "\n";
    sink.out() << "b," << fmt17(sc.b) << "\n";
    sink.out() << "c," << fmt17(sc.c) << "\n";
    sink.out() << "d," << fmt17(sc.d) << "\n";
    return 0;
  }
  if (o.edge != "left")
    throw gconc::domain_error("--edge must be left or right");
  gconc::EdgeExpansion e = o.beta == 2
                               ? gconc::left_edge_coeffs_complex(o.n)
                               : gconc::left_edge_coeffs_real(o.n);
  sink.out() << "# gconc edge-coeffs n=" << o.n << " beta=" << o.beta
             << " edge=left truncated=" << (e.truncated ? 1 : 0) << "\n";
  sink.out() << "num,den,log_power,coeff\n";
  for (const auto& term : e.terms)
    sink.out() << term.num << ',' << term.den << ',' << term.log_power
               << ',' << fmt17(term.coeff) << "\n";
  return 0;
}

// ---- sample ----

struct SampleOpts {
  int n = 2;
  int k = -1;
  int beta = 2;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  int bins = 0;
  std::string variable = "G";
  std::string output;
};

int run_sample(const SampleOpts& o) {
  gconc::SystemSpec spec{o.n, o.k < 0 ? o.n + 2 - o.beta : o.k, o.beta};
  gconc::validate(spec);
  Sink sink(o.output);
  if (o.bins > 0) {
    gconc::Variable var = parse_variable(o.variable);
    gconc::HistogramData h = gconc::run_histogram_experiment(
        spec, o.count, o.bins, var, o.seed);
    sink.out() << "# gconc sample n=" << spec.n << " k=" << spec.k
               << " beta=" << spec.beta << " count=" << o.count
               << " seed=" << o.seed << " bins=" << o.bins
               << " variable=" << o.variable << "\n";
    sink.out() << "bin_left,bin_right,count,density\n";
    for (std::size_t j = 0; j < h.counts.size(); ++j)
      sink.out() << fmt17(h.edges[j]) << ',' << fmt17(h.edges[j + 1]) << ','
                 << h.counts[j] << ',' << fmt17(h.density[j]) << "\n";
    return 0;
  }
  std::vector<gconc::SchmidtSpectrum> batch =
      gconc::sample_batch(spec, o.count, o.seed);
  sink.out() << "# gconc sample n=" << spec.n << " k=" << spec.k
             << " beta=" << spec.beta << " count=" << o.count
             << " seed=" << o.seed << "\n";
  for (int i = 1; i <= spec.n; ++i) sink.out() << "lambda_" << i << ',';
  sink.out() << "det_log,g\n";
  for (const auto& s : batch) {
    for (double v : s.values) sink.out() << fmt17(v) << ',';
    sink.out() << fmt17(s.det_log) << ',' << fmt17(s.g) << "\n";
  }
  return 0;
}

// ---- validate ----

struct ValidateOpts {
  std::uint64_t seed = 0;
  std::string suite = "quick";
  std::size_t samples = 20000;
  std::string output;
};

int run_validate(const ValidateOpts& o) {
  if (o.suite != "quick")
    throw gconc::domain_error("the only wired suite is 'quick'");
  Sink sink(o.output);
  sink.out() << "# gconc validate seed=" << o.seed << " suite=" << o.suite
             << " samples=" << o.samples << "\n";
  sink.out() << "check,system,statistic,value,threshold,status\n";
  bool all_ok = true;
  auto row = [&](const std::string& check, const std::string& system,
                 const std::string& stat, double value, double threshold,
                 bool ok) {
    all_ok = all_ok && ok;
    sink.out() << check << ',' << system << ',' << stat << ','
               << fmt17(value) << ',' << fmt17(threshold) << ','
               << (ok ? "ok" : "FAIL") << "\n";
  };

  struct Case {
    int n, k, beta;
  };
  for (const Case& c : {Case{2, 2, 2}, Case{3, 4, 1}, Case{2, 4, 2}}) {
    gconc::SystemSpec spec{c.n, c.k, c.beta};
    std::ostringstream label;
    label << "n=" << c.n << " k=" << c.k << " beta=" << c.beta;
    auto rows = gconc::moment_check(spec, o.samples, gconc::Variable::G,
                                    {1.0, 2.0}, o.seed);
    for (const auto& r : rows) {
      std::ostringstream stat;
      stat << "|z| at m=" << r.order;
      row("moment_z", label.str(), stat.str(), std::abs(r.z_score), 5.0,
          std::abs(r.z_score) < 5.0);
    }
  }

  gconc::SystemSpec hs22{2, 2, 2};
  gconc::HistogramData h = gconc::run_histogram_experiment(
      hs22, o.samples, 40, gconc::Variable::G, o.seed + 1);
  gconc::DensityCurve curve = gconc::density_n2_closed(
      2, gconc::Variable::G, gconc::default_grid_g(2, 2001));
  gconc::FitReport fit = gconc::compare_density(h, curve);
  row("histogram_ks", "n=2 k=2 beta=2", "KS", fit.ks_distance, 0.02,
      fit.ks_distance < 0.02);
  double red = fit.chi_square / std::max(1, fit.dof);
  row("histogram_chi2", "n=2 k=2 beta=2", "chi2/dof", red, 1.6,
      red > 0.4 && red < 1.6);

  return all_ok ? 0 : 4;
}

// ---- limit ----

struct LimitOpts {
  double q = -1.0;
  bool asymptote = false;
  std::string output;
};

int run_limit(const LimitOpts& o) {
  Sink sink(o.output);
  if (o.asymptote) {
    sink.out() << "# gconc limit asymptote=1\n";
    sink.out() << "asymptote\n" << fmt17(std::exp(-1.0)) << "\n";
    return 0;
  }
  if (o.q > 0.0) {
    sink.out() << "# gconc limit q=" << fmt17(o.q) << "\n";
    sink.out() << "q,x_q\n";
    double xq = o.q == 1.0 ? std::exp(-1.0) : gconc::concentration_point(o.q);
    sink.out() << fmt17(o.q) << ',' << fmt17(xq) << "\n";
    return 0;
  }
  sink.out() << "# gconc limit\n";
  sink.out() << "n,beta,mean_g,var_g,limit\n";
  for (int n = 2; n <= 12; ++n)
    for (int beta : {2, 1}) {
      double m1 = std::exp(
          gconc::g_moment_hs(n, beta, 1.0).log_value.real());
      double m2 = std::exp(
          gconc::g_moment_hs(n, beta, 2.0).log_value.real());
      sink.out() << n << ',' << beta << ',' << fmt17(m1) << ','
                 << fmt17(m2 - m1 * m1) << ',' << fmt17(std::exp(-1.0))
                 << "\n";
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gconc: probability law of the determinant and G-concurrence of "
      "random bipartite pure states"};
  app.require_subcommand(1);

  MomentOpts mo;
  CLI::App* moment = app.add_subcommand("moment", "exact moments of D or G");
  moment->add_option("--n", mo.n, "Schmidt rank N")->required();
  moment->add_option("--k", mo.k, "environment dimension K (default HS)");
  moment->add_option("--beta", mo.beta, "1 real, 2 complex");
  moment->add_option("--variable", mo.variable, "D or G");
  moment->add_option("--orders", mo.orders, "comma separated orders")
      ->required()
      ->delimiter(',');
  moment->add_flag("--stirling", mo.stirling,
                   "append the Stirling-form log moment");
  moment->add_option("--output", mo.output, "write CSV here");

  DensityOpts do_;
  CLI::App* density = app.add_subcommand("density", "density curve of D or G");
  density->add_option("--n", do_.n, "Schmidt rank N")->required();
  density->add_option("--beta", do_.beta, "1 real, 2 complex");
  density->add_option("--variable", do_.variable, "D or G");
  density->add_option("--count", do_.count, "default grid size");
  density->add_option("--method", do_.method, "auto, closed or stitched")
      ->check(CLI::IsMember({"auto", "closed", "stitched"}));
  density->add_option("--points", do_.points,
                      "explicit comma separated abscissas")
      ->delimiter(',');
  density->add_option("--output", do_.output, "write CSV here");

  EdgeOpts eo;
  CLI::App* edge = app.add_subcommand("edge-coeffs",
                                      "edge expansion coefficients");
  edge->add_option("--n", eo.n, "Schmidt rank N")->required();
  edge->add_option("--beta", eo.beta, "1 real, 2 complex");
  edge->add_option("--edge", eo.edge, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  edge->add_option("--output", eo.output, "write CSV here");

  SampleOpts so;
  CLI::App* sample = app.add_subcommand("sample",
                                        "Monte Carlo Schmidt spectra");
  sample->add_option("--n", so.n, "Schmidt rank N")->required();
  sample->add_option("--k", so.k, "environment dimension K (default HS)");
  sample->add_option("--beta", so.beta, "1 real, 2 complex");
  sample->add_option("--count", so.count, "number of samples");
  sample->add_option("--seed", so.seed, "stream seed");
  sample->add_option("--bins", so.bins,
                     "emit a histogram with this many bins instead");
  sample->add_option("--variable", so.variable,
                     "histogram variable, D or G");
  sample->add_option("--output", so.output, "write CSV here");

  ValidateOpts vo;
  CLI::App* validate = app.add_subcommand("validate",
                                          "quick Monte Carlo self check");
  validate->add_option("--seed", vo.seed, "stream seed")->required();
  validate->add_option("--suite", vo.suite, "suite name (quick)");
  validate->add_option("--samples", vo.samples, "samples per check");
  validate->add_option("--output", vo.output, "write CSV here");

  LimitOpts lo;
  CLI::App* limit = app.add_subcommand("limit", "large-N concentration");
  limit->add_option("--q", lo.q, "Renyi parameter for X_q");
  limit->add_flag("--asymptote", lo.asymptote, "print 1/e only");
  limit->add_option("--output", lo.output, "write CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (moment->parsed()) return run_moment(mo);
    if (density->parsed()) return run_density(do_);
    if (edge->parsed()) return run_edge(eo);
    if (sample->parsed()) return run_sample(so);
    if (validate->parsed()) return run_validate(vo);
    if (limit->parsed()) return run_limit(lo);
  } catch (const gconc::accuracy_error& e) {
    std::cerr << "accuracy: " << e.what()
              << " (achieved " << fmt17(e.achieved) << ")\n";
    return 4;
  } catch (const gconc::partial_result_error& e) {
    std::cerr << "partial result: " << e.what() << " (delivered "
              << e.delivered << ")\n";
    return 4;
  } catch (const gconc::domain_error& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return 3;
  } catch (const gconc::capability_error& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return 3;
  } catch (const gconc::contract_error& e) {
    std::cerr << "contract: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
