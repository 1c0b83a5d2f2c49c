// sigband: one-standard-deviation coverage toolkit CLI.

#include <cinttypes>
#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigband/catalog.hpp"
#include "sigband/oracle.hpp"
#include "sigband/report.hpp"
#include "sigband/sigma_band.hpp"
#include "sigband/sweep.hpp"

namespace {

using namespace sigband;

double threshold_from_flag(const std::string& s) {
  return s == "paper" ? kThresholdPaper : kThresholdExact;
}

std::map<std::string, double> parse_fixed(const std::string& s) {
  std::map<std::string, double> kv;
  if (s.empty()) return kv;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--fixed expects key=value,key=value");
    kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return kv;
}

int run_check(const std::string& spec, const std::string& variant_s,
              double tol, double threshold) {
  DistSpec d = parse_dist(spec);
  Moments m = moments(d);
  std::printf("family   %s\n", family_name(d).c_str());
  std::printf("mean     %.10g\nvariance %.10g\n", m.mean, m.variance);
  if (std::holds_alternative<dist::CompoundPoissonUniform>(d)) {
    McEstimate mc = j_mc_compound_poisson(
        std::get<dist::CompoundPoissonUniform>(d).n, 1000000, 42);
    std::printf("coverage %.7f (monte-carlo, stderr %.2e)\n", mc.estimate,
                mc.stderr_);
    std::printf("%s threshold %.10f\n",
                mc.estimate > threshold ? "exceeds" : "below", threshold);
    return 0;
  }
  BandVariant variant = parse_variant(variant_s);
  if (!is_lattice(d) && variant != BandVariant::plain)
    throw std::invalid_argument("corrected variants apply to lattice families");
  Band b = band(d, is_lattice(d) ? variant : BandVariant::plain);
  std::printf("band     [%.10g, %.10g] (%s)\n", b.lo, b.hi,
              to_string(variant).c_str());
  double closed, oracle;
  if (is_lattice(d)) {
    closed = j_discrete(d, variant).value;
    oracle = sigband::detail::discrete_cdf_route(d, variant);
  } else {
    closed = j_closed(d).value;
    oracle = j_quadrature(d, std::max(1e-12, tol)).value;
  }
  std::printf("coverage %.7f (closed), %.7f (oracle), diff %.2e\n", closed,
              oracle, std::fabs(closed - oracle));
  std::printf("%s threshold %.10f\n",
              closed > threshold ? "exceeds" : "below", threshold);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-standard-deviation coverage verification toolkit"};
  app.require_subcommand(1);
  app.set_config("--config");
  app.footer("environment: SIGBAND_WORKERS caps Monte Carlo parallelism");

  double tol = 1e-9;
  uint64_t seed = 42;
  uint64_t samples = 1000000;
  std::string threshold_flag = "exact";
  app.add_option("--tol", tol, "verification tolerance")->capture_default_str();
  app.add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--samples", samples, "Monte Carlo sample count")
      ->capture_default_str();
  app.add_option("--threshold", threshold_flag, "threshold: exact|paper")
      ->check(CLI::IsMember({"exact", "paper"}))
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "coverage of one distribution");
  std::string spec, variant_s = "plain";
  check->add_option("spec", spec, "family:key=value,... e.g. laplace:mu=0,b=1")
      ->required();
  check->add_option("--variant", variant_s,
                    "plain|geometric-corrected|nb-corrected|poisson-corrected")
      ->capture_default_str();

  // verify-all
  auto* verify = app.add_subcommand("verify-all", "run the built-in suite");
  std::string out_path = "report.json";
  verify->add_option("--out", out_path, "report path")->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV/SVG");
  std::string family, param, fixed_s, csv_path, svg_path;
  double lo = 0, hi = 1;
  int npts = 400;
  sweep->add_option("family", family)->required();
  sweep->add_option("--param", param)->required();
  sweep->add_option("--lo", lo)->required();
  sweep->add_option("--hi", hi)->required();
  sweep->add_option("--n", npts, "grid size")->capture_default_str();
  sweep->add_option("--fixed", fixed_s, "other params, key=value,...");
  sweep->add_option("--variant", variant_s)->capture_default_str();
  sweep->add_option("--csv", csv_path);
  sweep->add_option("--svg", svg_path);

  // inf
  auto* inf = app.add_subcommand("inf", "infimum search");
  double inf_tol = 1e-4;
  inf->add_option("family", family)->required();
  inf->add_option("--param", param)->required();
  inf->add_option("--lo", lo)->required();
  inf->add_option("--hi", hi)->required();
  inf->add_option("--tol", inf_tol)->capture_default_str();
  inf->add_option("--fixed", fixed_s);
  inf->add_option("--variant", variant_s)->capture_default_str();

  // fig
  auto* fig = app.add_subcommand("fig", "figure dataset to CSV/SVG");
  int fig_id = 1;
  fig->add_option("id", fig_id, "figure id 1..9")->required();
  fig->add_option("--csv", csv_path);
  fig->add_option("--svg", svg_path);

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo coverage estimate");
  mc->add_option("spec", spec,
                 "compoundpoisson:n=..., poisson:..., geometric:..., "
                 "perturbedpoisson:...")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help etc.
    app.exit(e);
    return 2;
  }

  double threshold = threshold_from_flag(threshold_flag);
  try {
    if (*check) return run_check(spec, variant_s, tol, threshold);
    if (*verify) {
      Report rep = verify_all(tol, seed, samples);
      write_report(rep, out_path);
      for (const auto& r : rep.records)
        std::printf("[%s] %-28s %s coverage %.7f\n", r.pass ? "PASS" : "FAIL",
                    r.family.c_str(), r.variant.c_str(), r.coverage_closed);
      std::printf("%d/%zu records passed; report written to %s\n",
                  rep.passed(), rep.records.size(), out_path.c_str());
      return rep.all_pass() ? 0 : 1;
    }
    if (*sweep) {
      std::vector<double> grid(npts);
      for (int i = 0; i < npts; ++i)
        grid[i] = lo + (hi - lo) * double(i) / (npts - 1);
      SweepTable t = sweep_family(family, param, grid, parse_fixed(fixed_s),
                                  parse_variant(variant_s), threshold);
      if (!csv_path.empty()) write_csv(t, csv_path);
      if (!svg_path.empty()) write_svg(t, svg_path);
      if (csv_path.empty() && svg_path.empty())
        for (const auto& r : t.rows)
          std::printf("%.17g,%.17g,%.17g\n", r.param, r.coverage, r.excess);
      return 0;
    }
    if (*inf) {
      InfimumReport r = find_infimum(family, param, lo, hi, inf_tol,
                                     parse_fixed(fixed_s),
                                     parse_variant(variant_s));
      std::printf("inf %.7f at %s=%.7g attained=%s\n", r.inf_value,
                  param.c_str(), r.param_at_inf, r.attained ? "true" : "false");
      return 0;
    }
    if (*fig) {
      SweepTable t = figure_dataset(fig_id, threshold);
      if (!csv_path.empty()) write_csv(t, csv_path);
      if (!svg_path.empty()) write_svg(t, svg_path);
      std::printf("figure %d: %zu rows (%s over [%.6g, %.6g])\n", fig_id,
                  t.rows.size(), t.param_name.c_str(), t.rows.front().param,
                  t.rows.back().param);
      return 0;
    }
    if (*mc) {
      DistSpec d = parse_dist(spec);
      McEstimate e{};
      if (const auto* c = std::get_if<dist::CompoundPoissonUniform>(&d))
        e = j_mc_compound_poisson(c->n, samples, seed);
      else
        e = j_mc_generic(d, samples, seed);
      std::printf("estimate %.7f stderr %.3e samples %" PRIu64 " seed %" PRIu64
                  "\n",
                  e.estimate, e.stderr_, e.n_samples, e.seed);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
