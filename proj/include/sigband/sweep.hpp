#ifndef SIGBAND_SWEEP_HPP
#define SIGBAND_SWEEP_HPP

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigband/catalog.hpp"
#include "sigband/sigma_band.hpp"

// Parameter sweeps, monotonicity checks, infimum searches and the datasets
// behind the nine figures.

namespace sigband {

struct SweepRow {
  double param;
  double coverage;
  double excess;  // coverage - threshold
};

struct SweepTable {
  std::string family;
  std::string param_name;
  double threshold;
  std::vector<SweepRow> rows;
};

struct InfimumReport {
  double param_at_inf;
  double inf_value;
  bool attained;  // false when the minimizer sits at a searched-range boundary
};

enum class Direction { increasing, decreasing };

namespace detail {

/// Canonical defaults for parameters left unspecified in a sweep. The
/// coverage of every location-scale family is independent of these, so a
/// sweep over the shape parameter alone is well-posed.
inline std::map<std::string, double> default_params(const std::string& fam) {
  static const std::map<std::string, std::map<std::string, double>> defs = {
      {"gamma", {{"alpha", 1.0}, {"beta", 1.0}}},
      {"uniform", {{"a", 0.0}, {"b", 1.0}}},
      {"beta", {{"alpha", 2.0}, {"beta", 2.0}}},
      {"laplace", {{"mu", 0.0}, {"b", 1.0}}},
      {"gumbel", {{"mu", 0.0}, {"beta", 1.0}}},
      {"logistic", {{"mu", 0.0}, {"s", 1.0}}},
      {"pareto", {{"xm", 1.0}, {"alpha", 3.0}}},
      {"weibull", {{"lambda", 1.0}, {"k", 1.0}}},
      {"lognormal", {{"mu", 0.0}, {"sigma", 1.0}}},
      {"studentt", {{"nu", 3.0}}},
      {"invgaussian", {{"mu", 1.0}, {"lambda", 1.0}}},
      {"geometric", {{"p", 0.5}}},
      {"negbinomial", {{"n", 2.0}, {"p", 0.5}}},
      {"poisson", {{"lambda", 1.0}}},
      {"perturbedpoisson", {{"eps", 0.01}}}};
  auto it = defs.find(fam);
  return it == defs.end() ? std::map<std::string, double>{} : it->second;
}

/// Coverage as a function of one scanned parameter, other parameters fixed.
/// Special ids: family "geometric_J" means geometric with the open/closed
/// corrected band; for "invgaussian" the pseudo-parameter "y" scans
/// mu = y^2 at lambda = 1 (coverage depends on mu/lambda only).
inline std::function<double(double)> coverage_eval(
    const std::string& family, const std::string& param,
    const std::map<std::string, double>& fixed, BandVariant variant) {
  std::string fam = lower(family);
  BandVariant var = variant;
  if (fam == "geometric_j") {
    fam = "geometric";
    var = BandVariant::geometric_corrected;
  }
  if (fam == "invgaussian" && lower(param) == "y") {
    return [](double y) {
      return j_closed(DistSpec{dist::InvGaussian{y * y, 1.0}}).value;
    };
  }
  return [fam, param, fixed, var](double x) {
    auto kv = default_params(fam);
    for (const auto& [k, v] : fixed) kv[lower(k)] = v;
    kv[lower(param)] = x;
    DistSpec d = make_dist(fam, kv);
    if (is_lattice(d)) return j_discrete(d, var).value;
    return j_closed(d).value;
  };
}

}  // namespace detail

/// One SweepRow per grid point, rows in grid order.
inline SweepTable sweep_family(const std::string& family,
                               const std::string& param,
                               const std::vector<double>& grid,
                               const std::map<std::string, double>& fixed = {},
                               BandVariant variant = BandVariant::plain,
                               double threshold = kThresholdExact) {
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("sweep grid must be strictly increasing");
  auto eval = detail::coverage_eval(family, param, fixed, variant);
  SweepTable t{family, param, threshold, {}};
  t.rows.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    double c;
    try {
      c = eval(grid[i]);
    } catch (const std::exception& e) {
      throw std::invalid_argument("invalid grid point at index " +
                                  std::to_string(i) + " (" +
                                  std::to_string(grid[i]) + "): " + e.what());
    }
    t.rows.push_back({grid[i], c, c - threshold});
  }
  return t;
}

/// Indices i where rows[i] -> rows[i+1] violates the stated direction
/// beyond a 1e-12 pair tolerance. Empty list means monotone.
inline std::vector<size_t> check_monotone(const SweepTable& t, Direction dir) {
  if (t.rows.empty()) throw std::invalid_argument("check_monotone: empty table");
  std::vector<size_t> bad;
  for (size_t i = 0; i + 1 < t.rows.size(); ++i) {
    double d = t.rows[i + 1].coverage - t.rows[i].coverage;
    if (dir == Direction::increasing ? d < -1e-12 : d > 1e-12) bad.push_back(i);
  }
  return bad;
}

namespace detail {

inline InfimumReport golden_refine(const std::function<double(double)>& f,
                                   double a, double b, double tol) {
  constexpr double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, std::min({f(xm), f1, f2}), true};
}

}  // namespace detail

/// Grid-refinement infimum search: a coarse scan followed by golden-section
/// refinement for smooth families, or a pure dense-grid scan for the
/// piecewise-constant discrete curves (step 1e-4).
inline InfimumReport find_infimum(const std::string& family,
                                  const std::string& param, double lo,
                                  double hi, double tol,
                                  const std::map<std::string, double>& fixed = {},
                                  BandVariant variant = BandVariant::plain) {
  if (!(lo < hi)) throw std::invalid_argument("find_infimum: need lo < hi");
  if (!(tol > 0)) throw std::invalid_argument("find_infimum: tol must be positive");
  auto eval = detail::coverage_eval(family, param, fixed, variant);
  std::string fam = detail::lower(family);
  bool discrete = fam == "geometric" || fam == "geometric_j" ||
                  fam == "negbinomial" || fam == "poisson";
  InfimumReport best{lo, eval(lo), true};
  if (discrete) {
    double step = 1e-4;
    long long n = (long long)std::floor((hi - lo) / step);
    for (long long i = 1; i <= n; ++i) {
      double x = lo + i * step;
      double v = eval(x);
      if (v < best.inf_value) best = {x, v, true};
    }
    double vhi = eval(hi);
    if (vhi < best.inf_value) best = {hi, vhi, true};
  } else {
    // Coarse geometric/linear hybrid grid, then golden-section on the best
    // bracket.
    const int kCoarse = 129;
    bool log_grid = lo > 0 && hi / lo > 100.0;
    std::vector<double> xs(kCoarse);
    for (int i = 0; i < kCoarse; ++i) {
      double t = double(i) / (kCoarse - 1);
      xs[i] = log_grid ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
    }
    int imin = 0;
    std::vector<double> vs(kCoarse);
    for (int i = 0; i < kCoarse; ++i) {
      vs[i] = eval(xs[i]);
      if (vs[i] < vs[imin]) imin = i;
    }
    double a = xs[std::max(0, imin - 1)];
    double b = xs[std::min(kCoarse - 1, imin + 1)];
    best = detail::golden_refine(eval, a, b, tol);
    if (vs[imin] < best.inf_value) best = {xs[imin], vs[imin], true};
  }
  double edge = std::max(tol, (hi - lo) * 1e-6);
  if (best.param_at_inf - lo <= edge || hi - best.param_at_inf <= edge)
    best.attained = false;
  return best;
}

namespace detail {

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * double(i) / (n - 1);
  return v;
}

}  // namespace detail

/// The sweep tables behind Figures 1-9:
///   1  Beta J(2,beta) - threshold, beta in [1,20]
///   2  Weibull W_k - threshold, k in [1,10]
///   3  geometric J_G(p)
///   4  negative binomial I_NB(2,p) (plain band)
///   5-8 negative binomial J_NB(n,p), n = 2, 3, 10, 1000
///   9  Poisson J_P(lambda), lambda in (0,100]
inline SweepTable figure_dataset(int id, double threshold = kThresholdExact) {
  using detail::linspace;
  switch (id) {
    case 1:
      return sweep_family("beta", "beta", linspace(1.0, 20.0, 400),
                          {{"alpha", 2.0}}, BandVariant::plain, threshold);
    case 2:
      return sweep_family("weibull", "k", linspace(1.0, 10.0, 400),
                          {{"lambda", 1.0}}, BandVariant::plain, threshold);
    case 3:
      return sweep_family("geometric", "p", linspace(0.01, 0.9975, 400), {},
                          BandVariant::geometric_corrected, threshold);
    case 4:
      return sweep_family("negbinomial", "p", linspace(0.0025, 0.9975, 400),
                          {{"n", 2.0}}, BandVariant::plain, threshold);
    case 5:
    case 6:
    case 7:
    case 8: {
      double n = id == 5 ? 2.0 : id == 6 ? 3.0 : id == 7 ? 10.0 : 1000.0;
      return sweep_family("negbinomial", "p", linspace(0.0025, 0.9975, 400),
                          {{"n", n}}, BandVariant::nb_corrected, threshold);
    }
    case 9:
      // The lambda domain is half-open at 0; the dataset starts at 0.01.
      return sweep_family("poisson", "lambda", linspace(0.01, 100.0, 1000), {},
                          BandVariant::poisson_corrected, threshold);
    default:
      throw std::invalid_argument("figure id must lie in 1..9");
  }
}

}  // namespace sigband

#endif  // SIGBAND_SWEEP_HPP
