#ifndef SIGBAND_CATALOG_HPP
#define SIGBAND_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sigband/specfun.hpp"

// The distribution universe: parameter validation, moments, density/mass and
// CDF for every family the coverage toolkit quantifies over.

namespace sigband {

/// Thrown for operations a family does not support (e.g. the compound
/// Poisson family has no closed CDF; only the Monte Carlo path applies).
struct unsupported_operation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Moments {
  double mean;
  double variance;
};

namespace dist {

struct Gamma {
  double alpha, beta;  // shape, scale
};
struct Uniform {
  double a, b;
};
struct Beta {
  double alpha, beta;
};
struct Laplace {
  double mu, b;
};
struct Gumbel {
  double mu, beta;
};
struct Logistic {
  double mu, s;
};
struct Pareto {
  double xm, alpha;  // alpha > 2 for finite variance
};
struct Weibull {
  double lambda, k;
};
struct LogNormal {
  double mu, sigma;
};
struct StudentT {
  double nu;  // nu > 2
};
struct InvGaussian {
  double mu, lambda;
};
struct Geometric {
  double p;  // support k = 0, 1, 2, ...
};
struct NegBinomial {
  int n;  // successes; X counts failures before the n-th success
  double p;
};
struct Poisson {
  double lambda;
};
struct PerturbedPoisson {
  double eps;  // X = eps*B + X_3, rate fixed at 3
};
struct CompoundPoissonUniform {
  int n;  // jumps uniform on [1-1/n, 1+1/n], rate 3
};

}  // namespace dist

using DistSpec =
    std::variant<dist::Gamma, dist::Uniform, dist::Beta, dist::Laplace,
                 dist::Gumbel, dist::Logistic, dist::Pareto, dist::Weibull,
                 dist::LogNormal, dist::StudentT, dist::InvGaussian,
                 dist::Geometric, dist::NegBinomial, dist::Poisson,
                 dist::PerturbedPoisson, dist::CompoundPoissonUniform>;

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace detail

/// Validates parameters; every DistSpec in circulation has passed this.
inline void validate(const DistSpec& d) {
  using namespace dist;
  using detail::require;
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Gamma>) {
          require(v.alpha > 0, "gamma: alpha must be positive");
          require(v.beta > 0, "gamma: beta must be positive");
        } else if constexpr (std::is_same_v<T, Uniform>) {
          require(v.a < v.b, "uniform: a must be less than b");
        } else if constexpr (std::is_same_v<T, Beta>) {
          require(v.alpha > 0, "beta: alpha must be positive");
          require(v.beta > 0, "beta: beta must be positive");
        } else if constexpr (std::is_same_v<T, Laplace>) {
          require(v.b > 0, "laplace: b must be positive");
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          require(v.beta > 0, "gumbel: beta must be positive");
        } else if constexpr (std::is_same_v<T, Logistic>) {
          require(v.s > 0, "logistic: s must be positive");
        } else if constexpr (std::is_same_v<T, Pareto>) {
          require(v.xm > 0, "pareto: xm must be positive");
          require(v.alpha > 2, "pareto: alpha must exceed 2");
        } else if constexpr (std::is_same_v<T, Weibull>) {
          require(v.lambda > 0, "weibull: lambda must be positive");
          require(v.k > 0, "weibull: k must be positive");
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          require(v.sigma > 0, "lognormal: sigma must be positive");
          require(std::isfinite(v.mu), "lognormal: mu must be finite");
        } else if constexpr (std::is_same_v<T, StudentT>) {
          require(v.nu > 2, "studentt: nu must exceed 2");
        } else if constexpr (std::is_same_v<T, InvGaussian>) {
          require(v.mu > 0, "invgaussian: mu must be positive");
          require(v.lambda > 0, "invgaussian: lambda must be positive");
        } else if constexpr (std::is_same_v<T, Geometric>) {
          require(v.p > 0 && v.p <= 1, "geometric: p must lie in (0,1]");
        } else if constexpr (std::is_same_v<T, NegBinomial>) {
          require(v.n >= 1, "negbinomial: n must be at least 1");
          require(v.p > 0 && v.p < 1, "negbinomial: p must lie in (0,1)");
        } else if constexpr (std::is_same_v<T, Poisson>) {
          require(v.lambda > 0, "poisson: lambda must be positive");
        } else if constexpr (std::is_same_v<T, PerturbedPoisson>) {
          require(v.eps > 0, "perturbedpoisson: eps must be positive");
        } else if constexpr (std::is_same_v<T, CompoundPoissonUniform>) {
          require(v.n >= 1, "compoundpoisson: n must be at least 1");
        }
      },
      d);
}

inline bool is_lattice(const DistSpec& d) {
  using namespace dist;
  return std::holds_alternative<Geometric>(d) ||
         std::holds_alternative<NegBinomial>(d) ||
         std::holds_alternative<Poisson>(d);
}

inline std::string family_name(const DistSpec& d) {
  using namespace dist;
  static const char* names[] = {
      "gamma",     "uniform",     "beta",        "laplace",
      "gumbel",    "logistic",    "pareto",      "weibull",
      "lognormal", "studentt",    "invgaussian", "geometric",
      "negbinomial", "poisson",   "perturbedpoisson", "compoundpoisson"};
  return names[d.index()];
}

inline std::map<std::string, double> params(const DistSpec& d) {
  using namespace dist;
  std::map<std::string, double> m;
  std::visit(
      [&m](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Gamma>) {
          m = {{"alpha", v.alpha}, {"beta", v.beta}};
        } else if constexpr (std::is_same_v<T, Uniform>) {
          m = {{"a", v.a}, {"b", v.b}};
        } else if constexpr (std::is_same_v<T, Beta>) {
          m = {{"alpha", v.alpha}, {"beta", v.beta}};
        } else if constexpr (std::is_same_v<T, Laplace>) {
          m = {{"mu", v.mu}, {"b", v.b}};
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          m = {{"mu", v.mu}, {"beta", v.beta}};
        } else if constexpr (std::is_same_v<T, Logistic>) {
          m = {{"mu", v.mu}, {"s", v.s}};
        } else if constexpr (std::is_same_v<T, Pareto>) {
          m = {{"xm", v.xm}, {"alpha", v.alpha}};
        } else if constexpr (std::is_same_v<T, Weibull>) {
          m = {{"lambda", v.lambda}, {"k", v.k}};
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          m = {{"mu", v.mu}, {"sigma", v.sigma}};
        } else if constexpr (std::is_same_v<T, StudentT>) {
          m = {{"nu", v.nu}};
        } else if constexpr (std::is_same_v<T, InvGaussian>) {
          m = {{"mu", v.mu}, {"lambda", v.lambda}};
        } else if constexpr (std::is_same_v<T, Geometric>) {
          m = {{"p", v.p}};
        } else if constexpr (std::is_same_v<T, NegBinomial>) {
          m = {{"n", double(v.n)}, {"p", v.p}};
        } else if constexpr (std::is_same_v<T, Poisson>) {
          m = {{"lambda", v.lambda}};
        } else if constexpr (std::is_same_v<T, PerturbedPoisson>) {
          m = {{"eps", v.eps}};
        } else if constexpr (std::is_same_v<T, CompoundPoissonUniform>) {
          m = {{"n", double(v.n)}};
        }
      },
      d);
  return m;
}

/// Closed-form mean and variance.
inline Moments moments(const DistSpec& d) {
  using namespace dist;
  return std::visit(
      [](const auto& v) -> Moments {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Gamma>) {
          return {v.alpha * v.beta, v.alpha * v.beta * v.beta};
        } else if constexpr (std::is_same_v<T, Uniform>) {
          double w = v.b - v.a;
          return {0.5 * (v.a + v.b), w * w / 12.0};
        } else if constexpr (std::is_same_v<T, Beta>) {
          double s = v.alpha + v.beta;
          return {v.alpha / s, v.alpha * v.beta / (s * s * (s + 1.0))};
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return {v.mu, 2.0 * v.b * v.b};
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          return {v.mu + v.beta * kEulerGamma,
                  kPi * kPi * v.beta * v.beta / 6.0};
        } else if constexpr (std::is_same_v<T, Logistic>) {
          return {v.mu, kPi * kPi * v.s * v.s / 3.0};
        } else if constexpr (std::is_same_v<T, Pareto>) {
          double am1 = v.alpha - 1.0;
          return {v.alpha * v.xm / am1,
                  v.alpha * v.xm * v.xm / (am1 * am1 * (v.alpha - 2.0))};
        } else if constexpr (std::is_same_v<T, Weibull>) {
          double g1 = std::exp(ln_gamma(1.0 + 1.0 / v.k));
          double g2 = std::exp(ln_gamma(1.0 + 2.0 / v.k));
          return {v.lambda * g1, v.lambda * v.lambda * (g2 - g1 * g1)};
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          double s2 = v.sigma * v.sigma;
          double m = std::exp(v.mu + 0.5 * s2);
          return {m, std::expm1(s2) * m * m};
        } else if constexpr (std::is_same_v<T, StudentT>) {
          return {0.0, v.nu / (v.nu - 2.0)};
        } else if constexpr (std::is_same_v<T, InvGaussian>) {
          return {v.mu, v.mu * v.mu * v.mu / v.lambda};
        } else if constexpr (std::is_same_v<T, Geometric>) {
          return {1.0 / v.p - 1.0, (1.0 - v.p) / (v.p * v.p)};
        } else if constexpr (std::is_same_v<T, NegBinomial>) {
          double q = 1.0 - v.p;
          return {v.n * q / v.p, v.n * q / (v.p * v.p)};
        } else if constexpr (std::is_same_v<T, Poisson>) {
          return {v.lambda, v.lambda};
        } else if constexpr (std::is_same_v<T, PerturbedPoisson>) {
          return {3.0, 3.0 + v.eps * v.eps};
        } else if constexpr (std::is_same_v<T, CompoundPoissonUniform>) {
          // rate * E[U] and rate * E[U^2], U uniform on [1-1/n, 1+1/n]
          double inv2 = 1.0 / (double(v.n) * v.n);
          return {3.0, 3.0 + inv2};
        }
      },
      d);
}

namespace detail {

inline double poisson_log_pmf(double lambda, long long k) {
  return k * std::log(lambda) - lambda - ln_gamma(double(k) + 1.0);
}

// log C(k+n-1, k) + n log p + k log(1-p)
inline double negbinomial_log_pmf(int n, double p, long long k) {
  return ln_gamma(double(k) + n) - ln_gamma(double(k) + 1.0) - ln_gamma(double(n)) +
         n * std::log(p) + k * std::log1p(-p);
}

// Student's t CDF through the regularized incomplete beta function.
inline double student_t_cdf_beta(double nu, double x) {
  if (x == 0.0) return 0.5;
  double w = nu / (nu + x * x);
  double tail = 0.5 * reg_inc_beta(0.5 * nu, 0.5, w);
  return x > 0.0 ? 1.0 - tail : tail;
}

// Student's t CDF through the hypergeometric representation.
inline double student_t_cdf_2f1(double nu, double x) {
  double lc = ln_gamma(0.5 * (nu + 1.0)) - ln_gamma(0.5 * nu) -
              0.5 * std::log(nu * kPi);
  return 0.5 + x * std::exp(lc) *
                   gauss_2f1(0.5, 0.5 * (nu + 1.0), 1.5, -x * x / nu);
}

inline double inv_gaussian_cdf(double mu, double lambda, double x) {
  if (x <= 0.0) return 0.0;
  double s = std::sqrt(lambda / x);
  double a = s * (x / mu + 1.0);  // positive
  // exp(2 lambda/mu) Phi(-a) = 0.5 exp(-lambda (x-mu)^2 / (2 mu^2 x)) erfcx(a/sqrt(2))
  double expo = -lambda * (x - mu) * (x - mu) / (2.0 * mu * mu * x);
  double term = 0.5 * std::exp(expo) * erfcx(a / std::sqrt(2.0));
  return normal_cdf(s * (x / mu - 1.0)) + term;
}

// Poisson(3) tail truncation point: mass beyond is < 1e-15.
inline long long perturbed_poisson_kmax() { return 40; }

}  // namespace detail

/// CDF P{X <= x}; lattice families return P{X <= floor(x)}.
/// Throws unsupported_operation for the compound Poisson family.
inline double cdf(const DistSpec& d, double x) {
  using namespace dist;
  return std::visit(
      [x](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Gamma>) {
          if (x <= 0.0) return 0.0;
          return reg_inc_gamma_lower(v.alpha, x / v.beta);
        } else if constexpr (std::is_same_v<T, Uniform>) {
          if (x <= v.a) return 0.0;
          if (x >= v.b) return 1.0;
          return (x - v.a) / (v.b - v.a);
        } else if constexpr (std::is_same_v<T, Beta>) {
          if (x <= 0.0) return 0.0;
          if (x >= 1.0) return 1.0;
          return reg_inc_beta(v.alpha, v.beta, x);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          double z = (x - v.mu) / v.b;
          return z <= 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          return std::exp(-std::exp(-(x - v.mu) / v.beta));
        } else if constexpr (std::is_same_v<T, Logistic>) {
          return 1.0 / (1.0 + std::exp(-(x - v.mu) / v.s));
        } else if constexpr (std::is_same_v<T, Pareto>) {
          if (x <= v.xm) return 0.0;
          return -std::expm1(v.alpha * std::log(v.xm / x));
        } else if constexpr (std::is_same_v<T, Weibull>) {
          if (x <= 0.0) return 0.0;
          return -std::expm1(-std::pow(x / v.lambda, v.k));
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          if (x <= 0.0) return 0.0;
          return normal_cdf((std::log(x) - v.mu) / v.sigma);
        } else if constexpr (std::is_same_v<T, StudentT>) {
          return detail::student_t_cdf_beta(v.nu, x);
        } else if constexpr (std::is_same_v<T, InvGaussian>) {
          return detail::inv_gaussian_cdf(v.mu, v.lambda, x);
        } else if constexpr (std::is_same_v<T, Geometric>) {
          if (x < 0.0) return 0.0;
          long long k = (long long)std::floor(x);
          return -std::expm1((k + 1.0) * std::log1p(-v.p));
        } else if constexpr (std::is_same_v<T, NegBinomial>) {
          if (x < 0.0) return 0.0;
          long long k = (long long)std::floor(x);
          double sum = 0.0;
          for (long long j = 0; j <= k; ++j)
            sum += std::exp(detail::negbinomial_log_pmf(v.n, v.p, j));
          return std::min(sum, 1.0);
        } else if constexpr (std::is_same_v<T, Poisson>) {
          if (x < 0.0) return 0.0;
          long long k = (long long)std::floor(x);
          double sum = 0.0;
          for (long long j = 0; j <= k; ++j)
            sum += std::exp(detail::poisson_log_pmf(v.lambda, j));
          return std::min(sum, 1.0);
        } else if constexpr (std::is_same_v<T, PerturbedPoisson>) {
          double sum = 0.0;
          for (long long k = 0; k <= detail::perturbed_poisson_kmax(); ++k)
            sum += std::exp(detail::poisson_log_pmf(3.0, k)) *
                   normal_cdf((x - k) / v.eps);
          return std::min(sum, 1.0);
        } else if constexpr (std::is_same_v<T, CompoundPoissonUniform>) {
          throw unsupported_operation(
              "compoundpoisson: no closed CDF; use the Monte Carlo oracle");
        }
      },
      d);
}

/// Density at x for continuous families (0 outside support); mass at
/// round(x) for lattice families. Computed in log space internally.
inline double pdf_or_pmf(const DistSpec& d, double x) {
  using namespace dist;
  return std::visit(
      [x](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Gamma>) {
          if (x <= 0.0) return 0.0;
          double z = x / v.beta;
          return std::exp((v.alpha - 1.0) * std::log(z) - z - ln_gamma(v.alpha)) /
                 v.beta;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return (x >= v.a && x <= v.b) ? 1.0 / (v.b - v.a) : 0.0;
        } else if constexpr (std::is_same_v<T, Beta>) {
          if (x <= 0.0 || x >= 1.0) return 0.0;
          double lb = ln_gamma(v.alpha) + ln_gamma(v.beta) -
                      ln_gamma(v.alpha + v.beta);
          return std::exp((v.alpha - 1.0) * std::log(x) +
                          (v.beta - 1.0) * std::log1p(-x) - lb);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return 0.5 / v.b * std::exp(-std::fabs(x - v.mu) / v.b);
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          double z = (x - v.mu) / v.beta;
          return std::exp(-z - std::exp(-z)) / v.beta;
        } else if constexpr (std::is_same_v<T, Logistic>) {
          double z = std::fabs(x - v.mu) / v.s;
          double e = std::exp(-z);
          return e / (v.s * (1.0 + e) * (1.0 + e));
        } else if constexpr (std::is_same_v<T, Pareto>) {
          if (x < v.xm) return 0.0;
          return v.alpha * std::pow(v.xm, v.alpha) / std::pow(x, v.alpha + 1.0);
        } else if constexpr (std::is_same_v<T, Weibull>) {
          if (x <= 0.0) return 0.0;
          double z = x / v.lambda;
          return std::exp(std::log(v.k / v.lambda) +
                          (v.k - 1.0) * std::log(z) - std::pow(z, v.k));
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          if (x <= 0.0) return 0.0;
          double z = (std::log(x) - v.mu) / v.sigma;
          return std::exp(-0.5 * z * z) /
                 (std::sqrt(2.0 * kPi) * v.sigma * x);
        } else if constexpr (std::is_same_v<T, StudentT>) {
          double lc = ln_gamma(0.5 * (v.nu + 1.0)) - ln_gamma(0.5 * v.nu) -
                      0.5 * std::log(v.nu * kPi);
          return std::exp(lc - 0.5 * (v.nu + 1.0) * std::log1p(x * x / v.nu));
        } else if constexpr (std::is_same_v<T, InvGaussian>) {
          if (x <= 0.0) return 0.0;
          return std::exp(0.5 * std::log(v.lambda / (2.0 * kPi * x * x * x)) -
                          v.lambda * (x - v.mu) * (x - v.mu) /
                              (2.0 * v.mu * v.mu * x));
        } else if constexpr (std::is_same_v<T, Geometric>) {
          long long k = (long long)std::llround(x);
          if (k < 0) return 0.0;
          return std::exp(std::log(v.p) + k * std::log1p(-v.p));
        } else if constexpr (std::is_same_v<T, NegBinomial>) {
          long long k = (long long)std::llround(x);
          if (k < 0) return 0.0;
          return std::exp(detail::negbinomial_log_pmf(v.n, v.p, k));
        } else if constexpr (std::is_same_v<T, Poisson>) {
          long long k = (long long)std::llround(x);
          if (k < 0) return 0.0;
          return std::exp(detail::poisson_log_pmf(v.lambda, k));
        } else if constexpr (std::is_same_v<T, PerturbedPoisson>) {
          double sum = 0.0;
          for (long long k = 0; k <= detail::perturbed_poisson_kmax(); ++k)
            sum += std::exp(detail::poisson_log_pmf(3.0, k)) *
                   normal_pdf((x - k) / v.eps) / v.eps;
          return sum;
        } else if constexpr (std::is_same_v<T, CompoundPoissonUniform>) {
          throw unsupported_operation(
              "compoundpoisson: no closed density; use the Monte Carlo oracle");
        }
      },
      d);
}

/// Support of a continuous family, for clipping integration intervals.
inline std::pair<double, double> support(const DistSpec& d) {
  using namespace dist;
  return std::visit(
      [](const auto& v) -> std::pair<double, double> {
        using T = std::decay_t<decltype(v)>;
        constexpr double inf = std::numeric_limits<double>::infinity();
        if constexpr (std::is_same_v<T, Uniform>) {
          return {v.a, v.b};
        } else if constexpr (std::is_same_v<T, Beta>) {
          return {0.0, 1.0};
        } else if constexpr (std::is_same_v<T, Pareto>) {
          return {v.xm, inf};
        } else if constexpr (std::is_same_v<T, Gamma> ||
                             std::is_same_v<T, Weibull> ||
                             std::is_same_v<T, LogNormal> ||
                             std::is_same_v<T, InvGaussian>) {
          return {0.0, inf};
        } else if constexpr (std::is_same_v<T, Geometric> ||
                             std::is_same_v<T, NegBinomial> ||
                             std::is_same_v<T, Poisson>) {
          return {0.0, inf};
        } else {
          return {-inf, inf};
        }
      },
      d);
}

// --- spec-string parsing: family:key=value,key=value -----------------------

namespace detail {

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

inline double get_param(const std::map<std::string, double>& kv,
                        const std::string& family, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw std::invalid_argument(family + ": missing parameter '" + key + "'");
  return it->second;
}

inline int get_int_param(const std::map<std::string, double>& kv,
                         const std::string& family, const std::string& key) {
  double v = get_param(kv, family, key);
  if (v != std::floor(v) || std::fabs(v) > 2e9)
    throw std::invalid_argument(family + ": parameter '" + key +
                                "' must be an integer");
  return int(v);
}

}  // namespace detail

/// Builds a DistSpec from a family name and key/value parameters.
inline DistSpec make_dist(const std::string& family_raw,
                          const std::map<std::string, double>& kv) {
  using namespace dist;
  std::string family = detail::lower(family_raw);
  auto g = [&](const std::string& k) {
    return detail::get_param(kv, family, k);
  };
  DistSpec d;
  if (family == "gamma") {
    d = Gamma{g("alpha"), g("beta")};
  } else if (family == "uniform") {
    d = Uniform{g("a"), g("b")};
  } else if (family == "beta") {
    d = Beta{g("alpha"), g("beta")};
  } else if (family == "laplace") {
    d = Laplace{g("mu"), g("b")};
  } else if (family == "gumbel") {
    d = Gumbel{g("mu"), g("beta")};
  } else if (family == "logistic") {
    d = Logistic{g("mu"), g("s")};
  } else if (family == "pareto") {
    d = Pareto{g("xm"), g("alpha")};
  } else if (family == "weibull") {
    d = Weibull{g("lambda"), g("k")};
  } else if (family == "lognormal") {
    d = LogNormal{g("mu"), g("sigma")};
  } else if (family == "studentt") {
    d = StudentT{g("nu")};
  } else if (family == "invgaussian") {
    d = InvGaussian{g("mu"), g("lambda")};
  } else if (family == "geometric") {
    d = Geometric{g("p")};
  } else if (family == "negbinomial") {
    d = NegBinomial{detail::get_int_param(kv, family, "n"), g("p")};
  } else if (family == "poisson") {
    d = Poisson{g("lambda")};
  } else if (family == "perturbedpoisson") {
    d = PerturbedPoisson{g("eps")};
  } else if (family == "compoundpoisson") {
    d = CompoundPoissonUniform{detail::get_int_param(kv, family, "n")};
  } else {
    throw std::invalid_argument("unknown family '" + family_raw + "'");
  }
  validate(d);
  // Reject unknown keys.
  auto known = params(d);
  for (const auto& [k, v] : kv)
    if (!known.count(k))
      throw std::invalid_argument(family + ": unknown parameter '" + k + "'");
  return d;
}

/// Parses `family:key=value,key=value`, e.g. `lognormal:mu=0,sigma=1.5`.
inline DistSpec parse_dist(const std::string& spec) {
  auto colon = spec.find(':');
  std::string family = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("bad parameter '" + item +
                                    "' (expected key=value)");
      std::string key = detail::lower(item.substr(0, eq));
      std::string val = item.substr(eq + 1);
      try {
        size_t pos = 0;
        kv[key] = std::stod(val, &pos);
        if (pos != val.size()) throw std::invalid_argument(val);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value '" + val + "' for '" +
                                    key + "'");
      }
    }
  }
  return make_dist(family, kv);
}

}  // namespace sigband

#endif  // SIGBAND_CATALOG_HPP
