#ifndef SIGBAND_SIGMA_BAND_HPP
#define SIGBAND_SIGMA_BAND_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "sigband/catalog.hpp"
#include "sigband/specfun.hpp"

// Closed-form one-standard-deviation coverage for every catalog family,
// including the continuity-corrected discrete variants.

namespace sigband {

/// The four band variants in use:
///   plain               [mu-sigma, mu+sigma]           closed/closed (I)
///   geometric_corrected (mu-sigma, mu+sigma]           open/closed   (J_G)
///   nb_corrected        [floor(mu-sigma), mu+sigma]    floored/closed (J_NB)
///   poisson_corrected   [floor(..), ceil(mu+sigma)]    floored/ceiled (J_P)
enum class BandVariant { plain, geometric_corrected, nb_corrected, poisson_corrected };

inline std::string to_string(BandVariant v) {
  switch (v) {
    case BandVariant::plain: return "plain";
    case BandVariant::geometric_corrected: return "geometric-corrected";
    case BandVariant::nb_corrected: return "nb-corrected";
    case BandVariant::poisson_corrected: return "poisson-corrected";
  }
  return "?";
}

inline BandVariant parse_variant(const std::string& s) {
  if (s == "plain") return BandVariant::plain;
  if (s == "geometric-corrected") return BandVariant::geometric_corrected;
  if (s == "nb-corrected") return BandVariant::nb_corrected;
  if (s == "poisson-corrected") return BandVariant::poisson_corrected;
  throw std::invalid_argument("unknown band variant '" + s + "'");
}

enum class EndKind { closed, open, floored, ceiled };

struct Band {
  double lo, hi;
  EndKind lo_kind, hi_kind;
};

enum class Method { closed_form, quadrature, summation, monte_carlo };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::quadrature: return "quadrature";
    case Method::summation: return "summation";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "?";
}

struct CoverageResult {
  double value;
  Method method;
  double err_estimate;
};

/// Band endpoints mean -/+ sqrt(variance) with variant end treatments.
inline Band band(const DistSpec& d, BandVariant variant) {
  if (variant != BandVariant::plain && !is_lattice(d))
    throw std::invalid_argument(
        "corrected band variants apply only to lattice families");
  Moments m = moments(d);
  double sd = std::sqrt(m.variance);
  double lo = m.mean - sd, hi = m.mean + sd;
  if (!(lo < hi))
    throw std::invalid_argument("degenerate band: variance is zero");
  switch (variant) {
    case BandVariant::plain:
      return {lo, hi, EndKind::closed, EndKind::closed};
    case BandVariant::geometric_corrected:
      return {lo, hi, EndKind::open, EndKind::closed};
    case BandVariant::nb_corrected:
      return {std::floor(lo), hi, EndKind::floored, EndKind::closed};
    case BandVariant::poisson_corrected:
      return {std::floor(lo), std::ceil(hi), EndKind::floored, EndKind::ceiled};
  }
  throw std::logic_error("unreachable");
}

namespace detail {

// Integer-endpoint membership with a relative slack of 1e-12, so bands whose
// endpoints land on integers analytically (e.g. geometric at p = 0.75, where
// mu + sigma = 1 exactly) count those integers correctly despite rounding.
inline bool le_hi(double k, double hi) {
  return k <= hi + std::max(1e-12, std::fabs(hi) * 1e-12);
}
inline bool gt_lo_strict(double k, double lo) {
  return k > lo + std::max(1e-12, std::fabs(lo) * 1e-12);
}
inline bool ge_lo(double k, double lo) {
  return k >= lo - std::max(1e-12, std::fabs(lo) * 1e-12);
}

// Gamma coverage, manifestly beta-free.
inline double j_gamma(double alpha) {
  double s = std::sqrt(alpha);
  double hi = reg_inc_gamma_lower(alpha, alpha + s);
  double lo = alpha > s ? reg_inc_gamma_lower(alpha, alpha - s) : 0.0;
  return hi - lo;
}

// Pareto coverage in xm-free form (the band is scale-equivariant).
inline double j_pareto(double alpha) {
  double s = std::sqrt(1.0 - 2.0 / alpha);
  double u = (1.0 + s) / ((alpha - 1.0) * s);  // 1/((a-1)(1 - 1/(1+s)))
  return -std::expm1(-alpha * std::log1p(u));
}

// Weibull coverage, lambda-free; the lower endpoint carries the explicit
// max{0,.} clamp.
inline double j_weibull(double k) {
  double m = std::exp(ln_gamma(1.0 + 1.0 / k));
  double s = std::sqrt(std::exp(ln_gamma(1.0 + 2.0 / k)) - m * m);
  double lo = std::max(0.0, m - s);
  double hi = m + s;
  double tlo = lo > 0.0 ? std::pow(lo, k) : 0.0;
  return std::exp(-tlo) - std::exp(-std::pow(hi, k));
}

// Log-normal coverage; piecewise with branch at sigma = sqrt(ln 2).
inline double j_lognormal(double sigma) {
  double y = std::sqrt(std::expm1(sigma * sigma));  // sqrt(e^{s^2} - 1)
  double upper = normal_cdf((0.5 * sigma * sigma + std::log1p(y)) / sigma);
  if (sigma * sigma >= std::log(2.0)) return upper;  // 1 - y <= 0
  double lower = normal_cdf((0.5 * sigma * sigma + std::log1p(-y)) / sigma);
  return upper - lower;
}

// Inverse-Gaussian coverage in terms of y = sqrt(mu/lambda). The
// exp(2/y^2) Phi(.) products reduce algebraically to
// 0.5 exp(-1/(2(1 +/- y))) erfcx(.), so nothing overflows for any y > 0.
inline double ig_j1(double y) {
  double a = (1.0 + 2.0 / y) / std::sqrt(1.0 + y);
  return normal_cdf(1.0 / std::sqrt(1.0 + y)) +
         0.5 * std::exp(-0.5 / (1.0 + y)) * erfcx(a / std::sqrt(2.0));
}
inline double ig_j2(double y) {
  double a = (2.0 / y - 1.0) / std::sqrt(1.0 - y);
  return normal_cdf(-1.0 / std::sqrt(1.0 - y)) +
         0.5 * std::exp(-0.5 / (1.0 - y)) * erfcx(a / std::sqrt(2.0));
}
inline double j_inv_gaussian(double mu, double lambda) {
  double y = std::sqrt(mu / lambda);
  if (mu >= lambda) return ig_j1(y);
  return ig_j1(y) - ig_j2(y);
}

// Student's t coverage via the hypergeometric route (authoritative).
inline double j_student_t_2f1(double nu) {
  double lc = ln_gamma(0.5 * (nu + 1.0)) - ln_gamma(0.5 * nu) -
              0.5 * std::log(nu * kPi);
  return 2.0 * std::sqrt(nu / (nu - 2.0)) * std::exp(lc) *
         gauss_2f1(0.5, 0.5 * (nu + 1.0), 1.5, -1.0 / (nu - 2.0));
}

// Cross-route via the incomplete-beta CDF.
inline double j_student_t_beta(double nu) {
  double sd = std::sqrt(nu / (nu - 2.0));
  double w = nu / (nu + sd * sd);
  return 1.0 - reg_inc_beta(0.5 * nu, 0.5, w);
}

}  // namespace detail

/// Closed-form P{|X - mu| <= sigma} for continuous families.
inline CoverageResult j_closed(const DistSpec& d) {
  using namespace dist;
  if (is_lattice(d))
    throw std::invalid_argument("j_closed: use j_discrete for lattice families");
  double v = std::visit(
      [&d](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Gamma>) {
          return detail::j_gamma(f.alpha);
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return 2.0 / std::sqrt(12.0);
        } else if constexpr (std::is_same_v<T, Beta>) {
          Moments m = moments(d);
          double sd = std::sqrt(m.variance);
          double hi = std::min(1.0, m.mean + sd);
          double lo = std::max(0.0, m.mean - sd);
          return reg_inc_beta(f.alpha, f.beta, hi) -
                 reg_inc_beta(f.alpha, f.beta, lo);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return -std::expm1(-std::sqrt(2.0));  // 1 - e^{-sqrt(2)}
        } else if constexpr (std::is_same_v<T, Gumbel>) {
          double a = kPi / std::sqrt(6.0);
          return std::exp(-std::exp(-(kEulerGamma + a))) -
                 std::exp(-std::exp(-(kEulerGamma - a)));
        } else if constexpr (std::is_same_v<T, Logistic>) {
          double a = kPi / std::sqrt(3.0);
          return 1.0 / (1.0 + std::exp(-a)) - 1.0 / (1.0 + std::exp(a));
        } else if constexpr (std::is_same_v<T, Pareto>) {
          return detail::j_pareto(f.alpha);
        } else if constexpr (std::is_same_v<T, Weibull>) {
          return detail::j_weibull(f.k);
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          return detail::j_lognormal(f.sigma);
        } else if constexpr (std::is_same_v<T, StudentT>) {
          return detail::j_student_t_2f1(f.nu);
        } else if constexpr (std::is_same_v<T, InvGaussian>) {
          return detail::j_inv_gaussian(f.mu, f.lambda);
        } else if constexpr (std::is_same_v<T, PerturbedPoisson>) {
          // semi-analytic; see j_perturbed_poisson
          Moments m = moments(d);
          double sd = std::sqrt(m.variance);
          return cdf(d, m.mean + sd) - cdf(d, m.mean - sd);
        } else {
          throw unsupported_operation(
              "j_closed: no closed form for this family");
        }
      },
      d);
  return {v, Method::closed_form, 1e-12};
}

/// Exact mass summation over the integers in the variant band.
inline CoverageResult j_discrete(const DistSpec& d, BandVariant variant) {
  if (!is_lattice(d))
    throw std::invalid_argument("j_discrete: family is not lattice-valued");
  Band b = band(d, variant);
  long long k_lo = (long long)std::max(0.0, std::floor(b.lo));
  long long k_hi = (long long)std::ceil(b.hi) + 1;
  double sum = 0.0;
  for (long long k = k_lo; k <= k_hi; ++k) {
    double kk = double(k);
    bool in_lo = (b.lo_kind == EndKind::open) ? detail::gt_lo_strict(kk, b.lo)
                                              : detail::ge_lo(kk, b.lo);
    bool in_hi = detail::le_hi(kk, b.hi);
    if (in_lo && in_hi) sum += pdf_or_pmf(d, kk);
  }
  return {sum, Method::summation, 1e-14};
}

/// Coverage of the perturbed Poisson X = eps*B + X_3:
/// sum_k pois(k;3) [Phi((u-k)/eps) - Phi((l-k)/eps)], l,u = 3 -/+ sqrt(3+eps^2).
inline CoverageResult j_perturbed_poisson(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("j_perturbed_poisson: eps must be positive");
  double sd = std::sqrt(3.0 + eps * eps);
  double l = 3.0 - sd, u = 3.0 + sd;
  double sum = 0.0;
  for (long long k = 0; k <= 40; ++k) {
    double w = std::exp(detail::poisson_log_pmf(3.0, k));
    sum += w * (normal_cdf((u - k) / eps) - normal_cdf((l - k) / eps));
  }
  return {sum, Method::closed_form, 1e-13};
}

/// Student's t coverage via the incomplete-beta CDF route; a mandatory
/// cross-check against the hypergeometric route used by j_closed.
inline double j_student_t_beta_route(double nu) {
  return detail::j_student_t_beta(nu);
}

}  // namespace sigband

#endif  // SIGBAND_SIGMA_BAND_HPP
