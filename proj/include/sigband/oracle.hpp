#ifndef SIGBAND_ORACLE_HPP
#define SIGBAND_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sigband/catalog.hpp"
#include "sigband/philox.hpp"
#include "sigband/sigma_band.hpp"

// Independent ground-truth estimators: adaptive Gauss-Kronrod quadrature for
// the continuous closed forms and reproducible Monte Carlo for the compound
// Poisson counterexample (which has no closed form).

namespace sigband {

struct McEstimate {
  double estimate;
  double stderr_;
  uint64_t n_samples;
  uint64_t seed;
};

struct quadrature_error : std::runtime_error {
  double achieved;
  quadrature_error(const std::string& msg, double est)
      : std::runtime_error(msg), achieved(est) {}
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1].
inline constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

inline Panel gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fk = 0.0, fg = 0.0;
  for (int i = 0; i < 8; ++i) {
    double x = kKronrodX[i];
    double fv = (i == 7) ? f(c) : f(c - h * x) + f(c + h * x);
    fk += kKronrodW[i] * fv;
    if (i % 2 == 1) fg += kGaussW[i / 2] * fv;
    else if (i == 7) fg += kGaussW[3] * fv;
  }
  return {a, b, fk * h, std::fabs((fk - fg) * h)};
}

/// Adaptive bisection over an initial panel list until the summed error
/// estimate drops below tol or the panel budget runs out.
inline std::pair<double, double> integrate_adaptive(
    const std::function<double(double)>& f, std::vector<double> pts,
    double tol, int max_panels = 20000) {
  std::sort(pts.begin(), pts.end());
  std::priority_queue<Panel> heap;
  double total = 0.0, err = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] <= pts[i]) continue;
    Panel p = gk15(f, pts[i], pts[i + 1]);
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  int panels = int(heap.size());
  while (err > tol && panels < max_panels) {
    Panel worst = heap.top();
    if (worst.error <= 0.0) break;
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval at ulp scale
    Panel l = gk15(f, worst.a, mid);
    Panel r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++panels;
  }
  return {total, err};
}

// Interior points where the integrand needs help: density kinks and modes.
inline std::vector<double> breakpoints(const DistSpec& d) {
  using namespace dist;
  return std::visit(
      [](const auto& v) -> std::vector<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Laplace>) {
          return {v.mu};
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          return {std::exp(v.mu - v.sigma * v.sigma), std::exp(v.mu)};
        } else if constexpr (std::is_same_v<T, InvGaussian>) {
          double r = 1.5 * v.mu / v.lambda;
          return {v.mu * (std::sqrt(1.0 + r * r) - r)};
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return {v.alpha > 1.0 ? (v.alpha - 1.0) * v.beta : 0.0};
        } else if constexpr (std::is_same_v<T, Weibull>) {
          return {v.k > 1.0
                      ? v.lambda * std::pow((v.k - 1.0) / v.k, 1.0 / v.k)
                      : 0.0};
        } else if constexpr (std::is_same_v<T, PerturbedPoisson>) {
          // one narrow Gaussian spike per integer; split at each center and
          // its 5-sigma shoulders so refinement cannot miss a spike
          std::vector<double> pts;
          for (int k = 0; k <= 40; ++k) {
            pts.push_back(double(k));
            pts.push_back(k - 5.0 * v.eps);
            pts.push_back(k + 5.0 * v.eps);
          }
          return pts;
        } else {
          return {};
        }
      },
      d);
}

inline unsigned worker_count() {
  if (const char* env = std::getenv("SIGBAND_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return unsigned(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Poisson sampling by CDF inversion; deterministic.
inline long long poisson_inverse(double lambda, double u) {
  double p = std::exp(-lambda), cum = p;
  long long k = 0;
  while (u > cum && k < 100000) {
    ++k;
    p *= lambda / k;
    cum += p;
  }
  return k;
}

// Counts hits over a sample range; purely a function of (seed, range).
template <typename SampleFn>
uint64_t count_hits(uint64_t begin, uint64_t end, SampleFn&& hit) {
  uint64_t n = 0;
  for (uint64_t i = begin; i < end; ++i)
    if (hit(i)) ++n;
  return n;
}

template <typename SampleFn>
McEstimate mc_run(uint64_t n_samples, uint64_t seed, SampleFn hit) {
  unsigned workers = worker_count();
  uint64_t total = 0;
  if (workers <= 1 || n_samples < 100000) {
    total = count_hits(0, n_samples, hit);
  } else {
    std::vector<std::thread> threads;
    std::vector<uint64_t> counts(workers, 0);
    uint64_t chunk = (n_samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      uint64_t b = w * chunk, e = std::min(n_samples, b + chunk);
      if (b >= e) break;
      threads.emplace_back(
          [&counts, w, b, e, hit]() { counts[w] = count_hits(b, e, hit); });
    }
    for (auto& t : threads) t.join();
    for (uint64_t c : counts) total += c;
  }
  double est = double(total) / double(n_samples);
  double se = std::sqrt(est * (1.0 - est) / double(n_samples));
  return {est, se, n_samples, seed};
}

}  // namespace detail

/// Adaptive quadrature of the density over the plain band, clipped to the
/// support; the result's err_estimate is the achieved absolute error bound.
inline CoverageResult j_quadrature(const DistSpec& d, double tol) {
  if (is_lattice(d) || std::holds_alternative<dist::CompoundPoissonUniform>(d))
    throw std::invalid_argument("j_quadrature: continuous families only");
  if (!(tol >= 1e-13)) throw std::invalid_argument("j_quadrature: tol must be >= 1e-13");
  Band b = band(d, BandVariant::plain);
  auto [slo, shi] = support(d);
  double a = std::max(b.lo, slo), z = std::min(b.hi, shi);
  if (!(a < z)) return {0.0, Method::quadrature, 0.0};
  double value = 0.0, err = 0.0;
  // Beta with beta < 1 has an algebraic singularity at x = 1, where panel
  // bisection stalls at ulp scale; integrate that side in reflected
  // coordinates u = 1 - x (a Beta(beta, alpha) density, singular at u = 0,
  // where bisection can descend to denormals).
  if (const auto* be = std::get_if<dist::Beta>(&d);
      be && be->beta < 1.0 && z > 0.5) {
    DistSpec refl = dist::Beta{be->beta, be->alpha};
    double split = std::max(a, 0.5);
    auto fr = [&refl](double u) { return pdf_or_pmf(refl, u); };
    auto [v1, e1] = detail::integrate_adaptive(fr, {1.0 - z, 1.0 - split},
                                               0.5 * tol);
    value += v1;
    err += e1;
    z = split;
    tol *= 0.5;
  }
  if (a < z) {
    std::vector<double> pts = {a, z};
    for (double p : detail::breakpoints(d))
      if (p > a && p < z) pts.push_back(p);
    auto f = [&d](double x) { return pdf_or_pmf(d, x); };
    auto [v0, e0] = detail::integrate_adaptive(f, pts, tol);
    value += v0;
    err += e0;
  }
  if (err > tol)
    throw quadrature_error("j_quadrature: subdivision budget exhausted "
                           "(achieved error estimate " + std::to_string(err) + ")",
                           err);
  return {value, Method::quadrature, err};
}

/// Monte Carlo coverage of the compound Poisson law Y = sum_{i<=N} U_i with
/// N ~ Poisson(3) and U_i uniform on [1-1/n, 1+1/n]. Bit-exactly
/// reproducible for fixed (seed, n_samples) under any worker count.
inline McEstimate j_mc_compound_poisson(int n, uint64_t n_samples, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("j_mc_compound_poisson: n must be >= 1");
  if (n_samples < 10000)
    throw std::invalid_argument("j_mc_compound_poisson: need at least 1e4 samples");
  double half = 1.0 / n;
  double sd = std::sqrt(3.0 + half * half);
  auto hit = [seed, half, sd](uint64_t i) {
    long long count = detail::poisson_inverse(3.0, philox_uniform01(seed, i, 0));
    double y = 0.0;
    for (long long j = 1; j <= count; ++j)
      y += 1.0 - half + 2.0 * half * philox_uniform01(seed, i, uint64_t(j));
    return std::fabs(y - 3.0) <= sd;
  };
  return detail::mc_run(n_samples, seed, hit);
}

/// Empirical plain-band coverage for families with a deterministic sampler
/// (Poisson, geometric, perturbed Poisson).
inline McEstimate j_mc_generic(const DistSpec& d, uint64_t n_samples, uint64_t seed) {
  if (n_samples < 10000)
    throw std::invalid_argument("j_mc_generic: need at least 1e4 samples");
  Moments m = moments(d);
  double sd = std::sqrt(m.variance);
  double lo = m.mean - sd, hi = m.mean + sd;
  using namespace dist;
  std::function<double(uint64_t)> draw;
  if (const auto* p = std::get_if<Poisson>(&d)) {
    double lambda = p->lambda;
    draw = [seed, lambda](uint64_t i) {
      return double(detail::poisson_inverse(lambda, philox_uniform01(seed, i, 0)));
    };
  } else if (const auto* g = std::get_if<Geometric>(&d)) {
    double lq = std::log1p(-g->p);
    draw = [seed, lq](uint64_t i) {
      // smallest k with 1-(1-p)^{k+1} >= u
      double u = philox_uniform01(seed, i, 0);
      double k = std::ceil(std::log1p(-u) / lq) - 1.0;
      return std::max(0.0, k);
    };
  } else if (const auto* pp = std::get_if<PerturbedPoisson>(&d)) {
    double eps = pp->eps;
    draw = [seed, eps](uint64_t i) {
      long long k = detail::poisson_inverse(3.0, philox_uniform01(seed, i, 0));
      double u1 = philox_uniform01(seed, i, 1);
      double u2 = philox_uniform01(seed, i, 2);
      double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
      return double(k) + eps * z;
    };
  } else {
    throw unsupported_operation("j_mc_generic: no sampler for family '" +
                                family_name(d) + "'");
  }
  bool lattice = is_lattice(d);
  auto hit = [draw, lo, hi, lattice](uint64_t i) {
    double x = draw(i);
    if (lattice) return detail::ge_lo(x, lo) && detail::le_hi(x, hi);
    return x >= lo && x <= hi;
  };
  return detail::mc_run(n_samples, seed, hit);
}

}  // namespace sigband

#endif  // SIGBAND_ORACLE_HPP
