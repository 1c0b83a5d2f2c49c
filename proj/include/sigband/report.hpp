#ifndef SIGBAND_REPORT_HPP
#define SIGBAND_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigband/catalog.hpp"
#include "sigband/oracle.hpp"
#include "sigband/sigma_band.hpp"
#include "sigband/sweep.hpp"

// Machine-readable verification report plus CSV/SVG emission.

namespace sigband {

struct VerificationRecord {
  std::string family;
  std::map<std::string, double> params;
  std::string variant;
  double coverage_closed = 0.0;
  double coverage_oracle = 0.0;
  double abs_diff = 0.0;
  double tol = 0.0;
  bool exceeds_threshold = false;
  bool expected_exceeds = false;
  bool pass = false;
  std::string note;

  bool operator==(const VerificationRecord&) const = default;
};

struct Report {
  double threshold_exact = kThresholdExact;
  double threshold_paper = kThresholdPaper;
  std::vector<VerificationRecord> records;

  int passed() const {
    int n = 0;
    for (const auto& r : records) n += r.pass;
    return n;
  }
  int failed() const { return int(records.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }

  bool operator==(const Report&) const = default;
};

inline void to_json(nlohmann::json& j, const VerificationRecord& r) {
  j = nlohmann::json{{"family", r.family},
                     {"params", r.params},
                     {"variant", r.variant},
                     {"coverage_closed", r.coverage_closed},
                     {"coverage_oracle", r.coverage_oracle},
                     {"abs_diff", r.abs_diff},
                     {"tol", r.tol},
                     {"exceeds_threshold", r.exceeds_threshold},
                     {"expected_exceeds", r.expected_exceeds},
                     {"pass", r.pass},
                     {"note", r.note}};
}

inline void from_json(const nlohmann::json& j, VerificationRecord& r) {
  j.at("family").get_to(r.family);
  r.params = j.at("params").get<std::map<std::string, double>>();
  j.at("variant").get_to(r.variant);
  j.at("coverage_closed").get_to(r.coverage_closed);
  j.at("coverage_oracle").get_to(r.coverage_oracle);
  j.at("abs_diff").get_to(r.abs_diff);
  j.at("tol").get_to(r.tol);
  j.at("exceeds_threshold").get_to(r.exceeds_threshold);
  j.at("expected_exceeds").get_to(r.expected_exceeds);
  j.at("pass").get_to(r.pass);
  j.at("note").get_to(r.note);
}

inline void to_json(nlohmann::json& j, const Report& rep) {
  j = nlohmann::json{{"threshold_exact", rep.threshold_exact},
                     {"threshold_paper", rep.threshold_paper},
                     {"records", rep.records},
                     {"summary",
                      {{"total", rep.records.size()},
                       {"passed", rep.passed()},
                       {"failed", rep.failed()}}}};
}

inline void from_json(const nlohmann::json& j, Report& rep) {
  j.at("threshold_exact").get_to(rep.threshold_exact);
  j.at("threshold_paper").get_to(rep.threshold_paper);
  rep.records = j.at("records").get<std::vector<VerificationRecord>>();
}

namespace detail {

// CDF-difference route for a discrete band: an independent check on the
// direct mass summation (the geometric CDF, for one, has a closed form).
inline double discrete_cdf_route(const DistSpec& d, BandVariant variant) {
  Band b = band(d, variant);
  double nudge_hi = b.hi + std::max(1e-9, std::fabs(b.hi) * 1e-12);
  double upper = cdf(d, nudge_hi);
  double lower;
  if (b.lo_kind == EndKind::open) {
    lower = cdf(d, b.lo + std::max(1e-9, std::fabs(b.lo) * 1e-12));
  } else {
    lower = cdf(d, b.lo - std::max(1e-9, std::fabs(b.lo) * 1e-12));
  }
  return upper - lower;
}

inline VerificationRecord continuous_record(const DistSpec& d,
                                            bool expected_exceeds, double tol) {
  VerificationRecord r;
  r.family = family_name(d);
  r.params = params(d);
  r.variant = "plain";
  r.coverage_closed = j_closed(d).value;
  r.coverage_oracle = j_quadrature(d, std::max(1e-12, tol * 0.1)).value;
  r.abs_diff = std::fabs(r.coverage_closed - r.coverage_oracle);
  r.tol = tol;
  r.exceeds_threshold = r.coverage_closed > kThresholdExact;
  r.expected_exceeds = expected_exceeds;
  r.pass = (r.abs_diff <= tol) && (r.exceeds_threshold == r.expected_exceeds);
  r.note = "closed form vs adaptive quadrature";
  return r;
}

inline VerificationRecord discrete_record(const DistSpec& d,
                                          BandVariant variant,
                                          bool expected_exceeds) {
  VerificationRecord r;
  r.family = family_name(d);
  r.params = params(d);
  r.variant = to_string(variant);
  r.coverage_closed = j_discrete(d, variant).value;
  r.coverage_oracle = discrete_cdf_route(d, variant);
  r.abs_diff = std::fabs(r.coverage_closed - r.coverage_oracle);
  r.tol = 1e-12;
  r.exceeds_threshold = r.coverage_closed > kThresholdExact;
  r.expected_exceeds = expected_exceeds;
  r.pass = (r.abs_diff <= r.tol) && (r.exceeds_threshold == r.expected_exceeds);
  r.note = "mass summation vs CDF differences";
  return r;
}

inline VerificationRecord table_bound_record(const std::string& name,
                                             const SweepTable& t, double bound,
                                             bool expected_above) {
  VerificationRecord r;
  r.family = name;
  r.variant = "sweep";
  double mn = t.rows.front().coverage;
  for (const auto& row : t.rows) mn = std::min(mn, row.coverage);
  r.coverage_closed = mn;
  r.coverage_oracle = mn;
  r.tol = 1e-12;
  r.exceeds_threshold = mn > bound - 1e-12;
  r.expected_exceeds = expected_above;
  r.pass = r.exceeds_threshold == r.expected_exceeds;
  char buf[64];
  std::snprintf(buf, sizeof buf, "min coverage vs bound %.10g", bound);
  r.note = buf;
  return r;
}

}  // namespace detail

/// The full built-in verification suite: every family at canonical
/// parameter points (plus a location/scale-shifted duplicate), the figure
/// invariants, and the Monte Carlo compound Poisson counterexample.
inline Report verify_all(double tol = 1e-9, uint64_t seed = 42,
                         uint64_t samples = 1000000) {
  using namespace dist;
  using detail::continuous_record;
  using detail::discrete_record;
  Report rep;
  auto& rs = rep.records;

  // Continuous families; the shifted duplicates exercise location-scale
  // invariance of the closed forms.
  rs.push_back(continuous_record(Laplace{0, 1}, true, tol));
  rs.push_back(continuous_record(Laplace{5, 2}, true, tol));
  rs.push_back(continuous_record(Gumbel{0, 1}, true, tol));
  rs.push_back(continuous_record(Gumbel{-3, 7}, true, tol));
  rs.push_back(continuous_record(Logistic{0, 1}, true, tol));
  rs.push_back(continuous_record(Logistic{2, 0.5}, true, tol));
  rs.push_back(continuous_record(Pareto{1, 3}, true, tol));
  rs.push_back(continuous_record(Pareto{2.5, 3}, true, tol));
  rs.push_back(continuous_record(Weibull{1, 0.5}, true, tol));
  rs.push_back(continuous_record(Weibull{2, 0.5}, true, tol));
  rs.push_back(continuous_record(Weibull{1, 3}, false, tol));
  rs.push_back(continuous_record(LogNormal{0, 1}, true, tol));
  rs.push_back(continuous_record(LogNormal{1, 1}, true, tol));
  rs.push_back(continuous_record(StudentT{5}, true, tol));
  rs.push_back(continuous_record(InvGaussian{1, 1}, true, tol));
  rs.push_back(continuous_record(InvGaussian{2, 2}, true, tol));
  rs.push_back(continuous_record(Gamma{2.5, 1}, true, tol));
  rs.push_back(continuous_record(Gamma{2.5, 4}, true, tol));
  rs.push_back(continuous_record(Uniform{0, 1}, false, tol));
  rs.push_back(continuous_record(Uniform{-1, 3}, false, tol));
  rs.push_back(continuous_record(Beta{2, 2}, false, tol));  // figure-1 dip
  rs.push_back(continuous_record(Beta{2, 20}, true, tol));

  // Discrete families and their printed reference values.
  rs.push_back(discrete_record(Geometric{0.75},
                               BandVariant::geometric_corrected, true));
  rs.push_back(discrete_record(NegBinomial{2, 0.45}, BandVariant::plain, false));
  rs.push_back(
      discrete_record(NegBinomial{2, 0.45}, BandVariant::nb_corrected, true));
  rs.push_back(discrete_record(Poisson{3}, BandVariant::plain, false));
  rs.push_back(discrete_record(Poisson{3}, BandVariant::poisson_corrected, true));

  // Perturbed Poisson: semi-analytic vs Monte Carlo.
  {
    VerificationRecord r;
    DistSpec d = PerturbedPoisson{0.01};
    r.family = family_name(d);
    r.params = params(d);
    r.variant = "plain";
    r.coverage_closed = j_perturbed_poisson(0.01).value;
    McEstimate mc = j_mc_generic(d, samples, seed);
    r.coverage_oracle = mc.estimate;
    r.abs_diff = std::fabs(r.coverage_closed - r.coverage_oracle);
    r.tol = 4.0 * mc.stderr_ + 0.001;
    r.exceeds_threshold = r.coverage_closed > kThresholdExact;
    r.expected_exceeds = false;
    r.pass = (r.abs_diff <= r.tol) && !r.exceeds_threshold;
    r.note = "semi-analytic vs Monte Carlo";
    rs.push_back(r);
  }

  // Compound Poisson counterexample: Monte Carlo only; the upper 99%
  // confidence bound must sit below the threshold.
  {
    VerificationRecord r;
    r.family = "compoundpoisson";
    r.params = {{"n", 100.0}};
    r.variant = "plain";
    McEstimate mc = j_mc_compound_poisson(100, samples, seed);
    r.coverage_closed = mc.estimate;
    r.coverage_oracle = mc.estimate;
    r.abs_diff = 0.0;
    r.tol = 4.0 * mc.stderr_ + 0.001;
    double upper99 = mc.estimate + 2.5758293035489004 * mc.stderr_;
    r.exceeds_threshold = upper99 >= kThresholdPaper;
    r.expected_exceeds = false;
    r.pass = !r.exceeds_threshold &&
             std::fabs(mc.estimate - 0.616115) <= r.tol;
    r.note = "Monte Carlo upper 99% confidence bound vs threshold";
    rs.push_back(r);
  }

  // Figure invariants.
  rs.push_back(detail::table_bound_record("figure3_geometric_JG",
                                          figure_dataset(3), 0.75, true));
  for (int id = 5; id <= 8; ++id)
    rs.push_back(detail::table_bound_record(
        "figure" + std::to_string(id) + "_negbinomial_JNB", figure_dataset(id),
        kThresholdPaper, true));
  rs.push_back(detail::table_bound_record("figure9_poisson_JP",
                                          figure_dataset(9), kThresholdPaper,
                                          true));
  return rep;
}

inline void write_report(const Report& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  nlohmann::json j = rep;
  out << j.dump(2) << '\n';
}

/// CSV with header param,coverage,excess; '.' decimal separator, 17
/// significant digits, LF line endings.
inline void write_csv(const SweepTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "param,coverage,excess\n";
  char buf[128];
  for (const auto& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.param, r.coverage,
                  r.excess);
    out << buf;
  }
}

/// Minimal SVG: axes, a zero reference line and the excess-vs-param polyline.
inline void write_svg(const SweepTable& t, const std::string& path) {
  if (t.rows.empty()) throw std::invalid_argument("write_svg: empty table");
  const double W = 800, H = 500, ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = t.rows.front().param, xmax = t.rows.back().param;
  double ymin = 0.0, ymax = 0.0;
  for (const auto& r : t.rows) {
    ymin = std::min(ymin, r.excess);
    ymax = std::max(ymax, r.excess);
  }
  if (ymax == ymin) ymax = ymin + 1.0;
  double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  auto py = [&](double y) {
    return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb);
  };
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                "fill=\"none\" stroke=\"black\"/>\n",
                ml, mt, W - ml - mr, H - mt - mb);
  out << buf;
  if (ymin < 0.0 && ymax > 0.0) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.2f\" x2=\"%.1f\" y2=\"%.2f\" "
                  "stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
                  ml, py(0.0), W - mr, py(0.0));
    out << buf;
  }
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (const auto& r : t.rows) {
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(r.param), py(r.excess));
    out << buf;
  }
  out << "\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\">%s</text>\n",
                0.5 * W, H - 12.0, t.param_name.c_str());
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"16\" y=\"%.1f\" font-size=\"14\" "
                "transform=\"rotate(-90 16 %.1f)\">coverage - threshold</text>\n",
                0.55 * H, 0.55 * H);
  out << buf;
  out << "</svg>\n";
}

}  // namespace sigband

#endif  // SIGBAND_REPORT_HPP
