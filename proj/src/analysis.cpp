#include "paed/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paed {

double ratio_h(double s, double sigma, double beta) {
  if (sigma < 0.0 || s < 0.0) throw std::domain_error("ratio arguments must be nonnegative");
  if (sigma == 0.0 && s == 0.0) return 1.0; // no demand: both costs vanish
  if (sigma <= 1.0) {
    if (s > sigma) return 1.0;
    return 1.0 + (1.0 - sigma + s) / sigma * (1.0 - beta);
  }
  const double denom = (sigma - 1.0) * beta + 1.0;
  if (s > sigma) return 1.0 + (sigma - 1.0) * (1.0 - beta) / denom;
  return 1.0 + s * (1.0 - beta) / denom;
}

double worst_case_ratio(double s, double beta) {
  if (s < 0.0) throw std::domain_error("threshold must be nonnegative");
  if (s == 0.0) return kInf;
  if (std::isinf(s)) {
    // Never switching: the ratio grows with sigma toward 1 + (1-beta)/beta.
    return beta > 0.0 ? 1.0 + (1.0 - beta) / beta : kInf;
  }
  if (s <= 1.0) return 1.0 + (1.0 / s) * (1.0 - beta);
  return 1.0 + s * (1.0 - beta) / ((s - 1.0) * beta + 1.0);
}

MinMaxCertificate optimal_deterministic_s(double beta, double s_max, double step, double tol) {
  MinMaxCertificate cert;
  cert.s_star = 1.0;
  cert.value = 2.0 - beta;
  cert.grid_min_value = kInf;
  for (double s = step; s <= s_max + step / 2; s += step) {
    const double w = worst_case_ratio(s, beta);
    if (w < cert.grid_min_value) {
      cert.grid_min_value = w;
      cert.grid_min_s = s;
    }
  }
  cert.confirmed = std::abs(cert.grid_min_s - 1.0) <= step + tol &&
                   cert.grid_min_value >= cert.value - tol;
  return cert;
}

double f_star_density(double s, double beta) {
  if (s < 0.0 || s > 1.0) return 0.0;
  return std::exp(s) / (std::exp(1.0) - 1.0 + beta);
}

double f_star_atom(double beta) { return beta / (std::exp(1.0) - 1.0 + beta); }

double g_star_density(double sigma, double beta) {
  if (sigma < 0.0) return 0.0;
  const double scale = std::exp(1.0) / (std::exp(1.0) - 1.0 + beta);
  if (sigma <= 1.0) return scale * sigma * std::exp(-sigma);
  return scale * ((sigma - 1.0) * beta + 1.0) * std::exp(-sigma);
}

namespace {

double simpson_rule(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_impl(const std::function<double(double)>& f, double a, double fa,
                             double b, double fb, double m, double fm, double whole, double tol,
                             int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_rule(a, fa, m, fm, flm);
  const double right = simpson_rule(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_impl(f, a, fa, m, fm, lm, flm, left, tol / 2, depth - 1) +
         adaptive_simpson_impl(f, m, fm, b, fb, rm, frm, right, tol / 2, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = simpson_rule(a, fa, b, fb, fm);
  return adaptive_simpson_impl(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

namespace {

constexpr double kQuadTol = 1e-9;
constexpr double kSigmaTail = 50.0;

// Integral of ((sigma-1)*beta + 1) * e^-sigma over [a, inf).
double g_star_tail_raw(double a, double beta) {
  return std::exp(-a) * (beta * a + 1.0);
}

double expected_value(double beta) { return std::exp(1.0) / (std::exp(1.0) - 1.0 + beta); }

// Splits [a, b] at interior breakpoints and adds up piecewise quadratures so
// the integrand is smooth on every panel.
double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::vector<double> breaks) {
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = std::clamp(breaks[i], a, b);
    const double hi = std::clamp(breaks[i + 1], a, b);
    if (hi > lo) total += adaptive_simpson(f, lo, hi, kQuadTol);
  }
  return total;
}

} // namespace

VerificationReport verify_randomized_cr(double beta, const std::vector<double>& sigma_grid,
                                        double tolerance) {
  if (beta < 0.0 || beta > 1.0) throw std::domain_error("beta must lie in [0, 1]");
  VerificationReport report;
  report.name = "randomized-cr";
  report.beta = beta;
  report.expected = expected_value(beta);
  report.tolerance = tolerance;
  for (double sigma : sigma_grid) {
    const auto integrand = [&](double s) { return ratio_h(s, sigma, beta) * f_star_density(s, beta); };
    double value = integrate_piecewise(integrand, 0.0, 1.0, {std::min(sigma, 1.0)});
    value += ratio_h(kInf, sigma, beta) * f_star_atom(beta);
    const double error = std::abs(value - report.expected);
    report.points.push_back({sigma, value, error});
    report.max_error = std::max(report.max_error, error);
  }
  report.passed = report.max_error < tolerance;
  return report;
}

VerificationReport verify_yao_bound(double beta, const std::vector<double>& s_grid,
                                    double tolerance) {
  if (beta < 0.0 || beta > 1.0) throw std::domain_error("beta must lie in [0, 1]");
  VerificationReport report;
  report.name = "yao-lower-bound";
  report.beta = beta;
  report.expected = expected_value(beta);
  report.tolerance = tolerance;
  const double scale = expected_value(beta);
  for (double s : s_grid) {
    if (!std::isfinite(s) || s >= kSigmaTail)
      throw std::domain_error("threshold grid must stay below the quadrature tail cutoff");
    const auto integrand = [&](double sigma) {
      return ratio_h(s, sigma, beta) * g_star_density(sigma, beta);
    };
    double value = integrate_piecewise(integrand, 0.0, kSigmaTail, {1.0, std::min(s, kSigmaTail)});
    // Analytic tail: for sigma beyond the cutoff the ratio is on its
    // s <= sigma branch, so the ((sigma-1)beta+1) factors cancel.
    value += scale * (g_star_tail_raw(kSigmaTail, beta) +
                      s * (1.0 - beta) * std::exp(-kSigmaTail));
    const double error = std::abs(value - report.expected);
    report.points.push_back({s, value, error});
    report.max_error = std::max(report.max_error, error);
  }
  report.passed = report.max_error < tolerance;
  return report;
}

std::pair<DemandTrace, PriceModel> adversarial_trace(const Rational& s_target,
                                                     const Rational& beta, std::int64_t horizon,
                                                     const PriceTemplate& prices) {
  if (beta < 0 || beta > 1) throw std::domain_error("beta must lie in [0, 1]");
  if (s_target < 0) throw std::domain_error("threshold target must be nonnegative");
  if (horizon < 1) throw std::domain_error("horizon must be positive");

  const Rational spot = beta * prices.p_g;
  const Rational deficit_per_slot = prices.p_g - spot;

  std::int64_t demand_slots = 0;
  if (s_target > 0) {
    if (deficit_per_slot == 0)
      throw std::length_error("beta = 1 accumulates no deficit; target unreachable");
    demand_slots = to_int64(ceil_rational(s_target * prices.p_m / deficit_per_slot));
    if (demand_slots > horizon)
      throw std::length_error("horizon too short to reach the target deficit");
  }

  std::vector<std::int64_t> demand(static_cast<std::size_t>(horizon), 0);
  for (std::int64_t t = 0; t < demand_slots; ++t) demand[static_cast<std::size_t>(t)] = 1;
  std::vector<Rational> spot_series(static_cast<std::size_t>(horizon), spot);
  return {DemandTrace(std::move(demand)),
          PriceModel(std::move(spot_series), prices.p_g, prices.p_m, spot, prices.delta_hours)};
}

double empirical_cr(const std::vector<Instance>& instances, const InstanceCostFn& online_cost,
                    const InstanceCostFn& offline_cost) {
  double worst = 0.0;
  for (const Instance& instance : instances) {
    const Rational on = online_cost(instance);
    const Rational off = offline_cost(instance);
    double ratio;
    if (off == 0)
      ratio = on == 0 ? 1.0 : kInf;
    else
      ratio = to_double(on / off);
    worst = std::max(worst, ratio);
  }
  return worst;
}

} // namespace paed
