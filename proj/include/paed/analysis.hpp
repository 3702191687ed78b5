#ifndef PAED_ANALYSIS_HPP
#define PAED_ANALYSIS_HPP

#include "paed/types.hpp"

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace paed {

// Competitive-ratio machinery works in floating point; every check carries an
// explicit tolerance. Infinity stands for the never-switch threshold.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Cost ratio of the threshold-s rule against the offline optimum on a binary
// instance with critical threshold sigma, as a four-case closed form.
double ratio_h(double s, double sigma, double beta);

// max over sigma of ratio_h(s, sigma, beta); attained at sigma = s.
double worst_case_ratio(double s, double beta);

// Grid-search certificate that the break-even threshold minimizes the
// worst-case ratio.
struct MinMaxCertificate {
  double s_star = 1.0;        // analytic minimizer
  double value = 0.0;         // worst_case_ratio(1, beta) = 2 - beta
  double grid_min_s = 0.0;    // argmin over the search grid
  double grid_min_value = 0.0;
  bool confirmed = false;     // grid minimum sits at s = 1 within tolerance
};
MinMaxCertificate optimal_deterministic_s(double beta, double s_max = 4.0,
                                          double step = 1e-3, double tol = 1e-9);

// Randomized threshold density on [0,1] (the never-switch atom is reported
// separately) and the adversary density over sigma.
double f_star_density(double s, double beta);
double f_star_atom(double beta);
double g_star_density(double sigma, double beta);

// Recursive adaptive Simpson quadrature with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

struct VerificationPoint {
  double where; // sigma for the randomized check, s for the adversary check
  double value;
  double error; // |value - e/(e-1+beta)|
};

struct VerificationReport {
  std::string name;
  double beta = 0.0;
  double expected = 0.0; // e/(e-1+beta)
  std::vector<VerificationPoint> points;
  double max_error = 0.0;
  bool passed = false; // max_error < tolerance
  double tolerance = 1e-6;
};

// For each sigma, integrates ratio_h against the randomized threshold
// distribution and checks the result equals e/(e-1+beta).
VerificationReport verify_randomized_cr(double beta, const std::vector<double>& sigma_grid,
                                        double tolerance = 1e-6);

// For each s, integrates ratio_h against the adversary density over sigma
// and checks the indifference value e/(e-1+beta).
VerificationReport verify_yao_bound(double beta, const std::vector<double>& s_grid,
                                    double tolerance = 1e-6);

// Price parameters for generated worst-case instances.
struct PriceTemplate {
  Rational p_g{1};
  Rational p_m{100};
  Rational delta_hours{1};
};

// Binary instance with constant spot price beta*p_g whose demand stops at
// the slot where the accumulated deficit first reaches s_target * p_m.
std::pair<DemandTrace, PriceModel> adversarial_trace(const Rational& s_target,
                                                     const Rational& beta, std::int64_t horizon,
                                                     const PriceTemplate& prices);

struct Instance {
  DemandTrace trace;
  PriceModel prices;
};

using InstanceCostFn = std::function<Rational(const Instance&)>;

// Max over instances of online/offline cost. Zero offline with zero online
// counts as ratio 1; zero offline with positive online reports infinity.
double empirical_cr(const std::vector<Instance>& instances, const InstanceCostFn& online_cost,
                    const InstanceCostFn& offline_cost);

} // namespace paed

#endif
