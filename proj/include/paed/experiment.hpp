#ifndef PAED_EXPERIMENT_HPP
#define PAED_EXPERIMENT_HPP

#include "paed/synth.hpp"
#include "paed/trace_io.hpp"
#include "paed/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace paed {

// Piecewise-constant time-of-use band: [start_hour, end_hour) at a flat rate.
struct TouBand {
  double start_hour = 0.0;
  double end_hour = 24.0;
  Rational rate_per_kwh{0};
};

struct ExperimentConfig {
  // Trace source: CSV files when demand_csv is set, synthetic otherwise.
  std::string demand_csv;
  std::string renewable_csv;
  std::string price_csv;
  SynthSpec synth;

  Rational quantum_kwh{100};
  Rational slot_hours{1, 4};
  Rational p_g_per_kwh{1, 4};
  Rational peak_price_per_kw{439, 100};
  Rational p_e_min_per_kwh{56, 1000};
  std::vector<TouBand> tou_bands; // spot schedule when no price file is given

  double rho = 0.6;                  // capacity as a fraction of peak net demand
  std::int64_t capacity_units = -1;  // >= 0 overrides rho
  std::int64_t ramp_units = -1;      // <= 0 means fast-responding (no ramp limit)
  std::int64_t gamma_target = 0;     // >= 1 derives ramp_units from capacity

  std::vector<std::string> algorithms; // empty = all, in canonical order
  std::uint64_t seed = 1;
  int red_trials = 100;
  double noise_level = 0.0; // lookahead prediction noise, fraction of demand

  std::vector<double> rho_values;
  std::vector<Rational> peak_price_values; // $/KW
  std::vector<std::int64_t> gamma_values;
  std::vector<double> noise_values;

  std::string output_path = "results.csv";
  std::string format = "csv"; // csv | json
  std::string nrbf_base = "bed";
};

ExperimentConfig load_config(const std::string& path);

struct ResultRow {
  std::string algorithm;
  CostBreakdown cost;
  Rational reduction{0}; // 1 - total / benchmark total
  double ratio = 1.0;    // total / offline total
};

// Fully prepared single-cycle instance.
struct PreparedInstance {
  DemandTrace trace;
  PriceModel prices;
  GeneratorSpec gen;
};

PreparedInstance prepare_instance(const ExperimentConfig& config);

// Runs the configured algorithms on one billing cycle and returns one row
// per algorithm, in canonical order. Every schedule is re-validated before
// its row is produced.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

void emit_results(const std::vector<ResultRow>& rows, const std::string& path,
                  const std::string& format);

// Reads back a results CSV produced by emit_results.
std::vector<ResultRow> parse_results_csv(const std::string& path);

enum class SweepParam { Rho, PeakPrice, Gamma, Noise };

struct SweepPoint {
  double value = 0.0;
  std::vector<ResultRow> rows;
};

std::vector<SweepPoint> run_sweep(const ExperimentConfig& config, SweepParam param);

void emit_sweep_csv(const std::vector<SweepPoint>& points, const std::string& param_name,
                    const std::string& path);

const char* sweep_param_name(SweepParam param);

} // namespace paed

#endif
