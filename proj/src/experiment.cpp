#include "paed/experiment.hpp"

#include "paed/core.hpp"
#include "paed/offline.hpp"
#include "paed/online_fast.hpp"
#include "paed/online_ramp.hpp"
#include "paed/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace paed {

namespace {

using nlohmann::json;

Rational json_to_rational(const json& value) {
  if (value.is_string()) return rational_from_decimal(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) return rational_from_double_decimal(value.get<double>());
  throw std::invalid_argument("expected a number or decimal string");
}

const std::vector<std::string> kCanonicalOrder = {"grid_only", "greedy", "bed",
                                                  "red",       "nrbf",   "offline"};

std::vector<TouBand> default_tou_bands() {
  return {{0.0, 8.0, Rational(56, 1000)},
          {8.0, 12.0, Rational(12, 100)},
          {12.0, 18.0, Rational(232, 1000)},
          {18.0, 22.0, Rational(12, 100)},
          {22.0, 24.0, Rational(56, 1000)}};
}

std::vector<Rational> tou_schedule(const std::vector<TouBand>& bands, std::int64_t horizon,
                                   double slot_hours) {
  std::vector<Rational> rates(static_cast<std::size_t>(horizon));
  for (std::int64_t t = 0; t < horizon; ++t) {
    const double hour = std::fmod(static_cast<double>(t) * slot_hours, 24.0);
    const TouBand* hit = nullptr;
    for (const TouBand& band : bands) {
      if (hour >= band.start_hour && hour < band.end_hour) {
        hit = &band;
        break;
      }
    }
    if (!hit)
      throw std::invalid_argument("time-of-use bands do not cover hour " + std::to_string(hour));
    rates[static_cast<std::size_t>(t)] = hit->rate_per_kwh;
  }
  return rates;
}

} // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  json doc = json::parse(in);

  ExperimentConfig config;
  if (doc.contains("quantum_kwh")) config.quantum_kwh = json_to_rational(doc["quantum_kwh"]);
  if (doc.contains("slot_hours")) config.slot_hours = json_to_rational(doc["slot_hours"]);

  if (doc.contains("prices")) {
    const json& prices = doc["prices"];
    if (prices.contains("p_g_per_kwh")) config.p_g_per_kwh = json_to_rational(prices["p_g_per_kwh"]);
    if (prices.contains("peak_price_per_kw"))
      config.peak_price_per_kw = json_to_rational(prices["peak_price_per_kw"]);
    if (prices.contains("p_e_min_per_kwh"))
      config.p_e_min_per_kwh = json_to_rational(prices["p_e_min_per_kwh"]);
    if (prices.contains("tou_bands")) {
      config.tou_bands.clear();
      for (const json& band : prices["tou_bands"]) {
        config.tou_bands.push_back({band.at("start_hour").get<double>(),
                                    band.at("end_hour").get<double>(),
                                    json_to_rational(band.at("rate_per_kwh"))});
      }
    }
  }

  if (doc.contains("trace")) {
    const json& trace = doc["trace"];
    config.demand_csv = trace.value("demand_csv", "");
    config.renewable_csv = trace.value("renewable_csv", "");
    config.price_csv = trace.value("price_csv", "");
  }
  if (doc.contains("synthetic")) {
    const json& synth = doc["synthetic"];
    config.synth.horizon = synth.value("horizon", config.synth.horizon);
    config.synth.base_kwh = synth.value("base_kwh", config.synth.base_kwh);
    config.synth.amplitude_kwh = synth.value("amplitude_kwh", config.synth.amplitude_kwh);
    config.synth.noise_seed = synth.value("seed", config.synth.noise_seed);
    config.synth.wind_fraction = synth.value("wind_fraction", config.synth.wind_fraction);
  }

  if (doc.contains("generator")) {
    const json& gen = doc["generator"];
    config.rho = gen.value("rho", config.rho);
    config.capacity_units = gen.value("capacity_units", config.capacity_units);
    config.ramp_units = gen.value("ramp_units", config.ramp_units);
    config.gamma_target = gen.value("gamma", config.gamma_target);
  }

  if (doc.contains("algorithms"))
    config.algorithms = doc["algorithms"].get<std::vector<std::string>>();
  config.seed = doc.value("seed", config.seed);
  config.red_trials = doc.value("red_trials", config.red_trials);
  config.noise_level = doc.value("noise_level", config.noise_level);

  if (doc.contains("sweep")) {
    const json& sweep = doc["sweep"];
    if (sweep.contains("rho")) config.rho_values = sweep["rho"].get<std::vector<double>>();
    if (sweep.contains("peak_price_per_kw"))
      for (const json& v : sweep["peak_price_per_kw"])
        config.peak_price_values.push_back(json_to_rational(v));
    if (sweep.contains("gamma"))
      config.gamma_values = sweep["gamma"].get<std::vector<std::int64_t>>();
    if (sweep.contains("noise")) config.noise_values = sweep["noise"].get<std::vector<double>>();
  }

  config.output_path = doc.value("output", config.output_path);
  config.format = doc.value("format", config.format);
  config.nrbf_base = doc.value("nrbf_base", config.nrbf_base);
  return config;
}

PreparedInstance prepare_instance(const ExperimentConfig& config) {
  if (config.quantum_kwh <= 0) throw std::invalid_argument("quantum must be positive");
  if (config.noise_level < 0.0 || config.noise_level > 1.0)
    throw std::invalid_argument("noise level must lie in [0, 1]");

  DemandTrace trace;
  PriceModel prices;
  if (!config.demand_csv.empty()) {
    TraceConfig tc;
    tc.quantum_kwh = config.quantum_kwh;
    tc.slot_hours = config.slot_hours;
    tc.p_g_per_kwh = config.p_g_per_kwh;
    tc.peak_price_per_kw = config.peak_price_per_kw;
    tc.p_e_min_per_kwh = config.p_e_min_per_kwh;
    if (config.price_csv.empty()) {
      const auto& bands = config.tou_bands.empty() ? default_tou_bands() : config.tou_bands;
      // The loader cycles this schedule, so build one full day of slots.
      const auto slots_per_day =
          static_cast<std::int64_t>(std::llround(24.0 / to_double(config.slot_hours)));
      tc.default_spot_per_kwh = tou_schedule(bands, slots_per_day, to_double(config.slot_hours));
    }
    std::tie(trace, prices) =
        load_traces(config.demand_csv, config.renewable_csv, config.price_csv, tc);
  } else {
    SynthSpec spec = config.synth;
    spec.slot_hours = to_double(config.slot_hours);
    SynthResult synth = synth_trace(spec);
    std::vector<std::int64_t> quanta(synth.demand_kwh.size());
    for (std::size_t t = 0; t < synth.demand_kwh.size(); ++t) {
      Rational net = synth.demand_kwh[t] - synth.renewable_kwh[t];
      if (net < 0) net = 0;
      quanta[t] = to_int64(ceil_rational(net / config.quantum_kwh));
    }
    trace = DemandTrace(std::move(quanta));
    const auto& bands = config.tou_bands.empty() ? default_tou_bands() : config.tou_bands;
    std::vector<Rational> rates =
        tou_schedule(bands, trace.horizon(), to_double(config.slot_hours));
    std::vector<Rational> spot(rates.size());
    for (std::size_t t = 0; t < rates.size(); ++t) spot[t] = rates[t] * config.quantum_kwh;
    const Rational p_m =
        convert_peak_price(config.peak_price_per_kw, config.slot_hours) * config.quantum_kwh;
    prices = PriceModel(std::move(spot), config.p_g_per_kwh * config.quantum_kwh, p_m,
                        config.p_e_min_per_kwh * config.quantum_kwh, config.slot_hours);
  }

  std::int64_t capacity = config.capacity_units;
  if (capacity < 0) {
    if (config.rho <= 0.0 || config.rho > 1.0)
      throw std::invalid_argument("rho must lie in (0, 1]");
    capacity = static_cast<std::int64_t>(
        std::ceil(config.rho * static_cast<double>(trace.max_demand())));
  }
  std::int64_t ramp = config.ramp_units;
  if (config.gamma_target >= 1)
    ramp = std::max<std::int64_t>(1, (capacity + config.gamma_target - 1) / config.gamma_target);
  if (ramp <= 0) ramp = std::max<std::int64_t>(1, capacity);
  return PreparedInstance{std::move(trace), std::move(prices), GeneratorSpec(capacity, ramp)};
}

namespace {

Schedule grid_only_schedule(const DemandTrace& trace) {
  std::vector<Rational> u(trace.e.size(), Rational(0));
  std::vector<Rational> v(trace.e.size());
  for (std::size_t t = 0; t < trace.e.size(); ++t) v[t] = trace.e[t];
  return Schedule(std::move(u), std::move(v));
}

// Peak-oblivious stand-in: per slot, buy from the cheaper source, capped by
// the generator capacity, ignoring the peak charge entirely.
Schedule greedy_schedule(const DemandTrace& trace, const PriceModel& prices,
                         std::int64_t capacity) {
  std::vector<Rational> u(trace.e.size());
  std::vector<Rational> v(trace.e.size());
  for (std::size_t t = 0; t < trace.e.size(); ++t) {
    if (prices.p_e[t] <= prices.p_g) {
      v[t] = trace.e[t];
    } else {
      const std::int64_t local = std::min(trace.e[t], capacity);
      u[t] = local;
      v[t] = trace.e[t] - local;
    }
  }
  return Schedule(std::move(u), std::move(v));
}

DemandTrace perturb_trace(const DemandTrace& trace, double noise_level, std::uint64_t seed) {
  if (noise_level == 0.0) return trace;
  Rng rng(seed);
  std::vector<std::int64_t> predicted(trace.e.size());
  for (std::size_t t = 0; t < trace.e.size(); ++t) {
    const double truth = static_cast<double>(trace.e[t]);
    const double noisy = truth + rng.normal(0.0, noise_level * truth);
    predicted[t] = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::llround(noisy)));
  }
  return DemandTrace(std::move(predicted));
}

void require_feasible(const Schedule& schedule, const DemandTrace& trace,
                      const GeneratorSpec& gen, bool enforce_ramping, const std::string& name) {
  const auto violations = check_feasibility(schedule, trace, gen, enforce_ramping);
  if (!violations.empty())
    throw std::logic_error("algorithm '" + name + "' produced an infeasible schedule: " +
                           violations.front().message);
}

double ratio_against(const Rational& total, const Rational& offline_total) {
  if (offline_total == 0) return total == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return to_double(total / offline_total);
}

Rational reduction_against(const Rational& total, const Rational& benchmark_total) {
  if (benchmark_total == 0) return Rational(0);
  return Rational(1) - total / benchmark_total;
}

} // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  PreparedInstance instance = prepare_instance(config);
  const DemandTrace& trace = instance.trace;
  const PriceModel& prices = instance.prices;
  const GeneratorSpec& gen = instance.gen;
  const bool ramped = gen.gamma() > 1;

  std::vector<std::string> wanted = config.algorithms.empty() ? kCanonicalOrder : config.algorithms;
  for (const std::string& name : wanted) {
    if (std::find(kCanonicalOrder.begin(), kCanonicalOrder.end(), name) == kCanonicalOrder.end())
      throw std::invalid_argument("unknown algorithm '" + name + "'");
  }
  const auto enabled = [&](const std::string& name) {
    return std::find(wanted.begin(), wanted.end(), name) != wanted.end();
  };

  const Schedule benchmark = grid_only_schedule(trace);
  const Rational benchmark_total = evaluate_cost(benchmark, prices).total;

  const Schedule offline = ramped ? offline_paed_dp(trace, prices, gen)
                                  : offline_fspaed(trace, prices, gen.capacity);
  require_feasible(offline, trace, gen, ramped, "offline");
  const Rational offline_total = evaluate_cost(offline, prices).total;

  std::vector<ResultRow> rows;
  const auto push_row = [&](const std::string& name, const CostBreakdown& cost) {
    rows.push_back(ResultRow{name, cost, reduction_against(cost.total, benchmark_total),
                             ratio_against(cost.total, offline_total)});
  };

  for (const std::string& name : kCanonicalOrder) {
    if (!enabled(name)) continue;
    if (name == "grid_only") {
      require_feasible(benchmark, trace, gen, true, name);
      push_row(name, evaluate_cost(benchmark, prices));
    } else if (name == "greedy") {
      Schedule schedule = greedy_schedule(trace, prices, gen.capacity);
      require_feasible(schedule, trace, gen, false, name);
      push_row(name, evaluate_cost(schedule, prices));
    } else if (name == "bed") {
      Schedule schedule = run_bed(trace, prices, gen.capacity);
      require_feasible(schedule, trace, gen, false, name);
      push_row(name, evaluate_cost(schedule, prices));
    } else if (name == "red") {
      if (config.red_trials < 1) throw std::invalid_argument("red_trials must be positive");
      CostBreakdown mean;
      for (int trial = 0; trial < config.red_trials; ++trial) {
        Schedule schedule =
            run_red(trace, prices, gen.capacity, mix_seed(config.seed, static_cast<std::uint64_t>(trial)));
        require_feasible(schedule, trace, gen, false, name);
        const CostBreakdown cost = evaluate_cost(schedule, prices);
        mean.grid_volume += cost.grid_volume;
        mean.peak_charge += cost.peak_charge;
        mean.local_cost += cost.local_cost;
        mean.total += cost.total;
      }
      const Rational trials(config.red_trials);
      mean.grid_volume /= trials;
      mean.peak_charge /= trials;
      mean.local_cost /= trials;
      mean.total /= trials;
      push_row(name, mean);
    } else if (name == "nrbf") {
      const BaseAlgorithm base = config.nrbf_base == "red"
                                     ? BaseAlgorithm::red(mix_seed(config.seed, 0x4e52ull))
                                     : BaseAlgorithm::bed();
      const DemandTrace predicted =
          perturb_trace(trace, config.noise_level, mix_seed(config.seed, 0x9eedull));
      Schedule schedule = run_nrbf_predicted(trace, predicted, prices, gen, base);
      require_feasible(schedule, trace, gen, true, name);
      push_row(name, evaluate_cost(schedule, prices));
    } else if (name == "offline") {
      push_row(name, evaluate_cost(offline, prices));
    }
  }
  return rows;
}

namespace {

std::string format_ratio(double ratio) {
  if (!std::isfinite(ratio)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", ratio);
  return buf;
}

void emit_results_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "algorithm,grid_volume,peak_charge,local_cost,total,reduction,ratio\n";
  for (const ResultRow& row : rows) {
    out << row.algorithm << ',' << format_fixed(row.cost.grid_volume, 6) << ','
        << format_fixed(row.cost.peak_charge, 6) << ',' << format_fixed(row.cost.local_cost, 6)
        << ',' << format_fixed(row.cost.total, 6) << ',' << format_fixed(row.reduction, 6) << ','
        << format_ratio(row.ratio) << '\n';
  }
}

void emit_results_json(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ResultRow& row = rows[i];
    out << "  {\"algorithm\": \"" << row.algorithm << "\""
        << ", \"grid_volume\": " << format_fixed(row.cost.grid_volume, 6)
        << ", \"peak_charge\": " << format_fixed(row.cost.peak_charge, 6)
        << ", \"local_cost\": " << format_fixed(row.cost.local_cost, 6)
        << ", \"total\": " << format_fixed(row.cost.total, 6)
        << ", \"reduction\": " << format_fixed(row.reduction, 6) << ", \"ratio\": "
        << (std::isfinite(row.ratio) ? format_ratio(row.ratio) : std::string("null")) << "}"
        << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  out << "]\n";
}

} // namespace

void emit_results(const std::vector<ResultRow>& rows, const std::string& path,
                  const std::string& format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  if (format == "csv")
    emit_results_csv(rows, out);
  else if (format == "json")
    emit_results_json(rows, out);
  else
    throw std::invalid_argument("unknown output format '" + format + "'");
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<ResultRow> parse_results_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) throw std::runtime_error(path + ": malformed row '" + line + "'");
    ResultRow row;
    row.algorithm = fields[0];
    row.cost.grid_volume = rational_from_decimal(fields[1]);
    row.cost.peak_charge = rational_from_decimal(fields[2]);
    row.cost.local_cost = rational_from_decimal(fields[3]);
    row.cost.total = rational_from_decimal(fields[4]);
    row.reduction = rational_from_decimal(fields[5]);
    row.ratio = fields[6] == "inf" ? std::numeric_limits<double>::infinity()
                                   : std::stod(fields[6]);
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* sweep_param_name(SweepParam param) {
  switch (param) {
    case SweepParam::Rho: return "rho";
    case SweepParam::PeakPrice: return "peak_price_per_kw";
    case SweepParam::Gamma: return "gamma";
    case SweepParam::Noise: return "noise";
  }
  return "unknown";
}

std::vector<SweepPoint> run_sweep(const ExperimentConfig& config, SweepParam param) {
  std::vector<SweepPoint> points;
  const auto run_with = [&](double value, ExperimentConfig modified) {
    points.push_back(SweepPoint{value, run_experiment(modified)});
  };
  switch (param) {
    case SweepParam::Rho: {
      std::vector<double> values = config.rho_values;
      if (values.empty())
        for (int i = 2; i <= 10; ++i) values.push_back(static_cast<double>(i) / 10.0);
      for (double rho : values) {
        ExperimentConfig modified = config;
        modified.capacity_units = -1;
        modified.rho = rho;
        run_with(rho, std::move(modified));
      }
      break;
    }
    case SweepParam::PeakPrice: {
      if (config.peak_price_values.empty())
        throw std::invalid_argument("peak price sweep needs sweep.peak_price_per_kw values");
      for (const Rational& price : config.peak_price_values) {
        ExperimentConfig modified = config;
        modified.peak_price_per_kw = price;
        run_with(to_double(price), std::move(modified));
      }
      break;
    }
    case SweepParam::Gamma: {
      std::vector<std::int64_t> values = config.gamma_values;
      if (values.empty()) values = {1, 2, 3, 4, 5};
      for (std::int64_t gamma : values) {
        ExperimentConfig modified = config;
        modified.gamma_target = gamma;
        run_with(static_cast<double>(gamma), std::move(modified));
      }
      break;
    }
    case SweepParam::Noise: {
      std::vector<double> values = config.noise_values;
      if (values.empty()) values = {0.0, 0.02, 0.04, 0.06, 0.08, 0.10};
      for (double noise : values) {
        ExperimentConfig modified = config;
        modified.noise_level = noise;
        run_with(noise, std::move(modified));
      }
      break;
    }
  }
  return points;
}

void emit_sweep_csv(const std::vector<SweepPoint>& points, const std::string& param_name,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "param,value,algorithm,grid_volume,peak_charge,local_cost,total,reduction,ratio\n";
  for (const SweepPoint& point : points) {
    char value_buf[64];
    std::snprintf(value_buf, sizeof(value_buf), "%.6f", point.value);
    for (const ResultRow& row : point.rows) {
      out << param_name << ',' << value_buf << ',' << row.algorithm << ','
          << format_fixed(row.cost.grid_volume, 6) << ',' << format_fixed(row.cost.peak_charge, 6)
          << ',' << format_fixed(row.cost.local_cost, 6) << ',' << format_fixed(row.cost.total, 6)
          << ',' << format_fixed(row.reduction, 6) << ',' << format_ratio(row.ratio) << '\n';
    }
  }
  if (!out) throw std::runtime_error(path + ": write failed");
}

} // namespace paed
