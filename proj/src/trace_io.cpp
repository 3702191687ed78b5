#include "paed/trace_io.hpp"

#include "paed/core.hpp"

#include <fstream>
#include <stdexcept>

namespace paed {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

} // namespace

CsvSeries read_timestamp_value_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  CsvSeries series;
  std::string line;
  std::size_t line_number = 0;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header row");
  ++line_number;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": expected timestamp,value");
    const std::string stamp = trim(line.substr(0, comma));
    std::string rest = line.substr(comma + 1);
    const auto next_comma = rest.find(',');
    if (next_comma != std::string::npos) rest = rest.substr(0, next_comma);
    const std::string value_text = trim(rest);
    Rational value;
    try {
      value = rational_from_decimal(value_text);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": unparseable value '" + value_text + "'");
    }
    series.timestamps.push_back(stamp);
    series.values.push_back(std::move(value));
  }
  return series;
}

namespace {

void check_alignment(const CsvSeries& reference, const CsvSeries& other,
                     const std::string& ref_name, const std::string& other_name) {
  if (reference.timestamps.size() != other.timestamps.size())
    throw std::runtime_error(other_name + ": " + std::to_string(other.timestamps.size()) +
                             " rows, but " + ref_name + " has " +
                             std::to_string(reference.timestamps.size()));
  for (std::size_t i = 0; i < reference.timestamps.size(); ++i) {
    if (reference.timestamps[i] != other.timestamps[i])
      throw std::runtime_error(other_name + ": timestamp '" + other.timestamps[i] +
                               "' does not align with " + ref_name + " at '" +
                               reference.timestamps[i] + "'");
  }
}

} // namespace

std::pair<DemandTrace, PriceModel> load_traces(const std::string& demand_csv,
                                               const std::string& renewable_csv,
                                               const std::string& price_csv,
                                               const TraceConfig& config) {
  if (config.quantum_kwh <= 0) throw std::invalid_argument("quantum must be positive");
  CsvSeries demand = read_timestamp_value_csv(demand_csv);
  const std::size_t horizon = demand.values.size();

  CsvSeries renewable;
  if (!renewable_csv.empty()) {
    renewable = read_timestamp_value_csv(renewable_csv);
    check_alignment(demand, renewable, demand_csv, renewable_csv);
  }

  std::vector<std::int64_t> quanta(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    Rational net = demand.values[t];
    if (!renewable.values.empty()) net -= renewable.values[t];
    if (net < 0) net = 0;
    quanta[t] = to_int64(ceil_rational(net / config.quantum_kwh));
  }

  std::vector<Rational> spot(horizon);
  if (!price_csv.empty()) {
    CsvSeries prices = read_timestamp_value_csv(price_csv);
    check_alignment(demand, prices, demand_csv, price_csv);
    for (std::size_t t = 0; t < horizon; ++t) spot[t] = prices.values[t] * config.quantum_kwh;
  } else if (!config.default_spot_per_kwh.empty()) {
    for (std::size_t t = 0; t < horizon; ++t)
      spot[t] = config.default_spot_per_kwh[t % config.default_spot_per_kwh.size()] *
                config.quantum_kwh;
  } else {
    throw std::invalid_argument("no price file and no default spot schedule configured");
  }

  const Rational p_m =
      convert_peak_price(config.peak_price_per_kw, config.slot_hours) * config.quantum_kwh;
  PriceModel model(std::move(spot), config.p_g_per_kwh * config.quantum_kwh, p_m,
                   config.p_e_min_per_kwh * config.quantum_kwh, config.slot_hours);
  return {DemandTrace(std::move(quanta)), std::move(model)};
}

} // namespace paed
