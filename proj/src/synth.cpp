#include "paed/synth.hpp"

#include "paed/rng.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace paed {

namespace {

// Values are frozen to 3 decimals before turning rational, so the generated
// series is exactly reproducible from the spec alone.
Rational freeze_kwh(double x) {
  if (x < 0) x = 0;
  const auto milli = static_cast<long long>(std::llround(x * 1000.0));
  return Rational(milli, 1000);
}

} // namespace

SynthResult synth_trace(const SynthSpec& spec) {
  if (spec.horizon < 1) throw std::invalid_argument("horizon must be positive");
  Rng rng(spec.noise_seed);
  SynthResult result;
  result.demand_kwh.reserve(static_cast<std::size_t>(spec.horizon));
  result.renewable_kwh.reserve(static_cast<std::size_t>(spec.horizon));

  const double two_pi = 2.0 * M_PI;
  for (std::int64_t t = 0; t < spec.horizon; ++t) {
    const double hour_of_day = std::fmod(static_cast<double>(t) * spec.slot_hours, 24.0);
    const double phase = two_pi * hour_of_day / 24.0;
    // Demand peaks mid-afternoon; noise scales with the daily swing so a flat
    // spec stays exactly flat.
    const double demand = spec.base_kwh + spec.amplitude_kwh * std::sin(phase - two_pi / 4.0) +
                          rng.normal(0.0, 0.1 * spec.amplitude_kwh);
    const double wind_shape = 0.5 + 0.5 * std::sin(phase + 2.0);
    const double renewable =
        spec.wind_fraction == 0.0
            ? 0.0
            : spec.wind_fraction * spec.base_kwh *
                  (wind_shape + rng.normal(0.0, 0.1)) ;
    result.demand_kwh.push_back(freeze_kwh(demand));
    result.renewable_kwh.push_back(freeze_kwh(renewable));
  }
  return result;
}

void write_series_csv(const std::string& path, const std::vector<Rational>& values,
                      const std::string& value_header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << "timestamp," << value_header << "\n";
  for (std::size_t t = 0; t < values.size(); ++t)
    out << t << "," << format_fixed(values[t], 3) << "\n";
  if (!out) throw std::runtime_error(path + ": write failed");
}

} // namespace paed
