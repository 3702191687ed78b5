#ifndef PAED_SYNTH_HPP
#define PAED_SYNTH_HPP

#include "paed/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace paed {

// Desk-scale synthetic stand-in for a metered campus trace: a daily sinusoid
// with seeded Gaussian jitter, plus a wind-like renewable series. Identical
// specs produce identical series; see the README for the exact formulas.
struct SynthSpec {
  std::int64_t horizon = 2880;   // slots; one month of 15-minute slots
  double base_kwh = 2500.0;      // mean demand per slot
  double amplitude_kwh = 1500.0; // daily swing
  std::uint64_t noise_seed = 1;
  double wind_fraction = 0.0;    // renewable scale relative to base
  double slot_hours = 0.25;
};

struct SynthResult {
  std::vector<Rational> demand_kwh;
  std::vector<Rational> renewable_kwh;
};

SynthResult synth_trace(const SynthSpec& spec);

// Writes a series as a timestamp,value CSV with integer slot indices.
void write_series_csv(const std::string& path, const std::vector<Rational>& values,
                      const std::string& value_header);

} // namespace paed

#endif
