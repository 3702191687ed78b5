#ifndef PAED_TYPES_HPP
#define PAED_TYPES_HPP

#include "paed/rational.hpp"

#include <cstdint>
#include <vector>

namespace paed {

// Net electricity demand per slot, in integer demand quanta.
struct DemandTrace {
  std::vector<std::int64_t> e;

  DemandTrace() = default;
  explicit DemandTrace(std::vector<std::int64_t> demand);

  std::int64_t horizon() const { return static_cast<std::int64_t>(e.size()); }
  std::int64_t at(std::int64_t t) const { return e[static_cast<std::size_t>(t)]; }
  std::int64_t max_demand() const;
  bool is_binary() const;
};

// Tariff and generation prices, all in $/quantum. `p_e_min` is the declared
// spot-price floor of the model (it parameterizes beta), not the minimum of
// the realized series.
struct PriceModel {
  std::vector<Rational> p_e;
  Rational p_g;
  Rational p_m;
  Rational p_e_min;
  Rational delta_hours{1};

  PriceModel() = default;
  PriceModel(std::vector<Rational> spot, Rational local, Rational peak,
             Rational spot_floor, Rational slot_hours = Rational(1));

  std::int64_t horizon() const { return static_cast<std::int64_t>(p_e.size()); }
  const Rational& spot(std::int64_t t) const { return p_e[static_cast<std::size_t>(t)]; }
  Rational beta() const { return p_e_min / p_g; }

  // Soft checks: one message per realized spot price below the declared floor.
  std::vector<std::string> validation_warnings() const;
};

// Local generator fleet: capacity and symmetric-by-default ramp limits, in
// quanta and quanta/slot.
struct GeneratorSpec {
  std::int64_t capacity = 0;
  std::int64_t ramp_up = 0;
  std::int64_t ramp_down = 0;

  GeneratorSpec() = default;
  GeneratorSpec(std::int64_t cap, std::int64_t ramp);
  GeneratorSpec(std::int64_t cap, std::int64_t r_up, std::int64_t r_down);

  bool symmetric() const { return ramp_up == ramp_down; }
  // Slots to ramp from zero to full capacity; 1 when ramping never binds.
  std::int64_t gamma() const;
  // Lookahead window used by the ramp-neutralizing algorithm.
  std::int64_t lookahead() const { return gamma() - 1; }
};

// Paired per-slot output levels: u from the local generator, v from the grid.
struct Schedule {
  std::vector<Rational> u;
  std::vector<Rational> v;

  Schedule() = default;
  Schedule(std::vector<Rational> local, std::vector<Rational> grid);

  std::int64_t horizon() const { return static_cast<std::int64_t>(u.size()); }
  bool operator==(const Schedule& other) const = default;
};

struct CostBreakdown {
  Rational grid_volume;
  Rational peak_charge;
  Rational local_cost;
  Rational total;

  bool operator==(const CostBreakdown& other) const = default;
};

} // namespace paed

#endif
