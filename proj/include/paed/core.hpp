#ifndef PAED_CORE_HPP
#define PAED_CORE_HPP

#include "paed/types.hpp"

#include <string>
#include <vector>

namespace paed {

// Total operating cost of a schedule over one billing cycle: time-of-use
// volume charge, peak charge on the largest single-slot grid draw, and
// local generation cost.
CostBreakdown evaluate_cost(const Schedule& schedule, const PriceModel& prices);

// Converts a peak price quoted in $/KW into the $/KWh figure used by the
// cost model, given the slot length in hours.
Rational convert_peak_price(const Rational& peak_price_per_kw, const Rational& slot_hours);

enum class ViolationKind {
  DemandShortfall,
  CapacityExceeded,
  RampUpExceeded,
  RampDownExceeded,
};

struct Violation {
  ViolationKind kind;
  std::int64_t slot; // 1-based; for ramp violations, the from-slot of the transition
  std::string message;
};

// Checks demand coverage and capacity per slot, plus consecutive-slot ramp
// limits when enforce_ramping is set. Violations are data, not errors.
std::vector<Violation> check_feasibility(const Schedule& schedule, const DemandTrace& trace,
                                         const GeneratorSpec& gen, bool enforce_ramping);

// Splits an integer trace into max_t e(t) stacked binary layers; layer k
// (1-based) is active at t iff e(t) >= k. Summing layers reconstructs e.
std::vector<DemandTrace> layer_demand(const DemandTrace& trace);

} // namespace paed

#endif
