#ifndef PAED_ONLINE_RAMP_HPP
#define PAED_ONLINE_RAMP_HPP

#include "paed/types.hpp"

#include <cstdint>

namespace paed {

// Which capacity-aware algorithm produces the relaxed (ramp-free) schedule.
struct BaseAlgorithm {
  enum class Kind { Bed, Red };
  Kind kind = Kind::Bed;
  std::uint64_t seed = 0;

  static BaseAlgorithm bed() { return {Kind::Bed, 0}; }
  static BaseAlgorithm red(std::uint64_t seed) { return {Kind::Red, seed}; }
};

// Ramp-feasible smoothing of a relaxed generator series: each level is
// pre-ramped early enough that every upcoming target within the lookahead
// window stays reachable, and decays by at most R per slot afterwards.
std::vector<Rational> ramp_smooth(const std::vector<Rational>& relaxed_u, std::int64_t ramp,
                                  std::int64_t capacity, std::int64_t lookahead);

// Lookahead algorithm for slow-responding generators: runs the relaxed base
// algorithm, smooths its generator series into a ramp-feasible one, and buys
// any uncovered demand from the grid.
Schedule run_nrbf(const DemandTrace& trace, const PriceModel& prices, const GeneratorSpec& gen,
                  const BaseAlgorithm& base);

// Same pipeline with the base algorithm fed a predicted trace (e.g. with
// injected forecast noise) while uncovered realized demand is still bought
// from the grid.
Schedule run_nrbf_predicted(const DemandTrace& realized, const DemandTrace& predicted,
                            const PriceModel& prices, const GeneratorSpec& gen,
                            const BaseAlgorithm& base);

// True iff consecutive generator levels stay within the ramp limits.
bool check_ramp_feasible(const Schedule& schedule, const GeneratorSpec& gen);

// Closed-form competitive-ratio floor for any no-lookahead online algorithm
// under ramping: (p_m(C-R) + p_g R) / (p_g (R*Gamma*(Gamma-1) + C)).
Rational ramping_lower_bound(const GeneratorSpec& gen, const PriceModel& prices);

} // namespace paed

#endif
