#ifndef PAED_ONLINE_FAST_HPP
#define PAED_ONLINE_FAST_HPP

#include "paed/types.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace paed {

// Switching threshold of the rent-or-buy rule, in units of the peak price.
// An empty value means "never switch".
class Threshold {
 public:
  static Threshold never() { return Threshold(std::nullopt); }
  static Threshold finite(Rational value) { return Threshold(std::move(value)); }

  bool is_never() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }
  bool operator==(const Threshold& other) const = default;

 private:
  explicit Threshold(std::optional<Rational> v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

// Per-layer run state: the accumulated local-generation deficit and whether
// the layer has switched to the grid for the rest of the cycle.
struct LayerState {
  Rational zeta;
  bool committed_to_grid = false;
  Threshold threshold = Threshold::finite(1);
};

struct OnlineDecision {
  Rational u_t;
  Rational v_t;
};

// One slot of the threshold rule on a binary layer: serve from the grid once
// committed; otherwise accumulate the deficit, then commit as soon as it
// reaches threshold * p_m.
std::pair<LayerState, OnlineDecision> threshold_step(LayerState state, std::int64_t e_t,
                                                     const Rational& p_e_t,
                                                     const PriceModel& prices);

// Deterministic break-even rule (threshold 1) on a binary trace.
Schedule run_bed_k(const DemandTrace& binary_trace, const PriceModel& prices);

// Draws the randomized switching threshold: mass beta/(e-1+beta) on "never",
// density e^s/(e-1+beta) on [0,1] via inverse CDF. Deterministic per seed.
Threshold sample_threshold(std::uint64_t seed, double beta);

// Randomized rule on a binary trace: one threshold drawn up front, then the
// threshold run.
Schedule run_red_k(const DemandTrace& binary_trace, const PriceModel& prices,
                   std::uint64_t seed);

// Layered run with per-layer schedules kept for analysis and tests.
struct LayeredRun {
  Schedule total;
  std::vector<Schedule> layers;
};

// Shared engine behind the capacity-aware algorithms: every layer runs the
// threshold rule with the same threshold; layers at or below e(t)-C are
// forced to the grid (and stay there).
LayeredRun run_layered(const DemandTrace& trace, const PriceModel& prices,
                       std::int64_t capacity, const Threshold& threshold);

// Deterministic capacity-aware dispatch (threshold 1 on every layer).
Schedule run_bed(const DemandTrace& trace, const PriceModel& prices, std::int64_t capacity);

// Randomized capacity-aware dispatch: a single drawn threshold shared by all
// layers.
Schedule run_red(const DemandTrace& trace, const PriceModel& prices, std::int64_t capacity,
                 std::uint64_t seed);

} // namespace paed

#endif
