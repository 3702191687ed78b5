#include "paed/online_ramp.hpp"

#include "paed/online_fast.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace paed {

std::vector<Rational> ramp_smooth(const std::vector<Rational>& relaxed_u, std::int64_t ramp,
                                  std::int64_t capacity, std::int64_t lookahead) {
  const auto horizon = static_cast<std::int64_t>(relaxed_u.size());
  std::vector<Rational> smoothed(relaxed_u.size());
  Rational previous = 0;
  for (std::int64_t t = 0; t < horizon; ++t) {
    Rational level = previous - ramp;
    for (std::int64_t i = 0; i <= lookahead && t + i < horizon; ++i) {
      // Slots beyond the horizon carry zero demand and never raise the max.
      level = std::max(level, relaxed_u[static_cast<std::size_t>(t + i)] - i * ramp);
    }
    if (level < 0) level = 0;
    assert(level <= capacity); // base schedules never exceed capacity
    if (level > capacity) level = capacity;
    smoothed[static_cast<std::size_t>(t)] = level;
    previous = smoothed[static_cast<std::size_t>(t)];
  }
  return smoothed;
}

Schedule run_nrbf_predicted(const DemandTrace& realized, const DemandTrace& predicted,
                            const PriceModel& prices, const GeneratorSpec& gen,
                            const BaseAlgorithm& base) {
  if (realized.horizon() != predicted.horizon())
    throw std::invalid_argument("realized and predicted traces differ in length");
  if (!gen.symmetric())
    throw std::invalid_argument("lookahead guarantee requires symmetric ramp limits");

  Schedule relaxed = base.kind == BaseAlgorithm::Kind::Bed
                         ? run_bed(predicted, prices, gen.capacity)
                         : run_red(predicted, prices, gen.capacity, base.seed);

  std::vector<Rational> u =
      ramp_smooth(relaxed.u, gen.ramp_up, gen.capacity, gen.lookahead());
  std::vector<Rational> v(u.size());
  for (std::size_t t = 0; t < u.size(); ++t) {
    Rational uncovered = realized.e[t] - u[t];
    v[t] = uncovered > 0 ? uncovered : Rational(0);
  }
  return Schedule(std::move(u), std::move(v));
}

Schedule run_nrbf(const DemandTrace& trace, const PriceModel& prices, const GeneratorSpec& gen,
                  const BaseAlgorithm& base) {
  return run_nrbf_predicted(trace, trace, prices, gen, base);
}

bool check_ramp_feasible(const Schedule& schedule, const GeneratorSpec& gen) {
  for (std::size_t t = 0; t + 1 < schedule.u.size(); ++t) {
    const Rational diff = schedule.u[t + 1] - schedule.u[t];
    if (diff > gen.ramp_up || -diff > gen.ramp_down) return false;
  }
  return true;
}

Rational ramping_lower_bound(const GeneratorSpec& gen, const PriceModel& prices) {
  if (!gen.symmetric())
    throw std::domain_error("lower bound stated for symmetric ramp limits");
  if (gen.capacity < gen.ramp_up)
    throw std::domain_error("lower bound degenerate for C < R");
  const std::int64_t gamma = gen.gamma();
  const Rational numerator_value =
      prices.p_m * (gen.capacity - gen.ramp_up) + prices.p_g * gen.ramp_up;
  const Rational denominator_value =
      prices.p_g * (gen.ramp_up * gamma * (gamma - 1) + gen.capacity);
  return numerator_value / denominator_value;
}

} // namespace paed
