#include "paed/online_fast.hpp"

#include "paed/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace paed {

std::pair<LayerState, OnlineDecision> threshold_step(LayerState state, std::int64_t e_t,
                                                     const Rational& p_e_t,
                                                     const PriceModel& prices) {
  if (e_t != 0 && e_t != 1) throw std::domain_error("layer demand must be 0 or 1");
  if (state.committed_to_grid) return {std::move(state), OnlineDecision{0, e_t}};

  state.zeta += (prices.p_g - p_e_t) * e_t;
  const bool switch_now =
      !state.threshold.is_never() && state.zeta >= state.threshold.value() * prices.p_m;
  if (switch_now) {
    state.committed_to_grid = true;
    return {std::move(state), OnlineDecision{0, e_t}};
  }
  return {std::move(state), OnlineDecision{e_t, 0}};
}

namespace {

Schedule run_threshold_k(const DemandTrace& binary_trace, const PriceModel& prices,
                         const Threshold& threshold) {
  if (binary_trace.horizon() != prices.horizon())
    throw std::invalid_argument("trace and price series lengths differ");
  LayerState state{0, false, threshold};
  std::vector<Rational> u(binary_trace.e.size());
  std::vector<Rational> v(binary_trace.e.size());
  for (std::int64_t t = 0; t < binary_trace.horizon(); ++t) {
    auto [next, decision] = threshold_step(std::move(state), binary_trace.at(t),
                                           prices.spot(t), prices);
    state = std::move(next);
    u[static_cast<std::size_t>(t)] = decision.u_t;
    v[static_cast<std::size_t>(t)] = decision.v_t;
  }
  return Schedule(std::move(u), std::move(v));
}

} // namespace

Schedule run_bed_k(const DemandTrace& binary_trace, const PriceModel& prices) {
  return run_threshold_k(binary_trace, prices, Threshold::finite(1));
}

Threshold sample_threshold(std::uint64_t seed, double beta) {
  if (beta < 0.0 || beta > 1.0) throw std::domain_error("beta must lie in [0, 1]");
  Rng rng(seed);
  const double normalizer = std::exp(1.0) - 1.0 + beta;
  if (rng.uniform01() < beta / normalizer) return Threshold::never();
  const double s = std::log1p(rng.uniform01() * (std::exp(1.0) - 1.0));
  // Exact dyadic capture of the drawn double keeps the run reproducible in
  // rational arithmetic.
  return Threshold::finite(Rational(s));
}

Schedule run_red_k(const DemandTrace& binary_trace, const PriceModel& prices,
                   std::uint64_t seed) {
  const Threshold threshold = sample_threshold(seed, to_double(prices.beta()));
  return run_threshold_k(binary_trace, prices, threshold);
}

LayeredRun run_layered(const DemandTrace& trace, const PriceModel& prices,
                       std::int64_t capacity, const Threshold& threshold) {
  if (trace.horizon() != prices.horizon())
    throw std::invalid_argument("trace and price series lengths differ");
  if (capacity < 0) throw std::invalid_argument("capacity must be nonnegative");

  const std::int64_t layer_count = trace.max_demand();
  const auto horizon = static_cast<std::size_t>(trace.horizon());
  std::vector<LayerState> states(static_cast<std::size_t>(layer_count),
                                 LayerState{0, false, threshold});

  LayeredRun run;
  run.total.u.assign(horizon, Rational(0));
  run.total.v.assign(horizon, Rational(0));
  run.layers.reserve(states.size());
  for (std::int64_t k = 0; k < layer_count; ++k) {
    Schedule layer;
    layer.u.assign(horizon, Rational(0));
    layer.v.assign(horizon, Rational(0));
    run.layers.push_back(std::move(layer));
  }

  for (std::int64_t t = 0; t < trace.horizon(); ++t) {
    const std::int64_t demand = trace.at(t);
    const std::int64_t forced = std::max<std::int64_t>(0, demand - capacity);
    for (std::int64_t k = 1; k <= layer_count; ++k) {
      auto& state = states[static_cast<std::size_t>(k - 1)];
      const std::int64_t e_k = demand >= k ? 1 : 0;
      OnlineDecision decision{0, 0};
      if (k <= forced) {
        // Below the capacity threshold the grid must serve the layer; it
        // keeps serving it for the rest of the cycle.
        state.committed_to_grid = true;
        decision = OnlineDecision{0, e_k};
      } else {
        auto [next, d] = threshold_step(std::move(state), e_k, prices.spot(t), prices);
        state = std::move(next);
        decision = d;
      }
      auto& layer = run.layers[static_cast<std::size_t>(k - 1)];
      const auto i = static_cast<std::size_t>(t);
      layer.u[i] = decision.u_t;
      layer.v[i] = decision.v_t;
      run.total.u[i] += decision.u_t;
      run.total.v[i] += decision.v_t;
    }
  }
  return run;
}

Schedule run_bed(const DemandTrace& trace, const PriceModel& prices, std::int64_t capacity) {
  return run_layered(trace, prices, capacity, Threshold::finite(1)).total;
}

Schedule run_red(const DemandTrace& trace, const PriceModel& prices, std::int64_t capacity,
                 std::uint64_t seed) {
  const Threshold threshold = sample_threshold(seed, to_double(prices.beta()));
  return run_layered(trace, prices, capacity, threshold).total;
}

} // namespace paed
