#include "paed/offline.hpp"

#include "paed/core.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace paed {

namespace {

void require_binary(const DemandTrace& trace) {
  if (!trace.is_binary()) throw std::domain_error("trace must be binary");
}

Rational accumulated_deficit(const DemandTrace& trace, const PriceModel& prices) {
  Rational deficit = 0;
  for (std::int64_t t = 0; t < trace.horizon(); ++t) {
    if (trace.at(t) != 0) deficit += prices.p_g - prices.spot(t);
  }
  return deficit;
}

// Peak-cap candidate: grid serves min(e, cap) in every slot, the local
// generator covers the rest. Requires cap >= max e - C.
Schedule schedule_for_peak_cap(const DemandTrace& trace, std::int64_t cap) {
  std::vector<Rational> u(trace.e.size());
  std::vector<Rational> v(trace.e.size());
  for (std::size_t t = 0; t < trace.e.size(); ++t) {
    const std::int64_t grid = std::min(trace.e[t], cap);
    v[t] = grid;
    u[t] = trace.e[t] - grid;
  }
  return Schedule(std::move(u), std::move(v));
}

} // namespace

SigmaValue compute_sigma(const DemandTrace& binary_trace, const PriceModel& prices) {
  require_binary(binary_trace);
  if (binary_trace.horizon() != prices.horizon())
    throw std::invalid_argument("trace and price series lengths differ");
  if (prices.p_m == 0) throw std::domain_error("sigma undefined for zero peak price");
  return SigmaValue{accumulated_deficit(binary_trace, prices) / prices.p_m};
}

Schedule offline_fspaed_k(const DemandTrace& binary_trace, const PriceModel& prices) {
  require_binary(binary_trace);
  if (binary_trace.horizon() != prices.horizon())
    throw std::invalid_argument("trace and price series lengths differ");
  // sigma > 1 without dividing by p_m, so p_m = 0 degenerates to all-grid.
  const bool all_grid = accumulated_deficit(binary_trace, prices) > prices.p_m;
  std::vector<Rational> u(binary_trace.e.size());
  std::vector<Rational> v(binary_trace.e.size());
  for (std::size_t t = 0; t < binary_trace.e.size(); ++t) {
    if (all_grid)
      v[t] = binary_trace.e[t];
    else
      u[t] = binary_trace.e[t];
  }
  return Schedule(std::move(u), std::move(v));
}

Schedule brute_force_fspaed_k(const DemandTrace& binary_trace, const PriceModel& prices) {
  require_binary(binary_trace);
  const std::int64_t horizon = binary_trace.horizon();
  if (horizon > 20) throw std::length_error("brute force limited to 20 slots");
  if (horizon != prices.horizon())
    throw std::invalid_argument("trace and price series lengths differ");

  std::optional<CostBreakdown> best_cost;
  Schedule best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << horizon); ++mask) {
    std::vector<Rational> u(static_cast<std::size_t>(horizon));
    std::vector<Rational> v(static_cast<std::size_t>(horizon));
    bool feasible = true;
    for (std::int64_t t = 0; t < horizon && feasible; ++t) {
      const std::int64_t grid = (mask >> t) & 1u;
      if (grid > binary_trace.at(t)) {
        feasible = false;
        break;
      }
      v[static_cast<std::size_t>(t)] = grid;
      u[static_cast<std::size_t>(t)] = binary_trace.at(t) - grid;
    }
    if (!feasible) continue;
    Schedule candidate(std::move(u), std::move(v));
    CostBreakdown cost = evaluate_cost(candidate, prices);
    const bool better =
        !best_cost || cost.total < best_cost->total ||
        (cost.total == best_cost->total &&
         std::lexicographical_compare(candidate.v.begin(), candidate.v.end(), best.v.begin(),
                                      best.v.end()));
    if (better) {
      best_cost = cost;
      best = std::move(candidate);
    }
  }
  return best;
}

Schedule offline_fspaed(const DemandTrace& trace, const PriceModel& prices,
                        std::int64_t capacity) {
  if (capacity < 0) throw std::invalid_argument("capacity must be nonnegative");
  if (trace.horizon() != prices.horizon())
    throw std::invalid_argument("trace and price series lengths differ");
  const std::int64_t max_e = trace.max_demand();
  const std::int64_t cap_low = std::max<std::int64_t>(0, max_e - capacity);

  std::optional<Rational> best_total;
  Schedule best;
  for (std::int64_t cap = cap_low; cap <= max_e; ++cap) {
    Schedule candidate = schedule_for_peak_cap(trace, cap);
    Rational total = evaluate_cost(candidate, prices).total;
    if (!best_total || total < *best_total) {
      best_total = total;
      best = std::move(candidate);
    }
  }
  assert(best_total.has_value());
  return best;
}

Schedule offline_paed_dp(const DemandTrace& trace, const PriceModel& prices,
                         const GeneratorSpec& gen, const PaedDpOptions& options) {
  if (trace.horizon() != prices.horizon())
    throw std::invalid_argument("trace and price series lengths differ");
  const std::int64_t horizon = trace.horizon();
  if (horizon == 0) return Schedule();
  const std::int64_t cap_units = gen.capacity;
  const std::int64_t max_e = trace.max_demand();

  // Slot cost of running the generator at level u: local cost plus the spot
  // cost of the uncovered remainder. Independent of the peak cap.
  std::vector<std::vector<Rational>> slot_cost(static_cast<std::size_t>(horizon));
  for (std::int64_t t = 0; t < horizon; ++t) {
    auto& row = slot_cost[static_cast<std::size_t>(t)];
    row.resize(static_cast<std::size_t>(cap_units + 1));
    for (std::int64_t u = 0; u <= cap_units; ++u) {
      const std::int64_t uncovered = std::max<std::int64_t>(0, trace.at(t) - u);
      row[static_cast<std::size_t>(u)] = prices.p_g * u + prices.spot(t) * uncovered;
    }
  }

  std::optional<Rational> best_total;
  Schedule best;
  for (std::int64_t cap = std::max<std::int64_t>(0, max_e - cap_units); cap <= max_e; ++cap) {
    // DP over generator levels with the grid draw capped at `cap`.
    std::vector<std::optional<Rational>> prev(static_cast<std::size_t>(cap_units + 1));
    std::vector<std::vector<std::int32_t>> parent(
        static_cast<std::size_t>(horizon),
        std::vector<std::int32_t>(static_cast<std::size_t>(cap_units + 1), -1));

    for (std::int64_t t = 0; t < horizon; ++t) {
      std::vector<std::optional<Rational>> cur(static_cast<std::size_t>(cap_units + 1));
      const std::int64_t level_low = std::max<std::int64_t>(0, trace.at(t) - cap);
      for (std::int64_t u = level_low; u <= cap_units; ++u) {
        if (t == 0) {
          if (options.cold_start && u > gen.ramp_up) continue;
          cur[static_cast<std::size_t>(u)] = slot_cost[0][static_cast<std::size_t>(u)];
          continue;
        }
        const std::int64_t from_low = std::max<std::int64_t>(0, u - gen.ramp_up);
        const std::int64_t from_high = std::min(cap_units, u + gen.ramp_down);
        std::optional<Rational> transition;
        std::int32_t arg = -1;
        for (std::int64_t from = from_low; from <= from_high; ++from) {
          const auto& value = prev[static_cast<std::size_t>(from)];
          if (!value) continue;
          if (!transition || *value < *transition) {
            transition = *value;
            arg = static_cast<std::int32_t>(from);
          }
        }
        if (!transition) continue;
        cur[static_cast<std::size_t>(u)] =
            *transition + slot_cost[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)];
        parent[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] = arg;
      }
      prev = std::move(cur);
    }

    std::optional<Rational> run_cost;
    std::int64_t final_level = -1;
    for (std::int64_t u = 0; u <= cap_units; ++u) {
      const auto& value = prev[static_cast<std::size_t>(u)];
      if (value && (!run_cost || *value < *run_cost)) {
        run_cost = *value;
        final_level = u;
      }
    }
    if (!run_cost) continue; // cap unreachable under ramping; larger caps relax the bounds

    std::vector<Rational> u_series(static_cast<std::size_t>(horizon));
    std::vector<Rational> v_series(static_cast<std::size_t>(horizon));
    std::int64_t level = final_level;
    for (std::int64_t t = horizon - 1; t >= 0; --t) {
      u_series[static_cast<std::size_t>(t)] = level;
      v_series[static_cast<std::size_t>(t)] =
          std::max<std::int64_t>(0, trace.at(t) - level);
      if (t > 0) level = parent[static_cast<std::size_t>(t)][static_cast<std::size_t>(level)];
    }
    Schedule candidate(std::move(u_series), std::move(v_series));
    Rational total = evaluate_cost(candidate, prices).total;
    if (!best_total || total < *best_total) {
      best_total = total;
      best = std::move(candidate);
    }
  }
  assert(best_total.has_value()); // cap = max e is always reachable
  return best;
}

CriticalCapacity compute_critical_capacity(const DemandTrace& trace, const PriceModel& prices) {
  const std::int64_t max_e = trace.max_demand();
  Schedule unconstrained = offline_fspaed(trace, prices, max_e);
  Rational peak_local = 0;
  for (const Rational& x : unconstrained.u) peak_local = std::max(peak_local, x);
  return CriticalCapacity{to_int64(numerator(peak_local))};
}

} // namespace paed
