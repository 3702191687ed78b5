#include "paed/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace paed {

namespace {

constexpr std::int64_t kMaxLayerCount = 1'000'000;

} // namespace

DemandTrace::DemandTrace(std::vector<std::int64_t> demand) : e(std::move(demand)) {
  for (std::int64_t d : e)
    if (d < 0) throw std::invalid_argument("demand must be nonnegative");
}

std::int64_t DemandTrace::max_demand() const {
  std::int64_t m = 0;
  for (std::int64_t d : e) m = std::max(m, d);
  return m;
}

bool DemandTrace::is_binary() const {
  return std::all_of(e.begin(), e.end(), [](std::int64_t d) { return d == 0 || d == 1; });
}

PriceModel::PriceModel(std::vector<Rational> spot, Rational local, Rational peak,
                       Rational spot_floor, Rational slot_hours)
    : p_e(std::move(spot)),
      p_g(std::move(local)),
      p_m(std::move(peak)),
      p_e_min(std::move(spot_floor)),
      delta_hours(std::move(slot_hours)) {
  if (p_g <= 0) throw std::invalid_argument("local generation price must be positive");
  if (p_m < 0) throw std::invalid_argument("peak price must be nonnegative");
  if (p_e_min < 0 || p_e_min > p_g)
    throw std::invalid_argument("spot-price floor must lie in [0, p_g]");
  if (delta_hours <= 0) throw std::invalid_argument("slot length must be positive");
  for (const Rational& p : p_e) {
    if (p < 0) throw std::invalid_argument("spot price must be nonnegative");
    if (p > p_g) throw std::invalid_argument("spot price above local generation price");
  }
}

std::vector<std::string> PriceModel::validation_warnings() const {
  std::vector<std::string> warnings;
  for (std::size_t t = 0; t < p_e.size(); ++t) {
    if (p_e[t] < p_e_min)
      warnings.push_back("spot price at slot " + std::to_string(t + 1) +
                         " below declared floor p_e_min");
  }
  return warnings;
}

GeneratorSpec::GeneratorSpec(std::int64_t cap, std::int64_t ramp)
    : GeneratorSpec(cap, ramp, ramp) {}

GeneratorSpec::GeneratorSpec(std::int64_t cap, std::int64_t r_up, std::int64_t r_down)
    : capacity(cap), ramp_up(r_up), ramp_down(r_down) {
  if (capacity < 0) throw std::invalid_argument("capacity must be nonnegative");
  if (ramp_up <= 0 || ramp_down <= 0) throw std::invalid_argument("ramp limits must be positive");
}

std::int64_t GeneratorSpec::gamma() const {
  if (capacity <= 0) return 1;
  return std::max<std::int64_t>(1, (capacity + ramp_up - 1) / ramp_up);
}

Schedule::Schedule(std::vector<Rational> local, std::vector<Rational> grid)
    : u(std::move(local)), v(std::move(grid)) {
  if (u.size() != v.size()) throw std::invalid_argument("schedule series length mismatch");
  for (const Rational& x : u)
    if (x < 0) throw std::invalid_argument("local output must be nonnegative");
  for (const Rational& x : v)
    if (x < 0) throw std::invalid_argument("grid draw must be nonnegative");
}

CostBreakdown evaluate_cost(const Schedule& schedule, const PriceModel& prices) {
  if (schedule.horizon() != prices.horizon())
    throw std::invalid_argument("schedule and price series lengths differ");
  CostBreakdown cost;
  Rational peak = 0;
  for (std::int64_t t = 0; t < schedule.horizon(); ++t) {
    const auto i = static_cast<std::size_t>(t);
    cost.grid_volume += prices.p_e[i] * schedule.v[i];
    cost.local_cost += prices.p_g * schedule.u[i];
    peak = std::max(peak, schedule.v[i]);
  }
  cost.peak_charge = prices.p_m * peak;
  cost.total = cost.grid_volume + cost.peak_charge + cost.local_cost;
  return cost;
}

Rational convert_peak_price(const Rational& peak_price_per_kw, const Rational& slot_hours) {
  if (slot_hours <= 0) throw std::domain_error("slot length must be positive");
  return peak_price_per_kw / slot_hours;
}

std::vector<Violation> check_feasibility(const Schedule& schedule, const DemandTrace& trace,
                                         const GeneratorSpec& gen, bool enforce_ramping) {
  if (schedule.horizon() != trace.horizon())
    throw std::invalid_argument("schedule and trace lengths differ");
  std::vector<Violation> violations;
  const std::int64_t horizon = schedule.horizon();
  for (std::int64_t t = 0; t < horizon; ++t) {
    const auto i = static_cast<std::size_t>(t);
    if (schedule.u[i] + schedule.v[i] < trace.e[i])
      violations.push_back({ViolationKind::DemandShortfall, t + 1,
                            "demand shortfall at t=" + std::to_string(t + 1)});
    if (schedule.u[i] > gen.capacity)
      violations.push_back({ViolationKind::CapacityExceeded, t + 1,
                            "capacity exceeded at t=" + std::to_string(t + 1)});
  }
  if (enforce_ramping) {
    for (std::int64_t t = 0; t + 1 < horizon; ++t) {
      const auto i = static_cast<std::size_t>(t);
      Rational diff = schedule.u[i + 1] - schedule.u[i];
      if (diff > gen.ramp_up)
        violations.push_back({ViolationKind::RampUpExceeded, t + 1,
                              "ramp-up exceeded at t=" + std::to_string(t + 1) + "->" +
                                  std::to_string(t + 2)});
      if (-diff > gen.ramp_down)
        violations.push_back({ViolationKind::RampDownExceeded, t + 1,
                              "ramp-down exceeded at t=" + std::to_string(t + 1) + "->" +
                                  std::to_string(t + 2)});
    }
  }
  return violations;
}

std::vector<DemandTrace> layer_demand(const DemandTrace& trace) {
  const std::int64_t layers = trace.max_demand();
  if (layers > kMaxLayerCount)
    throw std::length_error("demand too large to layer; check quantization");
  std::vector<DemandTrace> result;
  result.reserve(static_cast<std::size_t>(layers));
  for (std::int64_t k = 1; k <= layers; ++k) {
    std::vector<std::int64_t> layer(trace.e.size());
    for (std::size_t t = 0; t < trace.e.size(); ++t) layer[t] = trace.e[t] >= k ? 1 : 0;
    result.emplace_back(std::move(layer));
  }
  return result;
}

} // namespace paed
