#ifndef PAED_OFFLINE_HPP
#define PAED_OFFLINE_HPP

#include "paed/types.hpp"

namespace paed {

// Accumulated local-generation deficit of a binary layer, in units of the
// peak price. sigma > 1 means serving the layer from the grid beats paying
// for local generation over the whole cycle.
struct SigmaValue {
  Rational sigma;
};

// Smallest capacity beyond which extra local generation cannot lower the
// offline optimal cost.
struct CriticalCapacity {
  std::int64_t c_tilde = 0;
};

SigmaValue compute_sigma(const DemandTrace& binary_trace, const PriceModel& prices);

// Closed-form offline optimum for a single binary layer: all-grid when the
// accumulated deficit exceeds the peak price, all-local otherwise.
Schedule offline_fspaed_k(const DemandTrace& binary_trace, const PriceModel& prices);

// Exhaustive 2^T search over binary grid assignments; independent oracle for
// offline_fspaed_k. Ties broken toward the lexicographically smallest grid
// series.
Schedule brute_force_fspaed_k(const DemandTrace& binary_trace, const PriceModel& prices);

// Exact optimum of the capacity-constrained problem without ramping, found
// by enumerating the integer peak cap M: below the cap the grid serves
// everything (it is never pricier per unit), the local generator covers the
// rest.
Schedule offline_fspaed(const DemandTrace& trace, const PriceModel& prices,
                        std::int64_t capacity);

struct PaedDpOptions {
  bool cold_start = true; // generator output at t=0 fixed to zero
};

// Exact optimum with capacity and ramping constraints: outer enumeration of
// the peak cap, inner DP over integer generator output levels.
Schedule offline_paed_dp(const DemandTrace& trace, const PriceModel& prices,
                         const GeneratorSpec& gen, const PaedDpOptions& options = {});

CriticalCapacity compute_critical_capacity(const DemandTrace& trace, const PriceModel& prices);

} // namespace paed

#endif
