#ifndef PAED_TRACE_IO_HPP
#define PAED_TRACE_IO_HPP

#include "paed/types.hpp"

#include <string>
#include <vector>

namespace paed {

// One `timestamp,value` CSV with a header row. Timestamps are compared as
// trimmed strings, so ISO-8601 stamps and plain slot indices both work.
struct CsvSeries {
  std::vector<std::string> timestamps;
  std::vector<Rational> values;
};

CsvSeries read_timestamp_value_csv(const std::string& path);

struct TraceConfig {
  Rational quantum_kwh{100};
  Rational slot_hours{1, 4};
  Rational p_g_per_kwh{0};        // $/KWh
  Rational peak_price_per_kw{0};  // $/KW, converted through the slot length
  Rational p_e_min_per_kwh{0};    // declared spot floor, $/KWh
  std::vector<Rational> default_spot_per_kwh; // used when no price file is given
};

// Builds the quantized net-demand trace and the aligned price model:
// net = max(demand - renewable, 0) KWh, rounded up to whole quanta so no
// demand is lost. The renewable and price files are optional (empty path).
std::pair<DemandTrace, PriceModel> load_traces(const std::string& demand_csv,
                                               const std::string& renewable_csv,
                                               const std::string& price_csv,
                                               const TraceConfig& config);

} // namespace paed

#endif
