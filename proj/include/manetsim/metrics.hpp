#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "manetsim/counters.hpp"

namespace manetsim {

struct MetricsReport {
  double throughput_bps = 0.0;
  double avg_e2ed_s = 0.0;
  std::optional<double> nrl;  // empty when nothing was delivered
  std::uint64_t delivered = 0;
  std::uint64_t generated = 0;
  std::uint64_t control_transmissions = 0;
  std::uint64_t drops_noroute = 0;
  std::uint64_t drops_ttl = 0;
  std::uint64_t drops_queue = 0;
  std::uint64_t drops_radio = 0;
};

MetricsReport compute_metrics(const RunCounters& counters, double tau_nl);

/// Fixed result-record schema shared by the CLI and the golden tests.
std::string result_header();
std::string format_result_record(const std::string& protocol, const std::string& preset,
                                 std::uint32_t nodes, double rate_pps, std::uint64_t seed,
                                 const MetricsReport& m);

std::string format_double(double v);

}  // namespace manetsim
