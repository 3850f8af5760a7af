#include "manetsim/metrics.hpp"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

namespace manetsim {

MetricsReport compute_metrics(const RunCounters& c, double tau_nl) {
  if (tau_nl <= 0.0) throw std::domain_error("compute_metrics: tau_nl must be positive");
  MetricsReport m;
  m.delivered = c.delivered;
  m.generated = c.generated;
  m.control_transmissions = c.total_control_tx();
  m.drops_noroute = c.drops_noroute;
  m.drops_ttl = c.drops_ttl;
  m.drops_queue = c.drops_queue_data;
  m.drops_radio = c.drops_radio_data;
  m.throughput_bps = static_cast<double>(c.delivered_bytes) * 8.0 / tau_nl;
  m.avg_e2ed_s = c.delivered > 0 ? c.e2ed_sum_s / static_cast<double>(c.delivered) : 0.0;
  if (c.delivered > 0) {
    m.nrl = static_cast<double>(m.control_transmissions) / static_cast<double>(c.delivered);
  }
  return m;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string result_header() {
  return "protocol,preset,nodes,rate,seed,throughput_bps,avg_e2ed_s,nrl,delivered,generated,"
         "control_tx,drops_noroute,drops_ttl,drops_queue";
}

std::string format_result_record(const std::string& protocol, const std::string& preset,
                                 std::uint32_t nodes, double rate_pps, std::uint64_t seed,
                                 const MetricsReport& m) {
  char rate[32];
  std::snprintf(rate, sizeof rate, "%g", rate_pps);
  std::string line;
  line.reserve(160);
  line += protocol;
  line += ',';
  line += preset;
  line += ',';
  line += std::to_string(nodes);
  line += ',';
  line += rate;
  line += ',';
  line += std::to_string(seed);
  line += ',';
  line += format_double(m.throughput_bps);
  line += ',';
  line += format_double(m.avg_e2ed_s);
  line += ',';
  line += m.nrl ? format_double(*m.nrl) : "undef";
  char tail[160];
  std::snprintf(tail, sizeof tail,
                ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64,
                m.delivered, m.generated, m.control_transmissions, m.drops_noroute, m.drops_ttl,
                m.drops_queue);
  line += tail;
  return line;
}

}  // namespace manetsim
