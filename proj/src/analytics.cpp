#include "manetsim/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace manetsim {

namespace {

double periods(double span, double interval) {
  if (interval <= 0.0) throw std::domain_error("interval must be positive");
  return std::floor(span / interval);
}

}  // namespace

DsdvCost dsdv_control_cost(const AnalyticParams& p) {
  DsdvCost c;
  c.periodic = periods(p.tau_nl, p.tau_per) * p.n;
  c.trigger = p.link_changes * p.n;
  return c;
}

FsrCost fsr_control_cost(const AnalyticParams& p) {
  const double inner = periods(p.tau_nl, p.tau_in);
  const double outer = periods(p.tau_nl, p.tau_out);
  FsrCost c;
  c.transmissions = p.n * (inner + outer);
  c.entry_weighted = p.n * (inner * p.n_in + outer * p.n_out);
  return c;
}

OlsrCost olsr_control_cost(const AnalyticParams& p) {
  OlsrCost c;
  c.hello = periods(p.tau_nl, p.tau_hello) * p.n;
  c.tc_periodic = periods(p.tau_nl, p.tau_tc) * p.n_selected;
  c.tc_trigger = p.mpr_changes * p.avg_mpr;
  return c;
}

double dsdv_utilization(const AnalyticParams& p) { return p.n * p.tau_nl * p.alpha; }

double fsr_utilization(const AnalyticParams& p) {
  return p.n_in * p.tau_nl * p.alpha_in + p.n_out * p.tau_nl * p.alpha_out;
}

double mpr_utilization(const MprUtilizationParams& q) {
  if (q.b_available_bps <= 0.0 || q.b_requested_bps <= 0.0 || q.e_available_j <= 0.0 ||
      q.e_transmit_j <= 0.0 || q.delay_s <= 0.0) {
    throw std::domain_error("mpr_utilization: all parameters must be strictly positive");
  }
  const double bandwidth_factor = q.b_available_bps / q.b_requested_bps;
  const double energy_factor = q.e_available_j / q.e_transmit_j;
  return bandwidth_factor * energy_factor / q.delay_s;
}

CostReport make_cost_report(double packet_cost, double time_cost_s) {
  return CostReport{packet_cost, time_cost_s, packet_cost * time_cost_s};
}

}  // namespace manetsim
