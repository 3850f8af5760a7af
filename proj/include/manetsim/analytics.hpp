#pragma once

#include <cstdint>
#include <optional>

#include "manetsim/counters.hpp"

namespace manetsim {

/// Inputs to the closed-form control-overhead models. Interval terms count
/// whole emission periods (floor), matching countable transmissions; change
/// terms are event counts accumulated over the run.
struct AnalyticParams {
  double n = 0.0;        // node count
  double tau_nl = 0.0;   // run length, seconds

  // Distance vector.
  double tau_per = 0.0;       // periodic update interval
  double link_changes = 0.0;  // link changes on active routes, whole run

  // Scoped link state.
  double tau_in = 0.0;
  double tau_out = 0.0;
  double n_in = 0.0;   // average inner-scope cardinality per node
  double n_out = 0.0;  // average outer-scope cardinality per node

  // Relay-based link state.
  double tau_hello = 0.0;
  double tau_tc = 0.0;
  double mpr_changes = 0.0;  // relay-set change events, whole run
  double avg_nbr = 0.0;
  double avg_mpr = 0.0;
  double n_selected = 0.0;  // nodes with a nonempty selector set

  // Advertisement rates for the utilization models.
  double alpha = 0.0;
  double alpha_in = 0.0;
  double alpha_out = 0.0;
};

struct DsdvCost {
  double periodic = 0.0;
  double trigger = 0.0;
  double total() const { return periodic + trigger; }
};

struct FsrCost {
  double transmissions = 0.0;   // one packet per scope timer per node
  double entry_weighted = 0.0;  // packets weighted by carried entries
};

struct OlsrCost {
  double hello = 0.0;
  double tc_periodic = 0.0;
  double tc_trigger = 0.0;
  double total() const { return hello + tc_periodic + tc_trigger; }
};

DsdvCost dsdv_control_cost(const AnalyticParams& p);
FsrCost fsr_control_cost(const AnalyticParams& p);
OlsrCost olsr_control_cost(const AnalyticParams& p);

/// Expected advertisement volume N * tau_NL * alpha.
double dsdv_utilization(const AnalyticParams& p);
/// Scope-split advertisement volume, one rate per scope.
double fsr_utilization(const AnalyticParams& p);

/// Inputs to the two-hop relay utilization score.
struct MprUtilizationParams {
  double b_available_bps = 0.0;  // free bandwidth at the relay
  double b_requested_bps = 0.0;  // bandwidth the source asks for
  double e_available_j = 0.0;    // energy left at the relay
  double e_transmit_j = 0.0;     // energy per relay->target transmission
  double delay_s = 0.0;          // source->relay delay
};

/// (bandwidth factor x energy factor) / delay. Throws std::domain_error unless
/// every parameter is strictly positive.
double mpr_utilization(const MprUtilizationParams& q);

/// Packet cost x delay cost.
struct CostReport {
  double packet_cost = 0.0;
  double time_cost_s = 0.0;
  double combined = 0.0;
};

CostReport make_cost_report(double packet_cost, double time_cost_s);

}  // namespace manetsim
