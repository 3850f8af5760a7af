#pragma once

#include <array>
#include <cstdint>

#include "manetsim/packets.hpp"

namespace manetsim {

/// Raw per-run counters, incremented by the kernel and the protocols.
struct RunCounters {
  std::uint64_t generated = 0;
  std::uint64_t delivered = 0;
  std::uint64_t delivered_bytes = 0;
  double e2ed_sum_s = 0.0;

  std::array<std::uint64_t, kControlKindCount> control_tx{};
  std::uint64_t data_tx = 0;

  std::uint64_t drops_noroute = 0;
  std::uint64_t drops_ttl = 0;
  std::uint64_t drops_queue_data = 0;
  std::uint64_t drops_queue_control = 0;
  std::uint64_t drops_radio_data = 0;
  std::uint64_t drops_radio_control = 0;
  std::uint64_t malformed_control = 0;

  std::uint64_t total_control_tx() const {
    std::uint64_t sum = 0;
    for (auto v : control_tx) sum += v;
    return sum;
  }
  std::uint64_t control_tx_of(ControlKind kind) const {
    return control_tx[static_cast<std::size_t>(kind)];
  }
};

/// Protocol-level tallies consumed by the closed-form cost comparison.
struct ProtocolStats {
  std::uint64_t link_breaks = 0;

  // Distance-vector: link changes that touched a route carrying recent data.
  std::uint64_t active_route_link_changes = 0;

  // Scoped link state: carried-entry counts sampled at each emission.
  double inner_entries_sum = 0.0;
  std::uint64_t inner_updates = 0;
  double outer_entries_sum = 0.0;
  std::uint64_t outer_updates = 0;

  // Relay-based link state.
  std::uint64_t mpr_set_changes = 0;
  double nbr_size_sum = 0.0;
  double mpr_size_sum = 0.0;
  std::uint64_t neighborhood_samples = 0;
  std::uint64_t selector_census_sum = 0;  // nodes with selectors, summed per TC tick
  std::uint64_t tc_ticks = 0;             // per-node tick count, summed
};

}  // namespace manetsim
