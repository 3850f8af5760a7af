#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

// Wire-size model used for serialization delay. All control messages share a
// fixed header; list entries cost a fixed amount each.
inline constexpr std::uint32_t kControlHeaderBytes = 16;
inline constexpr std::uint32_t kDsdvEntryBytes = 12;     // destination, metric, sequence
inline constexpr std::uint32_t kFsrOriginBytes = 8;      // origin, sequence
inline constexpr std::uint32_t kFsrNeighborBytes = 4;
inline constexpr std::uint32_t kHelloNeighborBytes = 5;  // id + relay flag
inline constexpr std::uint32_t kTcSelectorBytes = 4;

struct DataPacket {
  std::uint64_t id = 0;
  NodeId source = kNoNode;
  NodeId destination = kNoNode;
  std::uint32_t size_bytes = 0;
  SimTime created_at = 0.0;
  std::uint32_t hops_traversed = 0;
};

/// One advertised route. metric == kInfMetric together with an odd sequence
/// announces a broken destination.
struct DsdvRouteAd {
  NodeId destination = kNoNode;
  std::uint32_t metric = 0;
  std::int64_t sequence = 0;
};

struct DsdvUpdate {
  NodeId origin = kNoNode;
  bool full_dump = false;
  std::vector<DsdvRouteAd> entries;
};

/// Link state of one origin as carried inside a scoped update.
struct FsrLinkState {
  NodeId origin = kNoNode;
  std::int64_t sequence = 0;
  std::vector<NodeId> neighbors;
};

struct FsrUpdate {
  NodeId origin = kNoNode;
  std::vector<FsrLinkState> carried;
};

struct OlsrHello {
  NodeId origin = kNoNode;
  std::vector<NodeId> neighbors;  // sorted
  std::vector<NodeId> relays;     // subset of neighbors currently picked as MPRs
};

struct OlsrTc {
  NodeId origin = kNoNode;
  std::int64_t sequence = 0;
  std::vector<NodeId> advertised;  // the origin's MPR selectors
};

using Packet = std::variant<DataPacket, DsdvUpdate, FsrUpdate, OlsrHello, OlsrTc>;

inline bool is_data(const Packet& p) { return std::holds_alternative<DataPacket>(p); }

std::uint32_t packet_size_bytes(const Packet& p);

/// Transmission purpose, used by the overhead counters and the audit log.
enum class ControlKind : std::uint8_t {
  DsdvPeriodic,
  DsdvTrigger,
  FsrInner,
  FsrOuter,
  OlsrHello,
  OlsrTcPeriodic,
  OlsrTcTrigger,
  OlsrTcForward,
  Data,  // not a control kind; keeps tx records uniform
};

inline constexpr std::size_t kControlKindCount = 8;

const char* to_string(ControlKind kind);

}  // namespace manetsim
