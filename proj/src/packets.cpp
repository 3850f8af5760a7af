#include "manetsim/packets.hpp"

namespace manetsim {

namespace {

struct SizeVisitor {
  std::uint32_t operator()(const DataPacket& p) const { return p.size_bytes; }
  std::uint32_t operator()(const DsdvUpdate& u) const {
    return kControlHeaderBytes + kDsdvEntryBytes * static_cast<std::uint32_t>(u.entries.size());
  }
  std::uint32_t operator()(const FsrUpdate& u) const {
    std::uint32_t size = kControlHeaderBytes;
    for (const auto& ls : u.carried) {
      size += kFsrOriginBytes + kFsrNeighborBytes * static_cast<std::uint32_t>(ls.neighbors.size());
    }
    return size;
  }
  std::uint32_t operator()(const OlsrHello& h) const {
    return kControlHeaderBytes + kHelloNeighborBytes * static_cast<std::uint32_t>(h.neighbors.size());
  }
  std::uint32_t operator()(const OlsrTc& tc) const {
    return kControlHeaderBytes + kTcSelectorBytes * static_cast<std::uint32_t>(tc.advertised.size());
  }
};

}  // namespace

std::uint32_t packet_size_bytes(const Packet& p) { return std::visit(SizeVisitor{}, p); }

const char* to_string(ControlKind kind) {
  switch (kind) {
    case ControlKind::DsdvPeriodic: return "dsdv_periodic";
    case ControlKind::DsdvTrigger: return "dsdv_trigger";
    case ControlKind::FsrInner: return "fsr_inner";
    case ControlKind::FsrOuter: return "fsr_outer";
    case ControlKind::OlsrHello: return "hello";
    case ControlKind::OlsrTcPeriodic: return "tc_periodic";
    case ControlKind::OlsrTcTrigger: return "tc_trigger";
    case ControlKind::OlsrTcForward: return "tc_forward";
    case ControlKind::Data: return "data";
  }
  return "?";
}

}  // namespace manetsim
