#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "modo/errors.hpp"

namespace modo {

// Cooperative per-run budgets. Checked at layer boundaries only, so a run
// may overshoot its wall-clock limit by one layer's worth of work.
struct Limits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Approximate byte budget for network plus label storage; 0 = unlimited.
  std::size_t memory_bytes = 0;

  static Limits with_seconds(double seconds) {
    Limits l;
    l.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    return l;
  }

  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw ResourceError(ResourceKind::kTime, "time limit exceeded");
    }
  }

  void check_memory(std::size_t estimated_bytes) const {
    if (memory_bytes != 0 && estimated_bytes > memory_bytes) {
      throw ResourceError(ResourceKind::kMemory, "memory limit exceeded");
    }
  }
};

}  // namespace modo
