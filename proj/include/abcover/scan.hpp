#pragma once

#include <cstdint>
#include <optional>

namespace abcover {

/// How the 3^n disjoint-pair scans execute. Both produce the same answer; the
/// serial path is the reference the parallel kernel is tested against.
enum class Execution { Serial, Parallel };

struct ScanOptions {
  /// Hard cap on the graph order for exhaustive (S, T) enumeration.
  int max_order = 16;
  Execution execution = Execution::Parallel;
};

/// One disjoint pair as masks; vertex v is in S (resp. T) when bit v is set.
struct PairMasks {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
};

/// Worker count for OpenMP regions started by the library (<= 0 means the runtime default).
void set_worker_count(int workers);
int worker_count();

}  // namespace abcover
