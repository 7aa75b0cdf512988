#pragma once

// Enumeration of all 3^n assignments of vertices to {neither, S, T}.
//
// Order: vertex 0 is the most significant base-3 digit, digit 0 = neither,
// 1 = S, 2 = T. The first pair in this order that satisfies a predicate is the
// canonical witness. The parallel kernel splits on a prefix of leading digits
// and must return exactly what the serial kernel returns.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "abcover/scan.hpp"

namespace abcover::detail {

/// Walks the suffix vertices [first, n) in base-3 order with the prefix fixed.
/// Calls pred(PairMasks); returns the first pair for which it is true.
template <class Pred>
std::optional<PairMasks> scan_suffix(int n, int first, PairMasks prefix, Pred& pred) {
  std::array<std::uint8_t, 64> digit{};
  PairMasks cur = prefix;
  while (true) {
    if (pred(cur)) return cur;
    int v = n - 1;
    while (v >= first) {
      const auto b = std::uint64_t{1} << v;
      auto& d = digit[static_cast<std::size_t>(v)];
      if (d == 0) {
        d = 1;
        cur.s |= b;
        break;
      }
      if (d == 1) {
        d = 2;
        cur.s &= ~b;
        cur.t |= b;
        break;
      }
      d = 0;
      cur.t &= ~b;
      --v;
    }
    if (v < first) return std::nullopt;
  }
}

inline PairMasks decode_prefix(long index, int length) {
  PairMasks p;
  for (int v = length - 1; v >= 0; --v) {
    const long d = index % 3;
    index /= 3;
    if (d == 1) p.s |= std::uint64_t{1} << v;
    if (d == 2) p.t |= std::uint64_t{1} << v;
  }
  return p;
}

template <class Pred>
std::optional<PairMasks> first_pair_serial(int n, Pred pred) {
  return scan_suffix(n, 0, PairMasks{}, pred);
}

/// OpenMP version of first_pair_serial. `Pred` is copied per chunk, so it must
/// be cheap to copy and must not mutate shared state.
template <class Pred>
std::optional<PairMasks> first_pair_parallel(int n, const Pred& pred) {
  const int prefix = std::min(n, 5);
  long chunks = 1;
  for (int i = 0; i < prefix; ++i) chunks *= 3;

  std::vector<std::optional<PairMasks>> found(static_cast<std::size_t>(chunks));
  std::atomic<long> best{std::numeric_limits<long>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < chunks; ++c) {
    if (c > best.load(std::memory_order_relaxed)) continue;
    Pred local = pred;
    auto hit = scan_suffix(n, prefix, decode_prefix(c, prefix), local);
    if (hit) {
      found[static_cast<std::size_t>(c)] = hit;
      long seen = best.load(std::memory_order_relaxed);
      while (c < seen && !best.compare_exchange_weak(seen, c, std::memory_order_relaxed)) {
      }
    }
  }
  const long b = best.load();
  if (b == std::numeric_limits<long>::max()) return std::nullopt;
  return found[static_cast<std::size_t>(b)];
}

template <class Pred>
std::optional<PairMasks> first_pair(int n, Execution mode, const Pred& pred) {
  if (mode == Execution::Serial) return first_pair_serial(n, pred);
  return first_pair_parallel(n, pred);
}

/// Visits every pair in order (serial); fn returns false to stop.
template <class Fn>
void for_each_pair(int n, Fn fn) {
  auto pred = [&fn](const PairMasks& p) { return !fn(p); };
  scan_suffix(n, 0, PairMasks{}, pred);
}

}  // namespace abcover::detail
