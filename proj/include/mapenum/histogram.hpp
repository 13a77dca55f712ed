#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>

#include "mapenum/errors.hpp"

namespace mapenum {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw OverflowError("count overflow: 64-bit total exceeded");
  return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw OverflowError("count overflow: 64-bit product exceeded");
  return a * b;
}

// Integer-binned, overflow-checked 64-bit counts. The bin is a genus, an
// Euler characteristic, or a face count depending on the producer.
struct CountHistogram {
  std::map<int, std::uint64_t> bins;

  void add(int bin, std::uint64_t count = 1) {
    auto& slot = bins[bin];
    slot = checked_add(slot, count);
  }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (auto [bin, count] : bins) sum = checked_add(sum, count);
    return sum;
  }

  bool operator==(const CountHistogram&) const = default;
};

// Connected oriented maps binned by genus.
struct GenusHistogram {
  CountHistogram bins;
  std::uint64_t total_connected = 0;
  std::uint64_t total_matchings = 0; // (2E-1)!!

  bool operator==(const GenusHistogram&) const = default;
};

// Connected unoriented maps binned by Euler characteristic (chi <= 2).
struct ChiHistogram {
  CountHistogram bins;
  std::uint64_t total_connected = 0;
  std::uint64_t total_signed_matchings = 0; // (2E-1)!! * 2^E

  bool operator==(const ChiHistogram&) const = default;
};

// All matchings (connected and disconnected) binned by face count.
struct FaceHistogram {
  CountHistogram bins;
  std::uint64_t total = 0;

  bool operator==(const FaceHistogram&) const = default;
};

// Tunables shared by the enumerators. Results never depend on the thread
// count; the progress callback, when set, is invoked under a lock roughly
// every 2^24 processed matchings with (processed, total).
struct EnumerateOptions {
  unsigned threads = 1;
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

} // namespace mapenum
