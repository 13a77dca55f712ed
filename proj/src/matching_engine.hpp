#pragma once

// Internal sharded driver for the matching streams. Each worker owns all of
// its scratch state; the merge step runs under one mutex, and histogram
// addition is commutative, so results are schedule-independent.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "mapenum/histogram.hpp"
#include "mapenum/matching.hpp"

namespace mapenum::detail {

class ProgressSink {
public:
  ProgressSink(std::uint64_t total, const EnumerateOptions& options)
      : total_(total), callback_(options.progress) {}

  static constexpr std::uint64_t kReportStride = 1ull << 24;
  static constexpr std::uint64_t kFlushStride = 1ull << 20;

  void flush(std::uint64_t delta) {
    if (delta == 0) return;
    std::uint64_t before = processed_.fetch_add(delta, std::memory_order_relaxed);
    std::uint64_t after = before + delta;
    if (callback_ && before / kReportStride != after / kReportStride) {
      std::scoped_lock lock(mutex_);
      callback_(after, total_);
    }
  }

  std::uint64_t processed() const { return processed_.load(); }

private:
  std::atomic<std::uint64_t> processed_{0};
  std::uint64_t total_ = 0;
  std::function<void(std::uint64_t, std::uint64_t)> callback_;
  std::mutex mutex_;
};

// make_worker() -> W; W::consume(MatchingStream&) drains one shard;
// merge(W&) folds a worker into the caller's result (serialized here).
template <typename MakeWorker, typename Merge>
void run_matching_shards(std::size_t n_letters, const EnumerateOptions& options,
                         MakeWorker&& make_worker, Merge&& merge) {
  unsigned threads = options.threads == 0 ? 1 : options.threads;
  std::vector<std::vector<LetterPair>> shards;
  if (threads == 1)
    shards.push_back({});
  else
    shards = matching_shards(n_letters, static_cast<std::size_t>(threads) * 16);

  std::atomic<std::size_t> next_shard{0};
  std::mutex merge_mutex;
  std::exception_ptr failure;

  auto work = [&] {
    try {
      auto worker = make_worker();
      for (;;) {
        std::size_t index = next_shard.fetch_add(1, std::memory_order_relaxed);
        if (index >= shards.size()) break;
        MatchingStream stream(n_letters, shards[index]);
        worker.consume(stream);
      }
      std::scoped_lock lock(merge_mutex);
      merge(worker);
    } catch (...) {
      std::scoped_lock lock(merge_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    unsigned spawn = std::min<std::size_t>(threads, shards.size());
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

// Hot-loop kernels shared by both enumerators.

inline std::uint32_t uf_find(std::uint32_t* parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// True iff the pairs connect all `components` vertex classes, where
// vertex_of[letter] names the class of each letter.
inline bool pairs_connect(const std::uint32_t* vertex_of,
                          std::span<const LetterPair> pairs,
                          std::uint32_t components, std::uint32_t* parent) {
  if (components <= 1) return true;
  for (std::uint32_t i = 0; i < components; ++i) parent[i] = i;
  std::uint32_t remaining = components;
  for (auto [a, b] : pairs) {
    std::uint32_t ra = uf_find(parent, vertex_of[a]);
    std::uint32_t rb = uf_find(parent, vertex_of[b]);
    if (ra != rb) {
      parent[ra] = rb;
      if (--remaining == 1) return true;
    }
  }
  return false;
}

// Cycle count of x -> outer(inner(x)); `visited` must hold ceil(n/64) words.
inline std::uint32_t composed_cycle_count(const Letter* outer, const Letter* inner,
                                          std::uint64_t* visited, std::uint32_t n) {
  const std::uint32_t words = (n + 63) / 64;
  for (std::uint32_t w = 0; w < words; ++w) visited[w] = 0;
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if ((visited[x >> 6] >> (x & 63)) & 1) continue;
    ++count;
    std::uint32_t y = x;
    do {
      visited[y >> 6] |= 1ull << (y & 63);
      y = outer[inner[y]];
    } while (y != x);
  }
  return count;
}

} // namespace mapenum::detail
