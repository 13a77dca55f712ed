#include "mapenum/oriented.hpp"

#include <stdexcept>

#include "mapenum/errors.hpp"
#include "matching_engine.hpp"

namespace mapenum {

Permutation build_sigma(const DegreeProfile& profile) {
  const std::uint64_t darts = profile.total_darts();
  if (darts % 2 != 0)
    throw ProfileError("build_sigma: odd dart total " + std::to_string(darts));
  std::vector<Letter> images(darts);
  Letter base = 0;
  for (auto [degree, count] : profile.entries()) {
    for (unsigned v = 0; v < count; ++v) {
      for (unsigned i = 0; i + 1 < degree; ++i) images[base + i] = base + i + 1;
      images[base + degree - 1] = base;
      base += degree;
    }
  }
  return Permutation(std::move(images));
}

namespace {

// chi = V - E + F must be even and at most 2 for a connected gluing.
unsigned genus_from_counts(std::int64_t vertices, std::int64_t edges,
                           std::int64_t faces) {
  std::int64_t chi = vertices - edges + faces;
  std::int64_t doubled_genus = 2 - chi;
  if (doubled_genus < 0 || doubled_genus % 2 != 0)
    throw EnumerationError("oriented map with chi = " + std::to_string(chi));
  return static_cast<unsigned>(doubled_genus / 2);
}

struct OrientedWorker {
  const Letter* sigma;
  const std::uint32_t* vertex_of;
  std::uint32_t n;
  std::uint32_t vertices;
  detail::ProgressSink* progress;

  std::vector<std::uint32_t> uf_parent;
  std::vector<std::uint64_t> visited;
  std::vector<std::uint64_t> genus_counts;
  std::uint64_t connected = 0;
  std::uint64_t seen = 0;
  std::uint64_t unflushed = 0;

  OrientedWorker(const Letter* sigma_, const std::uint32_t* vertex_of_,
                 std::uint32_t n_, std::uint32_t vertices_,
                 detail::ProgressSink* progress_)
      : sigma(sigma_), vertex_of(vertex_of_), n(n_), vertices(vertices_),
        progress(progress_), uf_parent(vertices_),
        visited((n_ + 63) / 64), genus_counts(n_ / 2 + 2, 0) {}

  void consume(MatchingStream& stream) {
    const std::int64_t edges = n / 2;
    while (stream.advance()) {
      ++seen;
      if (detail::pairs_connect(vertex_of, stream.pairs(), vertices,
                                uf_parent.data())) {
        std::uint32_t faces = detail::composed_cycle_count(
            sigma, stream.partners().data(), visited.data(), n);
        ++genus_counts[genus_from_counts(vertices, edges, faces)];
        ++connected;
      }
      if (++unflushed == detail::ProgressSink::kFlushStride) {
        progress->flush(unflushed);
        unflushed = 0;
      }
    }
    progress->flush(unflushed);
    unflushed = 0;
  }
};

} // namespace

GenusHistogram enumerate_oriented(const Permutation& sigma,
                                  const EnumerateOptions& options) {
  const std::size_t n = sigma.size();
  if (n == 0 || n % 2 != 0)
    throw ProfileError("enumerate_oriented: rotation must act on an even, positive letter count");
  auto ids = cycle_ids(sigma);
  const std::vector<Letter>& vertex_of = ids.first;
  const Letter vertices = ids.second;
  const std::uint64_t total = odd_double_factorial_checked(n - 1);

  detail::ProgressSink progress(total, options);
  GenusHistogram result;
  result.total_matchings = total;
  std::uint64_t processed = 0;
  std::vector<std::uint64_t> genus_counts(n / 2 + 2, 0);

  detail::run_matching_shards(
      n, options,
      [&] {
        return OrientedWorker(sigma.images().data(), vertex_of.data(),
                              static_cast<std::uint32_t>(n), vertices, &progress);
      },
      [&](OrientedWorker& worker) {
        for (std::size_t g = 0; g < genus_counts.size(); ++g)
          genus_counts[g] = checked_add(genus_counts[g], worker.genus_counts[g]);
        result.total_connected = checked_add(result.total_connected, worker.connected);
        processed = checked_add(processed, worker.seen);
      });

  if (processed != total)
    throw EnumerationError("enumerate_oriented: processed " +
                           std::to_string(processed) + " of " +
                           std::to_string(total) + " matchings");
  for (std::size_t g = 0; g < genus_counts.size(); ++g)
    if (genus_counts[g] != 0)
      result.bins.add(static_cast<int>(g), genus_counts[g]);
  return result;
}

GenusHistogram enumerate_oriented(const DegreeProfile& profile,
                                  const EnumerateOptions& options) {
  return enumerate_oriented(build_sigma(profile), options);
}

GenusHistogram enumerate_oriented(const DegreeProfile& profile, unsigned threads) {
  EnumerateOptions options;
  options.threads = threads;
  return enumerate_oriented(profile, options);
}

std::optional<unsigned> classify(const Permutation& sigma, const Matching& tau) {
  if (sigma.size() != tau.size())
    throw std::invalid_argument("classify: sigma and tau act on different letters");
  const std::size_t n = sigma.size();
  if (!orbit_is_full({sigma, tau.to_permutation()}, n)) return std::nullopt;
  std::int64_t vertices = static_cast<std::int64_t>(cycle_count(sigma));
  std::int64_t faces =
      static_cast<std::int64_t>(cycle_count(compose(sigma, tau.to_permutation())));
  return genus_from_counts(vertices, static_cast<std::int64_t>(n / 2), faces);
}

FaceHistogram enumerate_oriented_moments(const DegreeProfile& profile) {
  Permutation sigma = build_sigma(profile);
  const std::size_t n = sigma.size();
  FaceHistogram result;
  result.total = odd_double_factorial_checked(n - 1);

  std::vector<std::uint64_t> face_counts(n + 1, 0);
  std::vector<std::uint64_t> visited((n + 63) / 64);
  MatchingStream stream(n);
  std::uint64_t seen = 0;
  while (stream.advance()) {
    std::uint32_t faces = detail::composed_cycle_count(
        sigma.images().data(), stream.partners().data(), visited.data(),
        static_cast<std::uint32_t>(n));
    ++face_counts[faces];
    ++seen;
  }
  if (seen != result.total)
    throw EnumerationError("enumerate_oriented_moments: stream count mismatch");
  for (std::size_t f = 1; f < face_counts.size(); ++f)
    if (face_counts[f] != 0) result.bins.add(static_cast<int>(f), face_counts[f]);
  return result;
}

} // namespace mapenum
