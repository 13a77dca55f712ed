#include "mapenum/unoriented.hpp"

#include <stdexcept>

#include "mapenum/errors.hpp"
#include "mapenum/oriented.hpp"
#include "matching_engine.hpp"

namespace mapenum {

std::pair<DoubledDartSpace, Permutation> build_doubled(const DegreeProfile& profile) {
  Permutation quotient_sigma = build_sigma(profile); // throws on odd darts
  const std::size_t quotient_darts = quotient_sigma.size();
  const std::size_t letters = 2 * quotient_darts;

  std::vector<Letter> phi_images(letters);
  std::vector<Letter> sigma_images(letters);
  Permutation quotient_inverse = quotient_sigma.inverse();
  for (Letter q = 0; q < quotient_darts; ++q) {
    phi_images[2 * q] = 2 * q + 1;
    phi_images[2 * q + 1] = 2 * q;
    sigma_images[2 * q] = 2 * quotient_sigma(q);
    sigma_images[2 * q + 1] = 2 * quotient_inverse(q) + 1;
  }

  DoubledDartSpace space;
  space.edges = quotient_darts / 2;
  space.phi = Permutation(std::move(phi_images));
  return {std::move(space), Permutation(std::move(sigma_images))};
}

Permutation lift(const DoubledDartSpace& space, const SignedMatching& matching) {
  const std::size_t letters = space.letter_count();
  if (2 * matching.pairing.size() != letters)
    throw std::invalid_argument("lift: matching does not fit the dart space");
  auto pairs = matching.pairing.pairs();
  if (matching.twists.size() != pairs.size())
    throw std::invalid_argument("lift: one twist bit per pair required");

  std::vector<Letter> tau(letters);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    Letter ap = DoubledDartSpace::plus_copy(a), am = DoubledDartSpace::minus_copy(a);
    Letter bp = DoubledDartSpace::plus_copy(b), bm = DoubledDartSpace::minus_copy(b);
    if (matching.twists[i]) {
      tau[ap] = bm;
      tau[bm] = ap;
      tau[am] = bp;
      tau[bp] = am;
    } else {
      tau[ap] = bp;
      tau[bp] = ap;
      tau[am] = bm;
      tau[bm] = am;
    }
  }
  return Permutation(std::move(tau));
}

bool validate_triple(const Permutation& phi, const Permutation& sigma,
                     const Permutation& tau) {
  const std::size_t n = phi.size();
  if (sigma.size() != n || tau.size() != n)
    throw std::invalid_argument("validate_triple: size mismatch");
  if (!phi.is_fixed_point_free_involution()) return false;
  if (!tau.is_fixed_point_free_involution()) return false;
  for (Letter x = 0; x < n; ++x) {
    if (tau(x) == phi(x)) return false;           // shared 2-cycle
    if (phi(sigma(phi(x))) != sigma.inverse()(x)) // phi sigma phi = sigma^-1
      return false;
    if (phi(tau(phi(x))) != tau(x)) return false; // phi tau phi = tau
  }
  // sigma's cycles must pair up under phi, never map to themselves.
  auto [cycle_of, count] = cycle_ids(sigma);
  (void)count;
  for (Letter x = 0; x < n; ++x)
    if (cycle_of[phi(x)] == cycle_of[x]) return false;
  return true;
}

namespace {

std::uint64_t half_count(std::uint64_t doubled, const char* what) {
  if (doubled % 2 != 0)
    throw EnumerationError(std::string("unoriented map with an odd ") + what +
                           " cycle count");
  return doubled / 2;
}

int chi_from_counts(std::int64_t vertices, std::int64_t edges, std::int64_t faces) {
  std::int64_t chi = vertices - edges + faces;
  if (chi > 2)
    throw EnumerationError("unoriented map with chi = " + std::to_string(chi));
  return static_cast<int>(chi);
}

struct UnorientedWorker {
  const Letter* sigma4;       // rotation on 4E letters
  const std::uint32_t* vertex_of; // quotient dart -> vertex id
  std::uint32_t quotient_darts;   // 2E
  std::uint32_t vertices;         // V
  detail::ProgressSink* progress;

  std::vector<std::uint32_t> uf_parent;
  std::vector<std::uint64_t> visited;
  std::vector<Letter> tau4;
  std::vector<std::uint64_t> chi_counts; // index 2 - chi
  std::uint64_t connected = 0;
  std::uint64_t seen = 0;
  std::uint64_t unflushed = 0;

  UnorientedWorker(const Letter* sigma4_, const std::uint32_t* vertex_of_,
                   std::uint32_t quotient_darts_, std::uint32_t vertices_,
                   detail::ProgressSink* progress_)
      : sigma4(sigma4_), vertex_of(vertex_of_), quotient_darts(quotient_darts_),
        vertices(vertices_), progress(progress_), uf_parent(vertices_),
        visited((2 * quotient_darts_ + 63) / 64), tau4(2 * quotient_darts_),
        chi_counts(quotient_darts_ / 2 + 3, 0) {}

  void rebuild_untwisted(std::span<const LetterPair> pairs) {
    for (auto [a, b] : pairs) {
      tau4[2 * a] = 2 * b;
      tau4[2 * b] = 2 * a;
      tau4[2 * a + 1] = 2 * b + 1;
      tau4[2 * b + 1] = 2 * a + 1;
    }
  }

  void toggle_twist(LetterPair pair) {
    Letter ap = 2 * pair.first, am = 2 * pair.first + 1;
    std::swap(tau4[ap], tau4[am]);
    tau4[tau4[ap]] = ap;
    tau4[tau4[am]] = am;
  }

  void consume(MatchingStream& stream) {
    const std::uint32_t edges = quotient_darts / 2;
    const std::uint64_t twist_total = 1ull << edges;
    const std::uint32_t letters = 2 * quotient_darts;
    while (stream.advance()) {
      seen += twist_total;
      unflushed += twist_total;
      // Twist bits never change connectivity: both lifts of a pair land in
      // the same phi-merged vertex class, so the quotient pairing decides.
      if (detail::pairs_connect(vertex_of, stream.pairs(), vertices,
                                uf_parent.data())) {
        auto pairs = stream.pairs();
        rebuild_untwisted(pairs);
        for (std::uint64_t t = 0; t < twist_total; ++t) {
          if (t != 0) {
            // binary-counter step: flip trailing pairs up to the lowest set bit
            for (std::uint32_t bit = 0;; ++bit) {
              toggle_twist(pairs[bit]);
              if ((t >> bit) & 1) break;
            }
          }
          std::uint32_t doubled_faces = detail::composed_cycle_count(
              sigma4, tau4.data(), visited.data(), letters);
          std::uint64_t faces = half_count(doubled_faces, "face");
          int chi = chi_from_counts(vertices, edges, static_cast<std::int64_t>(faces));
          ++chi_counts[2 - chi];
        }
        connected += twist_total;
      }
      if (unflushed >= detail::ProgressSink::kFlushStride) {
        progress->flush(unflushed);
        unflushed = 0;
      }
    }
    progress->flush(unflushed);
    unflushed = 0;
  }
};

} // namespace

ChiHistogram enumerate_unoriented(const DegreeProfile& profile,
                                  const EnumerateOptions& options) {
  auto doubled = build_doubled(profile);
  const DoubledDartSpace& space = doubled.first;
  const Permutation& sigma4 = doubled.second;
  Permutation quotient_sigma = build_sigma(profile);
  const std::size_t quotient_darts = quotient_sigma.size(); // 2E
  const std::uint64_t edges = space.edges;
  if (edges >= 63)
    throw OverflowError("enumerate_unoriented: twist space exceeds 64 bits");
  const std::uint64_t total = checked_mul(
      odd_double_factorial_checked(quotient_darts - 1), 1ull << edges);

  // phi sigma phi = sigma^-1 holds by construction; check once per run.
  if (compose(space.phi, compose(sigma4, space.phi)) != sigma4.inverse())
    throw EnumerationError("enumerate_unoriented: doubled rotation broke phi-equivariance");

  auto ids = cycle_ids(quotient_sigma);
  const std::vector<Letter>& vertex_of = ids.first;
  const Letter vertices = ids.second;
  detail::ProgressSink progress(total, options);
  ChiHistogram result;
  result.total_signed_matchings = total;
  std::uint64_t processed = 0;
  std::vector<std::uint64_t> chi_counts(quotient_darts / 2 + 3, 0);

  detail::run_matching_shards(
      quotient_darts, options,
      [&] {
        return UnorientedWorker(sigma4.images().data(), vertex_of.data(),
                                static_cast<std::uint32_t>(quotient_darts),
                                vertices, &progress);
      },
      [&](UnorientedWorker& worker) {
        for (std::size_t i = 0; i < chi_counts.size(); ++i)
          chi_counts[i] = checked_add(chi_counts[i], worker.chi_counts[i]);
        result.total_connected = checked_add(result.total_connected, worker.connected);
        processed = checked_add(processed, worker.seen);
      });

  if (processed != total)
    throw EnumerationError("enumerate_unoriented: processed " +
                           std::to_string(processed) + " of " +
                           std::to_string(total) + " signed matchings");
  for (std::size_t i = 0; i < chi_counts.size(); ++i)
    if (chi_counts[i] != 0) result.bins.add(2 - static_cast<int>(i), chi_counts[i]);
  return result;
}

ChiHistogram enumerate_unoriented(const DegreeProfile& profile, unsigned threads) {
  EnumerateOptions options;
  options.threads = threads;
  return enumerate_unoriented(profile, options);
}

std::optional<int> classify_unoriented(const DoubledDartSpace& space,
                                       const Permutation& sigma,
                                       const Permutation& tau) {
  const std::size_t letters = space.letter_count();
  if (sigma.size() != letters || tau.size() != letters)
    throw std::invalid_argument("classify_unoriented: size mismatch");
  if (!orbit_is_full({space.phi, sigma, tau}, letters)) return std::nullopt;
  std::uint64_t vertices = half_count(cycle_count(sigma), "vertex");
  // tau has 2E two-cycles on the 4E letters; half of that is the edge count.
  std::uint64_t edges = half_count(cycle_count(tau), "edge");
  std::uint64_t faces = half_count(cycle_count(compose(sigma, tau)), "face");
  return chi_from_counts(static_cast<std::int64_t>(vertices),
                         static_cast<std::int64_t>(edges),
                         static_cast<std::int64_t>(faces));
}

FaceHistogram enumerate_unoriented_moments(const DegreeProfile& profile) {
  auto doubled = build_doubled(profile);
  const DoubledDartSpace& space = doubled.first;
  const Permutation& sigma4 = doubled.second;
  Permutation quotient_sigma = build_sigma(profile);
  const std::size_t quotient_darts = quotient_sigma.size();
  const std::uint64_t edges = space.edges;
  if (edges >= 63)
    throw OverflowError("enumerate_unoriented_moments: twist space exceeds 64 bits");

  FaceHistogram result;
  result.total = checked_mul(odd_double_factorial_checked(quotient_darts - 1),
                             1ull << edges);

  const std::uint32_t letters = static_cast<std::uint32_t>(2 * quotient_darts);
  std::vector<std::uint64_t> face_counts(quotient_darts + 1, 0);
  std::vector<std::uint64_t> visited((letters + 63) / 64);
  std::vector<Letter> tau4(letters);
  const std::uint64_t twist_total = 1ull << edges;
  std::uint64_t seen = 0;

  MatchingStream stream(quotient_darts);
  while (stream.advance()) {
    auto pairs = stream.pairs();
    for (auto [a, b] : pairs) {
      tau4[2 * a] = 2 * b;
      tau4[2 * b] = 2 * a;
      tau4[2 * a + 1] = 2 * b + 1;
      tau4[2 * b + 1] = 2 * a + 1;
    }
    for (std::uint64_t t = 0; t < twist_total; ++t) {
      if (t != 0) {
        for (std::uint32_t bit = 0;; ++bit) {
          auto [a, b] = pairs[bit];
          Letter ap = 2 * a, am = 2 * a + 1;
          std::swap(tau4[ap], tau4[am]);
          tau4[tau4[ap]] = ap;
          tau4[tau4[am]] = am;
          if ((t >> bit) & 1) break;
        }
      }
      std::uint32_t doubled_faces = detail::composed_cycle_count(
          sigma4.images().data(), tau4.data(), visited.data(), letters);
      ++face_counts[half_count(doubled_faces, "face")];
      ++seen;
    }
  }
  if (seen != result.total)
    throw EnumerationError("enumerate_unoriented_moments: stream count mismatch");
  for (std::size_t f = 1; f < face_counts.size(); ++f)
    if (face_counts[f] != 0) result.bins.add(static_cast<int>(f), face_counts[f]);
  return result;
}

} // namespace mapenum
