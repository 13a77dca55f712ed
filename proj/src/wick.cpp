#include "mapenum/wick.hpp"

#include <stdexcept>

#include "mapenum/matching.hpp"
#include "mapenum/oriented.hpp"

namespace mapenum {

namespace {

enum class Ensemble { Hermitian, Symmetric };

// Letters carry one index slot each; the factor for letter m is M[idx[m]][
// idx[sigma[m]]]. For each pairing the delta products are evaluated per index
// tuple, summed over all dimension^darts tuples.
BigRational moment_by_index_sum(const MomentSpec& spec, Ensemble ensemble) {
  const std::uint64_t darts = spec.profile.total_darts();
  if (darts > 8)
    throw std::invalid_argument("wick moment: dart total above 8 unsupported");
  if (spec.dimension < 1 || spec.dimension > 4)
    throw std::invalid_argument("wick moment: dimension must be in 1..4");
  if (darts % 2 != 0) return BigRational(0); // odd Gaussian moments vanish

  Permutation sigma = build_sigma(spec.profile);
  const std::uint32_t n = static_cast<std::uint32_t>(darts);
  const std::uint32_t dim = spec.dimension;
  const std::uint64_t edges = darts / 2;

  std::uint64_t weighted_tuples = 0;
  std::vector<std::uint32_t> index(n, 0);
  MatchingStream pairings(n);
  while (pairings.advance()) {
    auto pairs = pairings.pairs();
    std::fill(index.begin(), index.end(), 0);
    for (;;) {
      std::uint64_t weight = 1;
      for (auto [a, b] : pairs) {
        std::uint64_t w;
        bool straight = index[a] == index[sigma(b)] && index[sigma(a)] == index[b];
        if (ensemble == Ensemble::Hermitian) {
          w = straight ? 1 : 0;
        } else {
          bool flipped = index[a] == index[b] && index[sigma(a)] == index[sigma(b)];
          w = static_cast<std::uint64_t>(straight) + static_cast<std::uint64_t>(flipped);
        }
        if (w == 0) {
          weight = 0;
          break;
        }
        weight *= w;
      }
      weighted_tuples = checked_add(weighted_tuples, weight);
      // odometer over index tuples
      std::uint32_t slot = 0;
      while (slot < n && ++index[slot] == dim) index[slot++] = 0;
      if (slot == n) break;
    }
  }
  return BigRational(BigInt(weighted_tuples),
                     big_power(BigInt(dim), static_cast<unsigned>(edges)));
}

} // namespace

BigRational gue_moment(const MomentSpec& spec) {
  return moment_by_index_sum(spec, Ensemble::Hermitian);
}

BigRational goe_moment(const MomentSpec& spec) {
  return moment_by_index_sum(spec, Ensemble::Symmetric);
}

BigRational face_power_sum(const FaceHistogram& histogram, unsigned dimension,
                           std::uint64_t edges) {
  BigRational sum(0);
  BigInt n_to_edges = big_power(BigInt(dimension), static_cast<unsigned>(edges));
  for (auto [faces, count] : histogram.bins.bins) {
    BigInt n_to_faces = big_power(BigInt(dimension), static_cast<unsigned>(faces));
    sum += BigRational(count * n_to_faces, n_to_edges);
  }
  return sum;
}

} // namespace mapenum
