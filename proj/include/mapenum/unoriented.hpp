#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mapenum/degree_profile.hpp"
#include "mapenum/histogram.hpp"
#include "mapenum/matching.hpp"
#include "mapenum/permutation.hpp"

namespace mapenum {

// Orientation-doubled dart space for unoriented maps: each of the 2E quotient
// darts q (0-based) splits into letters 2q (the "+" copy) and 2q+1 (the "-"
// copy), 4E letters total. In 1-based text this is the coding
// letter = 2(q-1) + b + 1 with b: "+" -> 0, "-" -> 1. phi swaps the two
// copies of every quotient dart.
struct DoubledDartSpace {
  std::uint64_t edges = 0; // E
  Permutation phi;         // (1 2)(3 4)...(4E-1 4E)

  std::size_t letter_count() const { return phi.size(); } // 4E

  static Letter plus_copy(Letter q) { return 2 * q; }
  static Letter minus_copy(Letter q) { return 2 * q + 1; }
};

// Quotient matching plus one twist bit per pair; twists[i] flags pair i of
// pairing.pairs() as orientation-reversing.
struct SignedMatching {
  Matching pairing;
  std::vector<bool> twists;
};

// Doubled space and the rotation sigma on 4E letters: sigma acts as the
// canonical quotient rotation on "+" letters and as its inverse on "-"
// letters, which makes phi * sigma * phi = sigma^-1 hold exactly.
std::pair<DoubledDartSpace, Permutation> build_doubled(const DegreeProfile& profile);

// Involution on 4E letters for a signed matching: an untwisted pair {a,b}
// lifts to (a+ b+)(a- b-), a twisted pair to (a+ b-)(a- b+).
Permutation lift(const DoubledDartSpace& space, const SignedMatching& matching);

// Structural triple conditions: phi*sigma*phi = sigma^-1 with no sigma-cycle
// phi-stabilized, phi*tau*phi = tau, both phi and tau fixed-point-free
// involutions sharing no 2-cycle. Transitivity is classify_unoriented's job.
bool validate_triple(const Permutation& phi, const Permutation& sigma,
                     const Permutation& tau);

// Euler characteristic V - E + F of the unoriented map, with V, E, F all read
// as half the corresponding cycle counts on the doubled letters; nullopt when
// <phi, sigma, tau> is not transitive.
std::optional<int> classify_unoriented(const DoubledDartSpace& space,
                                       const Permutation& sigma,
                                       const Permutation& tau);

// Counts connected unoriented maps with the given profile, binned by Euler
// characteristic, iterating all (2E-1)!! * 2^E signed matchings.
ChiHistogram enumerate_unoriented(const DegreeProfile& profile,
                                  const EnumerateOptions& options = {});
ChiHistogram enumerate_unoriented(const DegreeProfile& profile, unsigned threads);

// Moment-level histogram over all signed matchings (connected or not),
// binned by face count. Small dart totals only.
FaceHistogram enumerate_unoriented_moments(const DegreeProfile& profile);

} // namespace mapenum
