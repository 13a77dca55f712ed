#pragma once

#include <optional>

#include "mapenum/degree_profile.hpp"
#include "mapenum/histogram.hpp"
#include "mapenum/matching.hpp"
#include "mapenum/permutation.hpp"

namespace mapenum {

// Canonical vertex rotation on the 2E darts: vertices in ascending degree
// order, each taking the next consecutive block of letters as one increasing
// cycle. {3:2,4:1} gives (1 2 3)(4 5 6)(7 8 9 10) in 1-based text.
Permutation build_sigma(const DegreeProfile& profile);

// Genus of the map (sigma, tau), or nullopt when <sigma, tau> is not
// transitive (the gluing is disconnected).
std::optional<unsigned> classify(const Permutation& sigma, const Matching& tau);

// Counts connected oriented maps with the given degree profile, binned by
// genus, by iterating every matching on the 2E darts.
GenusHistogram enumerate_oriented(const DegreeProfile& profile,
                                  const EnumerateOptions& options = {});
GenusHistogram enumerate_oriented(const DegreeProfile& profile, unsigned threads);

// Same count against an explicit rotation; the histogram depends only on the
// cycle type of sigma.
GenusHistogram enumerate_oriented(const Permutation& sigma,
                                  const EnumerateOptions& options = {});

// Moment-level histogram: every matching (connected or not) binned by face
// count. Small dart totals only.
FaceHistogram enumerate_oriented_moments(const DegreeProfile& profile);

} // namespace mapenum
