#pragma once

#include <cstdint>
#include <vector>

#include "mapenum/degree_profile.hpp"

namespace mapenum {

// A published oriented map count used for regression: genus_counts[g] is the
// expected number of connected genus-g maps for the profile.
struct OrientedFixture {
  const char* profile_text;
  std::vector<std::uint64_t> genus_counts;

  DegreeProfile profile() const { return DegreeProfile::parse(profile_text); }
  std::uint64_t edges() const { return profile().edge_count(); }
};

// One-vertex maps of degree 4..20.
const std::vector<OrientedFixture>& one_vertex_fixtures();
// Two same-degree vertices, degree 3..10.
const std::vector<OrientedFixture>& two_vertex_fixtures();
// 4-valent maps with 1..5 vertices.
const std::vector<OrientedFixture>& four_valent_fixtures();
// Mixed-degree spot checks.
const std::vector<OrientedFixture>& mixed_fixtures();

std::vector<OrientedFixture> all_oriented_fixtures();

} // namespace mapenum
