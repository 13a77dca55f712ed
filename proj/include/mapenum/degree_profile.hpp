#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace mapenum {

// Multiset of vertex degrees: degree d -> number of vertices of that degree.
// The enumeration input; a profile is enumerable iff the dart total is even.
class DegreeProfile {
public:
  explicit DegreeProfile(std::map<unsigned, unsigned> entries);

  // Accepts a repeated-degree list "3,3,4" or the map form "3:2,4:1"
  // (mixtures work too); canonical output is always the map form.
  static DegreeProfile parse(std::string_view text);

  const std::map<unsigned, unsigned>& entries() const { return entries_; }
  unsigned vertex_count() const;
  std::uint64_t total_darts() const; // sum of d * j_d, i.e. 2E when even
  bool is_enumerable() const { return total_darts() % 2 == 0; }
  std::uint64_t edge_count() const;  // throws ProfileError on an odd dart total

  std::string canonical_text() const; // "3:2,4:1"

  bool operator==(const DegreeProfile&) const = default;
  bool operator<(const DegreeProfile& o) const { return entries_ < o.entries_; }

private:
  std::map<unsigned, unsigned> entries_;
};

} // namespace mapenum
