#include "mapenum/degree_profile.hpp"

#include <charconv>
#include <sstream>

#include "mapenum/errors.hpp"

namespace mapenum {

DegreeProfile::DegreeProfile(std::map<unsigned, unsigned> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw ProfileError("degree profile: at least one vertex required");
  for (auto [degree, count] : entries_) {
    if (degree == 0) throw ProfileError("degree profile: degrees must be >= 1");
    if (count == 0) throw ProfileError("degree profile: vertex counts must be >= 1");
  }
}

namespace {

unsigned parse_uint(std::string_view token, const char* what) {
  unsigned value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ProfileError(std::string("degree profile: bad ") + what + " '" +
                       std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace

DegreeProfile DegreeProfile::parse(std::string_view text) {
  std::map<unsigned, unsigned> entries;
  std::size_t pos = 0;
  if (trim(text).empty()) throw ProfileError("degree profile: empty");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                              : comma - pos));
    if (token.empty()) throw ProfileError("degree profile: empty entry");
    std::size_t colon = token.find(':');
    if (colon == std::string_view::npos) {
      entries[parse_uint(token, "degree")] += 1;
    } else {
      unsigned degree = parse_uint(trim(token.substr(0, colon)), "degree");
      unsigned count = parse_uint(trim(token.substr(colon + 1)), "vertex count");
      entries[degree] += count;
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DegreeProfile(std::move(entries));
}

unsigned DegreeProfile::vertex_count() const {
  unsigned v = 0;
  for (auto [degree, count] : entries_) v += count;
  return v;
}

std::uint64_t DegreeProfile::total_darts() const {
  std::uint64_t darts = 0;
  for (auto [degree, count] : entries_)
    darts += static_cast<std::uint64_t>(degree) * count;
  return darts;
}

std::uint64_t DegreeProfile::edge_count() const {
  std::uint64_t darts = total_darts();
  if (darts % 2 != 0)
    throw ProfileError("degree profile: odd dart total " + std::to_string(darts) +
                       " cannot form edges");
  return darts / 2;
}

std::string DegreeProfile::canonical_text() const {
  std::ostringstream out;
  bool first = true;
  for (auto [degree, count] : entries_) {
    if (!first) out << ',';
    out << degree << ':' << count;
    first = false;
  }
  return out.str();
}

} // namespace mapenum
