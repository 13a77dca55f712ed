#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mapenum/degree_profile.hpp"
#include "mapenum/histogram.hpp"

namespace mapenum {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kEngineVersion = "0.1.0";

// Machine-readable result of one enumeration run. JSON layout (stable,
// versioned):
//   {"schema":1, "mode":"oriented", "profile":{"3":2,"4":1}, "bin_key":"g",
//    "bins":{"0":432,"1":468}, "totals":{"connected":900,"matchings":945},
//    "elapsed_ms":12, "threads":1, "engine_version":"0.1.0"}
struct RunReport {
  std::string mode; // oriented | unoriented | oriented-moments | unoriented-moments
  DegreeProfile profile;
  std::string bin_key; // "g" | "chi" | "F"
  std::map<int, std::uint64_t> bins;
  std::map<std::string, std::uint64_t> totals;
  std::uint64_t elapsed_ms = 0;
  unsigned threads = 1;
  std::string engine_version = kEngineVersion;

  bool operator==(const RunReport&) const = default;

  std::string to_json() const;
  static RunReport from_json(std::string_view text);

  std::string to_csv() const;   // header "bin,count"
  std::string to_table() const; // aligned "g=0: 432" lines plus totals
};

RunReport make_report(const DegreeProfile& profile, const GenusHistogram& histogram,
                      std::uint64_t elapsed_ms, unsigned threads);
RunReport make_report(const DegreeProfile& profile, const ChiHistogram& histogram,
                      std::uint64_t elapsed_ms, unsigned threads);
RunReport make_report(const DegreeProfile& profile, const FaceHistogram& histogram,
                      bool oriented, std::uint64_t elapsed_ms, unsigned threads);

} // namespace mapenum
