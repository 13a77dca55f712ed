#include "mapenum/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace mapenum {

namespace {

using Json = nlohmann::ordered_json;

Json int_keyed(const std::map<int, std::uint64_t>& bins) {
  Json out = Json::object();
  for (auto [bin, count] : bins) out[std::to_string(bin)] = count;
  return out;
}

} // namespace

std::string RunReport::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["mode"] = mode;
  Json prof = Json::object();
  for (auto [degree, count] : profile.entries())
    prof[std::to_string(degree)] = count;
  j["profile"] = prof;
  j["bin_key"] = bin_key;
  j["bins"] = int_keyed(bins);
  Json tot = Json::object();
  for (const auto& [key, value] : totals) tot[key] = value;
  j["totals"] = tot;
  j["elapsed_ms"] = elapsed_ms;
  j["threads"] = threads;
  j["engine_version"] = engine_version;
  return j.dump();
}

RunReport RunReport::from_json(std::string_view text) {
  Json j = Json::parse(text);
  if (!j.contains("schema") || j["schema"].get<int>() != kReportSchema)
    throw std::invalid_argument("RunReport: unsupported schema");
  std::map<unsigned, unsigned> entries;
  for (auto& [key, value] : j.at("profile").items())
    entries[static_cast<unsigned>(std::stoul(key))] = value.get<unsigned>();
  RunReport report{j.at("mode").get<std::string>(), DegreeProfile(std::move(entries)),
                   j.at("bin_key").get<std::string>(), {}, {},
                   j.at("elapsed_ms").get<std::uint64_t>(),
                   j.at("threads").get<unsigned>(),
                   j.at("engine_version").get<std::string>()};
  for (auto& [key, value] : j.at("bins").items())
    report.bins[std::stoi(key)] = value.get<std::uint64_t>();
  for (auto& [key, value] : j.at("totals").items())
    report.totals[key] = value.get<std::uint64_t>();
  return report;
}

std::string RunReport::to_csv() const {
  std::ostringstream out;
  out << "bin,count\n";
  for (auto [bin, count] : bins) out << bin << ',' << count << '\n';
  return out.str();
}

std::string RunReport::to_table() const {
  std::ostringstream out;
  for (auto [bin, count] : bins)
    out << bin_key << '=' << bin << ": " << count << '\n';
  for (const auto& [key, value] : totals) out << key << ": " << value << '\n';
  out << "elapsed_ms: " << elapsed_ms << "  threads: " << threads << '\n';
  return out.str();
}

namespace {

RunReport base_report(const DegreeProfile& profile, std::uint64_t elapsed_ms,
                      unsigned threads) {
  RunReport report{"", profile, "", {}, {}, elapsed_ms, threads, kEngineVersion};
  return report;
}

} // namespace

RunReport make_report(const DegreeProfile& profile, const GenusHistogram& histogram,
                      std::uint64_t elapsed_ms, unsigned threads) {
  RunReport report = base_report(profile, elapsed_ms, threads);
  report.mode = "oriented";
  report.bin_key = "g";
  report.bins = histogram.bins.bins;
  report.totals = {{"connected", histogram.total_connected},
                   {"matchings", histogram.total_matchings}};
  return report;
}

RunReport make_report(const DegreeProfile& profile, const ChiHistogram& histogram,
                      std::uint64_t elapsed_ms, unsigned threads) {
  RunReport report = base_report(profile, elapsed_ms, threads);
  report.mode = "unoriented";
  report.bin_key = "chi";
  report.bins = histogram.bins.bins;
  report.totals = {{"connected", histogram.total_connected},
                   {"signed_matchings", histogram.total_signed_matchings}};
  return report;
}

RunReport make_report(const DegreeProfile& profile, const FaceHistogram& histogram,
                      bool oriented, std::uint64_t elapsed_ms, unsigned threads) {
  RunReport report = base_report(profile, elapsed_ms, threads);
  report.mode = oriented ? "oriented-moments" : "unoriented-moments";
  report.bin_key = "F";
  report.bins = histogram.bins.bins;
  report.totals = {{"matchings", histogram.total}};
  return report;
}

} // namespace mapenum
