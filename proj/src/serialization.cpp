#include "discres/serialization.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace discres {

std::string kind_str(CountKind kind) {
  return kind == CountKind::discriminant ? "disc" : "res";
}

CountKind parse_kind(const std::string& text) {
  if (text == "disc") return CountKind::discriminant;
  if (text == "res") return CountKind::resultant;
  throw std::invalid_argument("kind must be 'disc' or 'res', got '" + text + "'");
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string count_csv_header() { return "kind,n,Q,threshold,count,total,elapsed_s"; }

std::string count_csv_row(const CountRecord& record, bool with_timing) {
  std::ostringstream out;
  out << kind_str(record.kind) << ',' << record.n << ',' << record.q << ','
      << rational_str(record.threshold) << ',' << record.count.get_str() << ','
      << record.total_enumerated.get_str() << ','
      << format_double(with_timing ? record.elapsed_s : 0.0);
  return out.str();
}

nlohmann::json count_json(const CountRecord& record, bool with_timing) {
  return nlohmann::json{{"kind", kind_str(record.kind)},
                        {"n", record.n},
                        {"Q", record.q},
                        {"threshold", rational_str(record.threshold)},
                        {"count", record.count.get_str()},
                        {"total", record.total_enumerated.get_str()},
                        {"elapsed_s", with_timing ? record.elapsed_s : 0.0}};
}

namespace {

nlohmann::json rational_array(const std::vector<Rational>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& v : values) arr.push_back(rational_str(v));
  return arr;
}

}  // namespace

nlohmann::json profile_json(const ExponentProfile& profile) {
  nlohmann::json j{{"n", profile.n},
                   {"v", rational_str(profile.v)},
                   {"d", rational_array(profile.d)},
                   {"vprofile", rational_array(profile.vprofile)},
                   {"exponent", rational_str(profile.exponent)}};
  if (profile.gamma_warning) j["gamma_warning"] = true;
  return j;
}

nlohmann::json profile_json(const ResultantProfile& profile) {
  return nlohmann::json{
      {"n", profile.n},
      {"w", rational_str(profile.w)},
      {"d", rational_array(profile.d)},
      {"t", rational_str(profile.t)},
      {"case", profile.case_tag == ResultantProfile::Case::low_w ? "low_w" : "high_w"},
      {"exponent", rational_str(profile.exponent)}};
}

nlohmann::json report_json(const BoundReport& report) {
  return nlohmann::json{{"check", report.check},     {"inputs", report.inputs},
                        {"lhs", report.lhs},         {"rhs", report.rhs},
                        {"pass", report.pass},       {"tolerance", report.tolerance},
                        {"applicable", report.applicable}};
}

std::string sweep_csv_header() { return "check,samples,applicable,failures"; }

std::string sweep_csv_row(const SweepSummary& summary) {
  std::ostringstream out;
  out << summary.check << ',' << summary.samples << ',' << summary.applicable << ','
      << summary.failures;
  return out.str();
}

}  // namespace discres
