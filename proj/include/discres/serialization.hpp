#pragma once

#include <string>

#include <json.hpp>

#include "discres/enumeration.hpp"
#include "discres/exponents.hpp"
#include "discres/verification.hpp"

namespace discres {

std::string kind_str(CountKind kind);             // "disc" / "res"
CountKind parse_kind(const std::string& text);

// Floats carry 12 significant digits; counts are decimal integers; rationals
// are "p/q" strings. Timing is suppressed (written as 0) unless requested,
// so default output is byte-identical across runs and worker counts.
std::string format_double(double value);
std::string count_csv_header();
std::string count_csv_row(const CountRecord& record, bool with_timing = false);
nlohmann::json count_json(const CountRecord& record, bool with_timing = false);

nlohmann::json profile_json(const ExponentProfile& profile);
nlohmann::json profile_json(const ResultantProfile& profile);

nlohmann::json report_json(const BoundReport& report);
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepSummary& summary);

}  // namespace discres
