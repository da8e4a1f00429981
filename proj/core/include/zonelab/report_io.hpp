#pragma once

#include <string>

#include "zonelab/checks.hpp"
#include "zonelab/zone.hpp"

namespace zonelab {

// Every CSV emitted by the project starts with this version tag; the
// column sets below are frozen under it.
inline constexpr const char* kCsvTag = "#zonelab-v1";

// Zone rows have a fixed four-column block for tau and crossing counts
// (the sweep budget stops at d = 4); entries beyond d stay blank.
inline constexpr int kMaxTableDim = 4;

std::string zone_csv_header();
std::string zone_csv_row(const ZoneReport& report);

std::string checks_csv_header();
std::string check_csv_row(const CheckResult& result, uint64_t instance_seed);

std::string summary_csv_header();
struct SummaryRow {
  int d = 0;
  int n = 0;
  long instances = 0;
  long fails = 0;
  bool ratio_valid = false;
  Rat max_ratio;
};
std::string summary_csv_row(const SummaryRow& row);

// One border per line: "i;face_signs;cell_signs", in report order.
std::string borders_dump(const Arrangement& arr, const ZoneAnalysis& analysis);

}  // namespace zonelab
