#include "zonelab/report_io.hpp"

namespace zonelab {

namespace {

void append_fixed_block(std::string& row, std::span<const long> values) {
  for (int i = 0; i < kMaxTableDim; ++i) {
    row.push_back(',');
    if (i < static_cast<int>(values.size()))
      row += std::to_string(values[static_cast<size_t>(i)]);
  }
}

}  // namespace

std::string zone_csv_header() {
  std::string h = kCsvTag;
  h += "\nn,d,zone_cells";
  for (int i = 0; i < kMaxTableDim; ++i) h += ",tau_" + std::to_string(i);
  h += ",C_Z";
  for (int i = 0; i < kMaxTableDim; ++i) h += ",crossing_" + std::to_string(i);
  h += ",ratio_CZ\n";
  return h;
}

std::string zone_csv_row(const ZoneReport& report) {
  std::string row = std::to_string(report.n) + "," + std::to_string(report.d) +
                    "," + std::to_string(report.zone_cell_count);
  append_fixed_block(row, report.tau);
  row += "," + std::to_string(report.outer_complexity);
  append_fixed_block(row, report.crossing_faces);
  row.push_back(',');
  if (report.ratio_valid) row += rat_to_string(report.ratio_cz);
  row.push_back('\n');
  return row;
}

std::string checks_csv_header() {
  return std::string(kCsvTag) +
         "\ncheck_id,status,lhs,rhs,n,d,i,instance_seed\n";
}

std::string check_csv_row(const CheckResult& r, uint64_t instance_seed) {
  std::string row = r.check_id;
  row += ",";
  row += check_status_name(r.status);
  row += ",";
  if (r.status != CheckStatus::NotApplicable) row += rat_to_string(r.lhs);
  row += ",";
  if (r.status == CheckStatus::Pass || r.status == CheckStatus::Fail)
    row += rat_to_string(r.rhs);
  row += "," + std::to_string(r.n) + "," + std::to_string(r.d) + ",";
  if (r.i >= 0) row += std::to_string(r.i);
  row += "," + std::to_string(instance_seed) + "\n";
  return row;
}

std::string summary_csv_header() {
  return std::string(kCsvTag) + "\nd,n,instances,fails,max_ratio_CZ\n";
}

std::string summary_csv_row(const SummaryRow& row) {
  std::string s = std::to_string(row.d) + "," + std::to_string(row.n) + "," +
                  std::to_string(row.instances) + "," +
                  std::to_string(row.fails) + ",";
  if (row.ratio_valid) s += rat_to_string(row.max_ratio);
  s.push_back('\n');
  return s;
}

std::string borders_dump(const Arrangement& arr, const ZoneAnalysis& analysis) {
  std::string out;
  for (size_t i = 0; i < analysis.borders.size(); ++i) {
    for (const Border& b : analysis.borders[i]) {
      out += std::to_string(i);
      out.push_back(';');
      out += arr.faces()[static_cast<size_t>(b.face_index)].signs.str();
      out.push_back(';');
      out += arr.faces()[static_cast<size_t>(b.cell_index)].signs.str();
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace zonelab
