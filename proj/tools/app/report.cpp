#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace thermoform::app {

namespace {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + file.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + file.string() + "'");
}

}  // namespace

void Report::finalize() {
  std::size_t column = value_columns.size();
  for (std::size_t i = 0; i < value_columns.size(); ++i) {
    if (value_columns[i] == residual_column) column = i;
  }
  max_residual = 0.0;
  mean_residual = 0.0;
  worst_record.clear();
  bool finite = true;
  if (column == value_columns.size() && !rows.empty()) throw std::logic_error("residual column missing");
  for (const Row& row : rows) {
    const double r = row.values.at(column);
    if (!std::isfinite(r)) {
      finite = false;
      continue;
    }
    mean_residual += r;
    if (r > max_residual || worst_record.empty()) {
      max_residual = std::max(max_residual, r);
      worst_record = row.labels.empty() ? "" : row.labels.front();
    }
  }
  if (!rows.empty()) mean_residual /= static_cast<double>(rows.size());
  pass = !error && finite && !rows.empty() && max_residual <= tolerance;
}

json to_json(const Report& report, const Provenance& provenance) {
  json records = json::array();
  for (const Report::Row& row : report.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < report.label_columns.size(); ++i) r[report.label_columns[i]] = row.labels[i];
    for (std::size_t i = 0; i < report.value_columns.size(); ++i) r[report.value_columns[i]] = row.values[i];
    records.push_back(r);
  }
  json out = {{"task_id", report.task_id},
              {"task", report.task},
              {"module", report.module},
              {"residual", report.residual_column},
              {"tolerance", report.tolerance},
              {"max_residual", report.max_residual},
              {"mean_residual", report.mean_residual},
              {"worst_record", report.worst_record},
              {"pass", report.pass},
              {"summary", report.summary},
              {"records", records},
              {"provenance",
               {{"config_sha256", provenance.config_sha256},
                {"seed", provenance.seed ? json(*provenance.seed) : json(nullptr)},
                {"task_index", provenance.task_index},
                {"config", provenance.config}}}};
  if (report.error) out["error"] = *report.error;
  return out;
}

std::string to_csv(const Report& report) {
  std::string out;
  bool first = true;
  for (const auto& name : report.label_columns) {
    out += (first ? "" : ",") + name;
    first = false;
  }
  for (const auto& name : report.value_columns) {
    out += (first ? "" : ",") + name;
    first = false;
  }
  out += '\n';
  for (const Report::Row& row : report.rows) {
    first = true;
    for (const auto& label : row.labels) {
      out += (first ? "" : ",") + label;
      first = false;
    }
    for (double v : row.values) {
      out += (first ? "" : ",") + format_number(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

void write_report(const std::filesystem::path& dir, const Report& report, const Provenance& provenance) {
  write_file(dir / (report.task_id + ".json"), to_json(report, provenance).dump(2) + "\n");
  write_file(dir / (report.task_id + ".csv"), to_csv(report));
}

}  // namespace thermoform::app
