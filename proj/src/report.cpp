#include "permsolv/report.hpp"

#include <cstdio>

namespace permsolv {

Record &Record::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

Record &Record::add(std::string key, std::uint64_t value) {
  return add(std::move(key), std::to_string(value));
}

Record &Record::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

Record &Record::add(std::string key, const Permutation &value) {
  return add(std::move(key), to_cycle_string(value));
}

Record &Record::append(const Record &other, std::string_view prefix) {
  for (const auto &[k, v] : other.fields)
    fields.emplace_back(std::string(prefix) + k, v);
  return *this;
}

std::string Record::value(std::string_view key) const {
  for (const auto &[k, v] : fields)
    if (k == key)
      return v;
  return {};
}

std::string write_report(const Record &record, ReportFormat format) {
  std::string out;
  const char *separator = format == ReportFormat::machine ? "=" : ": ";
  for (const auto &[k, v] : record.fields)
    out += k + separator + v + "\n";
  return out;
}

Record to_record(const CriterionReport &report, bool timing) {
  Record r;
  r.add("criterion", report.criterion);
  r.add("verdict", std::string(to_string(report.verdict)));
  for (const auto &w : report.witness)
    r.add("witness." + w.role, w.element);
  for (const auto &[k, v] : report.details)
    r.add(k, v);
  for (std::size_t i = 0; i < report.assignments.size(); ++i)
    for (const auto &w : report.assignments[i])
      r.add("assignment." + std::to_string(i + 1) + "." + w.role, w.element);
  r.add("pairs_tested", report.stats.pairs_tested);
  r.add("subgroups_generated", report.stats.subgroups_generated);
  if (timing) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", report.stats.wall_time_ms);
    r.add("wall_time_ms", std::string(buffer));
  }
  return r;
}

Record to_record(const PrimePairVerdict &verdict) {
  Record r;
  r.add("a", verdict.a);
  r.add("b", verdict.b);
  r.add("result", std::string(to_string(verdict.result)));
  if (verdict.x) {
    r.add("witness.x", *verdict.x);
    r.add("witness.y", *verdict.y);
    r.add("subgroup_order", verdict.subgroup_order);
  }
  r.add("pairs_checked", verdict.pairs_checked);
  return r;
}

} // namespace permsolv
