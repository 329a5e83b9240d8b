#ifndef PERMSOLV_REPORT_HPP
#define PERMSOLV_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permsolv/criteria.hpp"
#include "permsolv/witness.hpp"

namespace permsolv {

enum class ReportFormat { text, machine };

/// Ordered key/value fields; the order is the output order.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record &add(std::string key, std::string value);
  Record &add(std::string key, std::uint64_t value);
  Record &add(std::string key, bool value);
  Record &add(std::string key, const Permutation &value);
  Record &add(std::string key, const char *value) {
    return add(std::move(key), std::string(value));
  }
  /// Appends other's fields with `prefix` prepended to each key.
  Record &append(const Record &other, std::string_view prefix = {});
  std::string value(std::string_view key) const;
};

/// Machine format: one `key=value` line per field, byte-stable for equal
/// records. Text format: `key: value` lines.
std::string write_report(const Record &record, ReportFormat format);

/// Fields: criterion, verdict, witness.<role>, details, then stats. Wall time
/// is only included with `timing`, so machine output stays reproducible.
Record to_record(const CriterionReport &report, bool timing = false);
Record to_record(const PrimePairVerdict &verdict);

} // namespace permsolv

#endif
