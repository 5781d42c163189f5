#pragma once

#include <fstream>
#include <string>
#include <variant>
#include <vector>

namespace bhw {

// Shortest round-trip decimal form, locale independent.
std::string format_double(double x);

using Field = std::variant<long long, double, std::string>;

// Minimal CSV emitter for long-format tables. Values never need quoting
// here (numbers and fixed identifiers only), so none is applied.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void row(const std::vector<Field>& fields);

 private:
  std::ofstream out_;
};

}  // namespace bhw
