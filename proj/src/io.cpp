#include "bhwalk/io.hpp"

#include <cstdio>

#include "bhwalk/errors.hpp"

namespace bhw {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path) {
  if (!out_) throw Error("cannot open output file: " + path);
  row(std::vector<Field>(header.begin(), header.end()));
}

void CsvWriter::row(const std::vector<Field>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    if (const auto* n = std::get_if<long long>(&fields[i]))
      out_ << *n;
    else if (const auto* d = std::get_if<double>(&fields[i]))
      out_ << format_double(*d);
    else
      out_ << std::get<std::string>(fields[i]);
  }
  out_ << '\n';
  if (!out_) throw Error("write failed");
}

}  // namespace bhw
