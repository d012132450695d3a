#pragma once

#include <cstdio>
#include <string>
#include <vector>

// RFC-4180-style CSV output, header row mandatory, floats printed with 17
// significant digits so files round-trip bit exactly.

namespace hermax {

inline std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<std::string>& cells);
  void flush();
  bool ok() const { return f_ != nullptr; }

 private:
  std::FILE* f_ = nullptr;
  std::size_t n_cols_ = 0;
};

}  // namespace hermax
