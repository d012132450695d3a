#include "hermax/csv.hpp"

#include <stdexcept>

namespace hermax {

namespace {
void write_cells(std::FILE* f, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) std::fputc(',', f);
    std::fputs(cells[i].c_str(), f);
  }
  std::fputs("\r\n", f);
}
}  // namespace

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : n_cols_(header.size()) {
  f_ = std::fopen(path.c_str(), "wb");
  if (!f_) throw std::runtime_error("cannot open for writing: " + path);
  write_cells(f_, header);
}

CsvWriter::~CsvWriter() {
  if (f_) std::fclose(f_);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != n_cols_)
    throw std::runtime_error("csv row width mismatch");
  write_cells(f_, cells);
}

void CsvWriter::flush() {
  if (f_) std::fflush(f_);
}

}  // namespace hermax
