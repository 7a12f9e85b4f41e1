#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace jostlab::cli {

//! Shortest decimal that reads back to the same double ("nan", "inf", "-inf" otherwise).
std::string format_number(double v);

//! Inverse of format_number. Throws IoError on malformed text.
double parse_number(std::string_view s);

//! Comma-separated table with a header row. Cells are written verbatim; no quoting.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  //! Appends a row; throws PreconditionError on a width mismatch.
  void add(std::vector<std::string> row);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string str() const;

  //! Column by name, parsed with parse_number.
  std::vector<double> numbers(const std::string& column) const;

  static CsvTable parse(const std::string& text);
  static CsvTable read(const std::filesystem::path& path);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

//! Writes bytes to path, replacing any previous file. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view bytes);

std::string read_file(const std::filesystem::path& path);

//! Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace jostlab::cli
