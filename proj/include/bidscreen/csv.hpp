#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bidscreen {

/// Minimal CSV support: UTF-8, header row required, '.' decimal separator,
/// no thousands separators. Quoted fields with embedded commas are accepted
/// on input; output quotes only when needed.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by (case-insensitive) name; -1 when absent.
  int column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
CsvTable read_csv_text(const std::string& text);

void write_csv(const std::string& path, const CsvTable& table);
std::string csv_to_string(const CsvTable& table);

std::vector<std::string> split_csv_line(const std::string& line);
std::string csv_escape(const std::string& field);

/// Fixed 6-significant-digit rendering used for all floating point CSV cells.
std::string format_g6(double v);

std::optional<double> parse_double(const std::string& s);
std::optional<long long> parse_int(const std::string& s);

}  // namespace bidscreen
