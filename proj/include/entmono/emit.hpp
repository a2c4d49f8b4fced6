#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace entmono {

enum class Format { Csv, Json };

Format parse_format(std::string_view name);

using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

// 12 significant digits, shared by both formats.
std::string format_number(double v);

std::string render(const Table& table, Format format);

// Writes to `path`, or to stdout when the path is empty or "-".
void write_output(const std::string& text, const std::string& path);
void emit(const Table& table, Format format, const std::string& path);

}  // namespace entmono
