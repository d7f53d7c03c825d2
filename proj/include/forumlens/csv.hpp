#pragma once

// Minimal RFC 4180 CSV reading and writing. Numbers are written in the
// shortest round-trip form so output bytes are stable.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace forumlens::csv {

using Row = std::vector<std::string>;

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// False at end of input. Quoted fields may span lines. Throws ParseError.
  bool next(Row& row);
  /// Line number where the last returned row started (1-based).
  std::size_t line() const noexcept { return row_line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::size_t row_line_ = 0;
};

/// Reads the header row and maps names to column positions; throws
/// ParseError when a required column is absent.
class Header {
 public:
  Header() = default;
  explicit Header(Row names) : names_(std::move(names)) {}
  std::size_t require(std::string_view name) const;
  /// names().size() when absent.
  std::size_t find(std::string_view name) const noexcept;
  const Row& names() const noexcept { return names_; }

 private:
  Row names_;
};

std::string escape(std::string_view field);
std::string format_number(double value);
std::string format_number(long long value);
inline std::string format_number(int value) { return format_number(static_cast<long long>(value)); }
inline std::string format_number(unsigned long value) {
  return format_number(static_cast<long long>(value));
}
inline std::string format_number(unsigned long long value) {
  return format_number(static_cast<long long>(value));
}
inline std::string format_number(long value) { return format_number(static_cast<long long>(value)); }

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  void row(const Row& fields);
  void row(std::initializer_list<std::string_view> fields);

 private:
  std::ostream& out_;
};

}  // namespace forumlens::csv
