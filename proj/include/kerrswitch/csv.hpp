#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kerr::csv {

/// Quotes a field when it contains a comma, quote or line break.
std::string quote(std::string_view field);

/// 15 significant digits, '.' separator regardless of locale.
std::string number(double value);

/// Builds a CSV document in memory: header mandatory, every row
/// newline-terminated.
class Writer {
 public:
  explicit Writer(std::vector<std::string> header);

  void row(const std::vector<std::string>& fields);
  std::size_t rows() const noexcept { return rows_; }
  const std::string& text() const noexcept { return text_; }

 private:
  std::size_t columns_;
  std::size_t rows_ = 0;
  std::string text_;
};

}  // namespace kerr::csv
