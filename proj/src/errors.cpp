#include "cremona/errors.hpp"

namespace cremona {

namespace {

std::string format_parse_error(const std::string& message, int line, int column,
                               const std::vector<std::string>& expected) {
  std::string out = "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k > 0) out += k + 1 == expected.size() ? " or " : ", ";
      out += expected[k];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string message, int line, int column, std::vector<std::string> expected)
    : Error(format_parse_error(message, line, column, expected)),
      detail_(std::move(message)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace cremona
