#include "amcm/error.hpp"

#include <utility>

namespace amcm {

namespace {

std::string render(int line, int column, const std::string& message,
                   const std::vector<std::string>& expected) {
    std::string s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    s += ": " + message;
    if (!expected.empty()) {
        s += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) s += i + 1 == expected.size() ? " or " : ", ";
            s += expected[i];
        }
        s += ")";
    }
    return s;
}

} // namespace

ParseError::ParseError(int line, int column, std::string message, std::vector<std::string> expected)
    : std::runtime_error(render(line, column, message, expected)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

} // namespace amcm
