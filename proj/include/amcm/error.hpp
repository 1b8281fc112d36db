#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace amcm {

// Raised by every text parser in the library (programs, types, templates,
// content files). Line and column are 1-based; column is 0 when only the
// line is known.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, std::string message,
               std::vector<std::string> expected = {});

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    int line_;
    int column_;
    std::string message_;
    std::vector<std::string> expected_;
};

// Well-formed in the extended language but outside the strict grammar.
class StrictModeError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace amcm
