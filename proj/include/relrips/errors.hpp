#pragma once

#include <stdexcept>
#include <string>

namespace relrips {

// Base class for all toolkit errors. CLI maps subclasses to exit codes.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid input data: bad presentation file, unknown symbol, rule violations,
// queries outside the constructed objects. Exit code 1.
class domain_error : public error {
public:
    using error::error;
};

// Presentation file syntax/validation failure with source location.
class parse_error : public domain_error {
public:
    parse_error(const std::string& msg, int line, int column)
        : domain_error("parse error at line " + std::to_string(line) + ", column " +
                       std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A configured cap (vertices, cliques, enumerated paths, matrix size) was hit.
// Exit code 3.
class resource_limit_error : public error {
public:
    using error::error;
};

}  // namespace relrips
