#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace priorclust {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input: malformed files, unknown labels, mismatched label
/// sets, out-of-range parameters. Maps to process exit code 2 in the CLI.
class InputError : public Error {
public:
    using Error::Error;
};

/// Syntax error while parsing a tree or a tabular file. Carries the
/// 1-based line/column of the offending character.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError(message + " (line " + std::to_string(line) + ", column "
                     + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A flat cut at exactly K clusters is impossible because merges tied in
/// height may not be split apart. Recoverable: carries the nearest
/// attainable cluster counts on either side. Maps to exit code 3.
class CutUnattainableError : public Error {
public:
    CutUnattainableError(int requested, int nearest_below, int nearest_above,
                         std::vector<int> attainable);

    int requested() const noexcept { return requested_; }
    int nearest_below() const noexcept { return nearest_below_; }
    int nearest_above() const noexcept { return nearest_above_; }
    const std::vector<int>& attainable() const noexcept { return attainable_; }

private:
    int requested_;
    int nearest_below_;
    int nearest_above_;
    std::vector<int> attainable_;
};

/// A broken internal invariant. Seeing this is a bug in the library, not
/// in the caller's input. Maps to exit code 4.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace priorclust
