#pragma once

#include <stdexcept>
#include <string>

namespace cgroups {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The input table fails one of the group axioms; the message names the
// first violating entry or triple.
struct NotAGroup : GroupError {
    using GroupError::GroupError;
};

struct OrderCapExceeded : GroupError {
    using GroupError::GroupError;
};

struct InvalidAlphaCParams : GroupError {
    using GroupError::GroupError;
};

struct NotNormal : GroupError {
    using GroupError::GroupError;
};

struct NotAbelian : GroupError {
    using GroupError::GroupError;
};

struct SearchCapExceeded : GroupError {
    using GroupError::GroupError;
};

struct EnumerationOverflow : GroupError {
    using GroupError::GroupError;
};

struct ParseError : GroupError {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : GroupError(msg + " at line " + std::to_string(line_) + ", column " +
                     std::to_string(col_)),
          line(line_),
          column(col_) {}
};

struct OrderMismatch : GroupError {
    using GroupError::GroupError;
};

struct VerificationFailure : GroupError {
    using GroupError::GroupError;
};

}  // namespace cgroups
