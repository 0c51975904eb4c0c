#pragma once

#include <stdexcept>
#include <string>

namespace ssg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition: letter out of range, mismatched
// groups, overlapping cones, infeasible refinement target, ...
struct DomainError : Error {
    using Error::Error;
};

// A configurable cap ran out (restriction-graph depth, stabilization depth,
// search budget). Callers decide whether this is fatal.
struct BoundsError : Error {
    using Error::Error;
};

// Text-format failure. Positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace ssg
