#pragma once

#include <stdexcept>
#include <string>

namespace dualresist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input: malformed graphs, out-of-range vertices, unmet preconditions.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// Numerical failure inside an otherwise valid computation. CLI exit code 1.
struct NumericError : Error {
    using Error::Error;
};

struct SelfLoop : ValidationError {
    using ValidationError::ValidationError;
};
struct DuplicateEdge : ValidationError {
    using ValidationError::ValidationError;
};
struct VertexOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};
struct Disconnected : ValidationError {
    using ValidationError::ValidationError;
};
struct EdgeNotInGraph : ValidationError {
    using ValidationError::ValidationError;
};
struct SameVertex : ValidationError {
    using ValidationError::ValidationError;
};
struct TooLarge : ValidationError {
    using ValidationError::ValidationError;
};
struct NonPositiveConductance : ValidationError {
    using ValidationError::ValidationError;
};
struct FileNotFound : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    ParseError(int line_number, const std::string& what)
        : ValidationError("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

struct ZeroStandardPart : NumericError {
    using NumericError::NumericError;
};
struct NotSymmetric : NumericError {
    using NumericError::NumericError;
};
struct NoConvergence : NumericError {
    using NumericError::NumericError;
};
struct SingularStandardPart : NumericError {
    using NumericError::NumericError;
};
struct MPDoesNotExist : NumericError {
    using NumericError::NumericError;
};
struct NotAOneInverse : NumericError {
    using NumericError::NumericError;
};
struct RoundingGuardFailed : NumericError {
    using NumericError::NumericError;
};

}  // namespace dualresist
