#ifndef STARPRISM_ERRORS_HPP
#define STARPRISM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starprism {

// Base for all library errors so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter is outside its documented domain (n = 0, bad permutation, ...).
struct InvalidParameterError : Error {
    using Error::Error;
};

// (n, m) lies outside the range the closed forms are stated for.
struct TheoremRangeError : InvalidParameterError {
    using InvalidParameterError::InvalidParameterError;
};

// Distance computation hit an unreachable pair.
struct DisconnectedGraphError : Error {
    DisconnectedGraphError(int from, int to, const std::string& msg)
        : Error(msg), from_vertex(from), to_vertex(to) {}
    int from_vertex;
    int to_vertex;
};

// A labeling is structurally unusable (missing or negative labels).
struct MalformedLabelingError : Error {
    using Error::Error;
};

// Instance exceeds the brute-force oracle's hard size cap.
struct OracleSizeError : Error {
    using Error::Error;
};

// Bad command-line usage or unreadable/ill-formed input file.
struct UsageError : Error {
    using Error::Error;
};

} // namespace starprism

#endif // STARPRISM_ERRORS_HPP
