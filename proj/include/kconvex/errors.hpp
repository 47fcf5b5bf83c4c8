#pragma once

#include <stdexcept>
#include <string>

namespace kconvex {

struct ScaleMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidPolygonError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An arc of the requested radius cannot span the named side.
struct SpanError : std::domain_error {
    int side_index;
    SpanError(int side, const std::string& what)
        : std::domain_error(what), side_index(side) {}
};

struct HypothesisViolationError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kconvex
