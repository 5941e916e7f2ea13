#pragma once

#include <stdexcept>
#include <string>

namespace hjmfdr {

// Curve left the model domain (e.g. short rate at or below the floor).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A shift or flow asked for more horizon padding than the grid carries.
struct PadExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A basis or probe set is numerically rank-deficient.
struct ConditioningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; message carries the offending line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hjmfdr
