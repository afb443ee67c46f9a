#pragma once

#include <stdexcept>
#include <string>

namespace pdml {

// Invalid numeric parameter (non-positive horizon, bad fraction, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed caller-supplied data (duplicate particles, empty splits, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tensor/layer shape mismatch; message lists both shapes.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Byte-level format violation in a file (IDX, dump, checkpoint).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// NaN/Inf detected during time integration or training.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// State computed against a different topology than the one supplied.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace pdml
