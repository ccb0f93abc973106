#pragma once

#include <stdexcept>
#include <string>

namespace mlns {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension disagreement between operands (matrix shapes, vector lengths).
struct ShapeError : Error {
    using Error::Error;
};

// A token-index span is out of bounds or overlaps another span.
struct SpanError : Error {
    using Error::Error;
};

// Malformed model/trace/config file; message carries the byte offset where known.
struct FormatError : Error {
    using Error::Error;
};

// Invalid argument values: bad bounds, unknown vocabulary word, exhausted
// sequence capacity, degenerate masks.
struct ArgumentError : Error {
    using Error::Error;
};

} // namespace mlns
