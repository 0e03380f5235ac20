#pragma once

#include <stdexcept>
#include <string>

namespace addchow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arithmetic misuse: division by zero, unknown variable, invalid construction
struct DomainError : Error {
    using Error::Error;
};

// a face does not meet the cycle properly (or a constant coordinate sits on a face)
struct ImproperIntersection : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// degree cap or size cap exceeded
struct SizeLimitError : Error {
    using Error::Error;
};

} // namespace addchow
