#pragma once

#include <stdexcept>

namespace teflow {

// Base of all recoverable teflow errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };             // malformed input text
struct SchemaError : Error { using Error::Error; };            // bad header, duplicate labels/dates
struct DomainError : Error { using Error::Error; };            // value outside the valid domain
struct ShapeError : Error { using Error::Error; };             // mismatched lengths/sizes
struct InsufficientDataError : Error { using Error::Error; };
struct DegenerateSeriesError : Error { using Error::Error; };  // constant series cannot be binned
struct OutOfRangeError : Error { using Error::Error; };        // value outside a fitted bin range
struct EmptyColumnError : Error { using Error::Error; };
struct ContractError : Error { using Error::Error; };          // wrong matrix kind, config misuse
struct ValidationError : Error { using Error::Error; };        // invalid spec/config fields
struct NoValidWindowsError : Error { using Error::Error; };

} // namespace teflow
