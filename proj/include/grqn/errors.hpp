#pragma once

#include <stdexcept>
#include <string>

namespace grqn {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotContained : Error { using Error::Error; };
struct InvalidStrip : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotADifferential : Error { using Error::Error; };
struct GridTooSmall : Error { using Error::Error; };
struct ParityViolation : Error { using Error::Error; };
struct InvalidCell : Error { using Error::Error; };
struct CellTooLarge : Error { using Error::Error; };
struct CacheCorrupt : Error { using Error::Error; };
struct LowerBoundViolation : Error { using Error::Error; };
struct OracleMismatch : Error { using Error::Error; };

}  // namespace grqn
