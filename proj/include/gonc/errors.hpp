#pragma once

#include <stdexcept>
#include <string>

namespace gonc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactnum / poly
struct NotDivisible : Error { using Error::Error; };

// series
struct NonzeroConstantTerm : Error { using Error::Error; };
struct NotReversible : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };

// operators / goncarov
struct NotDeltaOperator : Error { using Error::Error; };
struct InsufficientNodes : Error { using Error::Error; };

// enumeration
struct CapExceeded : Error { using Error::Error; };
struct NonIntegerResult : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };

// input handling (CLI specs, rational literals, JSON)
struct ParseError : Error { using Error::Error; };

}  // namespace gonc
