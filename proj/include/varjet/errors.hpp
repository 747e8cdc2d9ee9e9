// Exception hierarchy shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace varjet {

// Base class of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- truncated-series arithmetic ---
struct OrderMismatch : Error { using Error::Error; };
struct OrderExceeded : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };
struct NonzeroInnerConstant : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };

// --- jet spaces and projection ---
struct ZeroTimeVelocity : Error { using Error::Error; };
struct SingularReparam : Error { using Error::Error; };

// --- geometry / variational operators ---
struct DomainError : Error { using Error::Error; };
struct DenominatorZero : Error { using Error::Error; };
struct NullVelocity : Error { using Error::Error; };
struct SingularA : Error { using Error::Error; };
struct NotOnShell : Error { using Error::Error; };
struct GaugeViolation : Error { using Error::Error; };

// --- flow and diagnostics ---
struct DegenerateFrame : Error { using Error::Error; };
struct SignatureUnsupported : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };
struct DomainExit : Error { using Error::Error; };
struct StepFailure : Error { using Error::Error; };

} // namespace varjet
